"""Smoke tests for the Python module: worked examples of every bound kernel."""

import json

import numpy as np
import pytest

try:
    import lveval as lv
except ImportError:
    import _lveval as lv


def test_normalize_percent():
    assert lv.normalize_percent(0.5523) == pytest.approx(55.23)
    assert lv.percent_string(0.5523) == "55.23"
    with pytest.raises(lv.InputError):
        lv.normalize_percent(1.5)


def test_compute_rr_ub():
    assert lv.compute_rr_ub(list(range(1, 21)), 0.10)["value"] == pytest.approx(19.5)
    assert lv.compute_rr_ub([7.0] * 5)["value"] == pytest.approx(7.0)


def test_match_events_and_inversions():
    matrix = np.array([[0.9, 0.1], [0.8, 0.7]])
    assert lv.match_events(matrix) == [(0, 0), (1, 1)]
    assert lv.match_events(np.eye(3)) == [(0, 0), (1, 1), (2, 2)]
    assert lv.count_inversions([2, 0, 3, 1]) == 3


def test_event_alignment_score():
    score = lv.event_alignment_score(
        [0.8, 0.6, 0.9],
        [[0.5] * 4, [0.75] * 4, [1.0] * 4],
        inversions=1,
    )
    assert score == pytest.approx((2.0 / 3.0) * (0.4 + 0.45 + 0.9) / 3.0, abs=1e-12)


def test_smoothness_from_sequence():
    assert lv.smoothness_from_sequence([0.4, 0.1, 0.1, 0.4]) == pytest.approx(0.00442, abs=1e-5)
    assert lv.smoothness_from_sequence([0.25] * 4) == 1.0


def test_temporal_flickering():
    static = np.full((10, 32, 32), 96, dtype=np.uint8)
    assert lv.temporal_flickering(static, fps=8.0)["normalized"] == 1.0
    alternating = np.empty((10, 32, 32), dtype=np.uint8)
    alternating[0::2] = 100
    alternating[1::2] = 110
    score = lv.temporal_flickering(alternating, fps=8.0)
    assert score["normalized"] == pytest.approx(1.0 - 10.0 / 255.0, abs=1e-9)
    assert score["diagnostics"]["note"] == "no-static-fallback"


def test_clarity_and_herd():
    clarity = lv.clarity_score([[3, 4, 2, 3], [2, 4, 2, 1]])
    assert clarity["overall"] == pytest.approx(0.65625, abs=1e-12)

    d = "emotional-response"
    herd = lv.herd_score(
        [
            (d, "positive", "yes"),
            (d, "positive", "yes"),
            (d, "positive", "no"),
            (d, "negative", "no"),
            (d, "negative", "yes"),
            (d, "positive", "unclear"),
        ]
    )
    assert herd["overall"] == pytest.approx(0.6, abs=1e-12)
    all_unclear = lv.herd_score([(d, "positive", "unclear")] * 3)
    assert all_unclear["status"] == "not_applicable"


def test_aggregation_and_correlation():
    herd_row = [65.28, 21.94, 31.04, 72.99, 49.31, 35.56, 73.89]
    value = lv.aggregate_dimension([v / 100.0 for v in herd_row])
    assert abs(value * 100.0 - 50.00) < 0.005
    overall = lv.aggregate_overall([0.6836, 0.5523, 0.7326, 0.7390, 0.5000])
    assert abs(overall * 100.0 - 64.15) < 0.005

    corr = lv.correlate([1.0, 2.0, 3.0], [1.0, 3.0, 2.0])
    assert corr["pearson"] == pytest.approx(0.5, abs=1e-9)
    assert corr["spearman"] == pytest.approx(0.5, abs=1e-9)
    assert corr["kendall"] == pytest.approx(1.0 / 3.0, abs=1e-9)


def test_y4m_round_trip(tmp_path):
    frames = np.random.default_rng(7).integers(0, 255, size=(6, 24, 32), dtype=np.uint8)
    path = tmp_path / "clip.y4m"
    lv.write_y4m(frames, 8.0, path)
    back, fps = lv.read_y4m(path)
    assert fps == pytest.approx(8.0)
    assert np.array_equal(frames, back)


def _herd_questions():
    dimensions = [
        "emotional-response",
        "narrative-flow",
        "character-development",
        "visual-style",
        "themes",
        "interpretive-depth",
        "overall-impression",
    ]
    questions = []
    for dim in dimensions:
        for q in range(6):
            negative = q % 2 == 1
            text = (
                f"Did the video fail to express {dim} aspect {q}?"
                if negative
                else f"Did the video express {dim} aspect {q}?"
            )
            questions.append(
                {"dimension": dim, "text": text, "polarity": "negative" if negative else "positive"}
            )
    return questions


def test_full_mock_run(tmp_path):
    suite = {"version": "1", "samples": []}
    videos = tmp_path / "videos"
    videos.mkdir()
    rng = np.random.default_rng(3)
    for i in range(2):
        sample_id = f"py{i}"
        suite["samples"].append(
            {
                "id": sample_id,
                "theme": "food",
                "prompt_text": f"A cooking scene {sample_id} in a bright kitchen.",
                "prompt_base": f"A cook prepares a dish in scene {sample_id}, then plates it.",
                "ground_truth_events": [
                    {
                        "event": f"Cooking starts in {sample_id}",
                        "subject": "cook",
                        "setting": "kitchen",
                        "action": "prepares a dish",
                        "camera motion": "static",
                    },
                    {
                        "event": f"Plating finishes in {sample_id}",
                        "subject": "cook",
                        "setting": "kitchen pass",
                        "action": "plates the dish",
                        "camera motion": "panning",
                    },
                ],
                "herd_questions": _herd_questions(),
                "human_actions": [{"subject": "cook", "action": "plates the dish"}],
            }
        )
        frames = np.concatenate(
            [
                np.full((16, 32, 32), 60 + 20 * i, dtype=np.uint8),
                rng.integers(0, 255, size=(16, 32, 32), dtype=np.uint8) // 2 + 120,
            ]
        )
        lv.write_y4m(frames, 8.0, videos / f"{sample_id}.y4m")

    suite_path = tmp_path / "suite.json"
    suite_path.write_text(json.dumps(suite))
    assert lv.validate_suite_file(suite_path) == []

    summary = lv.run_evaluation(suite_path, videos, tmp_path / "out")
    assert summary["complete"]
    assert summary["sample_errors"] == 0
    report = json.loads((tmp_path / "out" / "report.json").read_text())
    assert len(report["samples"]) == 2
    for sample in report["samples"]:
        for metric_id, metric in sample["metrics"].items():
            if metric["status"] == "ok":
                assert 0.0 <= metric["normalized"] <= 1.0, metric_id
