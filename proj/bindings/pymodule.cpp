#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "lveval/aggregate.hpp"
#include "lveval/alignment.hpp"
#include "lveval/clarity_herd.hpp"
#include "lveval/hungarian.hpp"
#include "lveval/runner.hpp"
#include "lveval/static_quality.hpp"
#include "lveval/suite.hpp"
#include "lveval/temporal.hpp"

namespace py = pybind11;
using namespace lveval;

namespace {

Video video_from_array(py::array_t<std::uint8_t, py::array::c_style | py::array::forcecast> frames,
                       double fps) {
  if (frames.ndim() != 3) throw InputError("frames must have shape (T, H, W) uint8");
  Video v;
  v.fps = fps;
  auto shape = frames.shape();
  long t_count = long(shape[0]);
  int h = int(shape[1]);
  int w = int(shape[2]);
  const std::uint8_t* data = frames.data();
  for (long t = 0; t < t_count; ++t) {
    Frame f(w, h);
    std::copy(data + std::size_t(t) * w * h, data + std::size_t(t + 1) * w * h, f.pixels.begin());
    v.frames.push_back(std::move(f));
  }
  return v;
}

py::array_t<std::uint8_t> array_from_video(const Video& v) {
  int h = v.height(), w = v.width();
  py::array_t<std::uint8_t> out({long(v.frames.size()), long(h), long(w)});
  std::uint8_t* data = out.mutable_data();
  for (std::size_t t = 0; t < v.frames.size(); ++t)
    std::copy(v.frames[t].pixels.begin(), v.frames[t].pixels.end(), data + t * std::size_t(w) * h);
  return out;
}

SimilarityMatrix matrix_from_array(
    py::array_t<double, py::array::c_style | py::array::forcecast> values) {
  if (values.ndim() != 2) throw InputError("similarity matrix must be 2-D");
  SimilarityMatrix m;
  m.rows = int(values.shape(0));
  m.cols = int(values.shape(1));
  m.values.assign(values.data(), values.data() + m.rows * std::size_t(m.cols));
  return m;
}

py::dict metric_to_dict(const MetricScore& s) {
  py::dict d;
  d["metric_id"] = s.metric_id;
  d["raw"] = s.raw;
  d["status"] = to_label(s.status);
  if (s.status == MetricStatus::ok) d["normalized"] = s.normalized;
  d["diagnostics"] = s.diagnostics;
  return d;
}

}  // namespace

PYBIND11_MODULE(_lveval, m) {
  m.doc() = "Long-form text-to-video evaluation: scoring and aggregation kernels";

  py::register_exception<InputError>(m, "InputError");
  py::register_exception<ParseError>(m, "ParseError");
  py::register_exception<ProviderError>(m, "ProviderError");

  m.def("normalize_percent", &normalize_percent, py::arg("raw"),
        "Map a [0,1] score to the percent display scale.");
  m.def("percent_string", &percent_string, py::arg("normalized"));

  m.def(
      "compute_rr_ub",
      [](const std::vector<double>& scores, double top_fraction) {
        RRUB rr = compute_rr_ub(scores, top_fraction);
        py::dict d;
        d["value"] = rr.value;
        d["source_count"] = rr.source_count;
        d["top_fraction"] = rr.top_fraction;
        return d;
      },
      py::arg("reference_scores"), py::arg("top_fraction") = 0.10,
      "Mean of the top ceil(n*fraction) reference scores.");

  m.def(
      "match_events",
      [](py::array_t<double, py::array::c_style | py::array::forcecast> matrix) {
        return match_events(matrix_from_array(matrix));
      },
      py::arg("similarity_matrix"),
      "Maximum-weight event matching of size min(rows, cols); lexicographic ties.");

  m.def("count_inversions", &count_inversions, py::arg("values"));

  m.def(
      "event_alignment_score",
      [](const std::vector<double>& semantic, const std::vector<std::vector<double>>& field_sims,
         long inversions) {
        if (semantic.size() != field_sims.size())
          throw InputError("semantic and field similarity lists must have equal length");
        EventMatching matching;
        for (std::size_t i = 0; i < semantic.size(); ++i) {
          if (field_sims[i].size() != 4) throw InputError("each pair needs 4 field similarities");
          MatchedPair p;
          p.gen_index = int(i);
          p.gt_index = int(i);
          p.semantic_sim = semantic[i];
          p.field_sims = {{"subject", field_sims[i][0]},
                          {"setting", field_sims[i][1]},
                          {"action", field_sims[i][2]},
                          {"camera", field_sims[i][3]}};
          matching.pairs.push_back(std::move(p));
        }
        long n = long(semantic.size());
        matching.inversions = inversions;
        matching.max_inversions = n * (n - 1) / 2;
        return event_alignment_score(matching).normalized;
      },
      py::arg("semantic_sims"), py::arg("field_sims"), py::arg("inversions"),
      "Order-penalized mean event score over matched pairs.");

  m.def("smoothness_from_sequence", &smoothness_from_sequence, py::arg("sequence"),
        py::arg("b") = 1.0e4, py::arg("c") = 1.0,
        "1 - var_norm for one transition window similarity sequence.");

  m.def(
      "temporal_flickering",
      [](py::array_t<std::uint8_t, py::array::c_style | py::array::forcecast> frames, double fps,
         double static_threshold) {
        return metric_to_dict(temporal_flickering(video_from_array(frames, fps), static_threshold));
      },
      py::arg("frames"), py::arg("fps"), py::arg("static_threshold") = 2.0);

  m.def(
      "ssim",
      [](py::array_t<std::uint8_t, py::array::c_style | py::array::forcecast> a,
         py::array_t<std::uint8_t, py::array::c_style | py::array::forcecast> b) {
        if (a.ndim() != 2 || b.ndim() != 2) throw InputError("ssim expects 2-D uint8 arrays");
        Frame fa(int(a.shape(1)), int(a.shape(0)));
        Frame fb(int(b.shape(1)), int(b.shape(0)));
        std::copy(a.data(), a.data() + fa.pixels.size(), fa.pixels.begin());
        std::copy(b.data(), b.data() + fb.pixels.size(), fb.pixels.begin());
        return ssim(fa, fb);
      },
      py::arg("a"), py::arg("b"));

  m.def(
      "clarity_score",
      [](const std::vector<std::vector<int>>& trials) {
        std::vector<ClarityTrial> parsed;
        for (std::size_t t = 0; t < trials.size(); ++t) {
          if (trials[t].size() != std::size_t(kClarityDimensionCount))
            throw InputError("each trial needs exactly 4 dimension scores");
          ClarityTrial trial;
          trial.trial_index = int(t);
          int i = 0;
          for (auto d : all_clarity_dimensions()) trial.scores[d] = trials[t][std::size_t(i++)];
          parsed.push_back(std::move(trial));
        }
        ClarityResult r = clarity_score(parsed);
        py::dict out;
        out["overall"] = r.overall.normalized;
        py::dict per;
        for (const auto& [d, s] : r.per_dimension) per[to_label(d).c_str()] = s.normalized;
        out["per_dimension"] = per;
        return out;
      },
      py::arg("trials"), "Eq-style repeated-trial clarity aggregation (scores 0..4).");

  m.def(
      "herd_score",
      [](const std::vector<std::tuple<std::string, std::string, std::string>>& responses) {
        std::vector<HerdResponse> parsed;
        for (const auto& [dimension, polarity, answer] : responses) {
          HerdResponse r;
          auto d = herd_dimension_from_label(dimension);
          if (!d) throw InputError("unknown dimension: " + dimension);
          r.question.dimension = *d;
          r.question.text = "q?";
          if (polarity == "positive") {
            r.question.polarity = Polarity::positive;
          } else if (polarity == "negative") {
            r.question.polarity = Polarity::negative;
          } else {
            throw InputError("polarity must be positive or negative");
          }
          r.answer = answer == "yes"  ? HerdAnswer::yes
                     : answer == "no" ? HerdAnswer::no
                                      : HerdAnswer::unclear;
          parsed.push_back(std::move(r));
        }
        HerdResult result = herd_score(parsed);
        py::dict out;
        out["status"] = to_label(result.overall.status);
        if (result.overall.status == MetricStatus::ok)
          out["overall"] = result.overall.normalized;
        py::dict per;
        for (const auto& [d, s] : result.per_dimension) {
          per[to_label(d).c_str()] =
              s.status == MetricStatus::ok ? py::cast(s.normalized) : py::none();
        }
        out["per_dimension"] = per;
        return out;
      },
      py::arg("responses"),
      "Polarity-consistent share of valid answers; responses are (dimension, polarity, answer).");

  m.def(
      "aggregate_dimension",
      [](const std::vector<std::optional<double>>& values) -> std::optional<double> {
        std::vector<MetricScore> scores;
        for (const auto& v : values) {
          scores.push_back(v ? MetricScore::ok("m", *v, *v)
                             : MetricScore::not_applicable("m", "none"));
        }
        return aggregate_dimension(scores);
      },
      py::arg("values"), "Mean over present values; None entries are excluded.");

  m.def(
      "aggregate_overall",
      [](const std::vector<std::optional<double>>& dims) { return aggregate_overall(dims); },
      py::arg("dimension_averages"));

  m.def(
      "correlate",
      [](const std::vector<double>& a, const std::vector<double>& b) {
        CorrelationResult r = correlate(a, b);
        py::dict d;
        d["pearson"] = r.pearson ? py::cast(*r.pearson) : py::none();
        d["spearman"] = r.spearman ? py::cast(*r.spearman) : py::none();
        d["kendall"] = r.kendall ? py::cast(*r.kendall) : py::none();
        d["n"] = r.n;
        return d;
      },
      py::arg("series_a"), py::arg("series_b"));

  m.def(
      "read_y4m",
      [](const std::filesystem::path& path) {
        Video v = load_video(path);
        return py::make_tuple(array_from_video(v), v.fps);
      },
      py::arg("path"), "Returns (frames[T,H,W] uint8, fps).");

  m.def(
      "write_y4m",
      [](py::array_t<std::uint8_t, py::array::c_style | py::array::forcecast> frames, double fps,
         const std::filesystem::path& path) { write_y4m(video_from_array(frames, fps), path); },
      py::arg("frames"), py::arg("fps"), py::arg("path"));

  m.def(
      "validate_suite_file",
      [](const std::filesystem::path& path) {
        Config config;
        Suite suite = load_suite(path, config.theme_categories());
        SuiteRules rules;
        return validate_suite(suite, rules);
      },
      py::arg("path"), "Returns the list of invariant violations (empty = valid).");

  m.def(
      "run_evaluation",
      [](const std::filesystem::path& suite, const std::filesystem::path& videos,
         const std::filesystem::path& out_dir, const std::vector<std::string>& overrides) {
        Config config;
        for (const auto& o : overrides) config.set(o);
        if (config.text("cache.dir", "").empty())
          config.set("cache.dir=" + (out_dir / "cache").string());
        RunSummary summary = run_evaluation(suite, videos, config, out_dir);
        py::dict d;
        d["report_path"] = summary.report_path.string();
        d["evaluated"] = summary.evaluated;
        d["resumed"] = summary.resumed;
        d["sample_errors"] = summary.sample_errors;
        d["complete"] = summary.complete;
        return d;
      },
      py::arg("suite"), py::arg("videos"), py::arg("out_dir"),
      py::arg("overrides") = std::vector<std::string>{},
      "Full evaluation run (mock providers by default); returns a summary dict.");

  m.attr("__version__") = "0.1.0";
}
