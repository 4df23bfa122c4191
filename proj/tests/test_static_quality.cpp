#include <doctest.h>

#include <random>

#include "lveval/static_quality.hpp"
#include "support/fixtures.hpp"

using namespace lveval;

TEST_CASE("compute_rr_ub") {
  SUBCASE("uniform scores give back the constant") {
    CHECK(compute_rr_ub({3.5, 3.5, 3.5, 3.5}, 0.1).value == doctest::Approx(3.5));
  }
  SUBCASE("1..10 with fraction 0.10 takes the single top score") {
    std::vector<double> scores;
    for (int i = 1; i <= 10; ++i) scores.push_back(i);
    RRUB rr = compute_rr_ub(scores, 0.10);
    CHECK(rr.value == doctest::Approx(10.0));
    CHECK(rr.source_count == 10);
  }
  SUBCASE("1..20 with fraction 0.10 averages the top two") {
    std::vector<double> scores;
    for (int i = 1; i <= 20; ++i) scores.push_back(i);
    CHECK(compute_rr_ub(scores, 0.10).value == doctest::Approx(19.5));
  }
  SUBCASE("permutation invariant") {
    std::vector<double> scores = {4.2, 9.1, 6.6, 7.3, 8.8, 5.0, 3.3, 2.2, 6.1, 7.7};
    RRUB base = compute_rr_ub(scores, 0.3);
    std::mt19937 rng(7);
    for (int i = 0; i < 10; ++i) {
      std::shuffle(scores.begin(), scores.end(), rng);
      CHECK(compute_rr_ub(scores, 0.3).value == doctest::Approx(base.value));
    }
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(compute_rr_ub({}, 0.1), InputError);
    CHECK_THROWS_AS(compute_rr_ub({1.0}, 0.0), InputError);
    CHECK_THROWS_AS(compute_rr_ub({1.0}, 1.5), InputError);
  }
}

namespace {

ProviderHub hub_with_aesthetic_score(const std::filesystem::path& dir, double score) {
  Config config = lveval::testing::mock_config(dir);
  config.set("providers.aesthetic_scorer.params.score=" + std::to_string(score));
  return ProviderHub(config);
}

}  // namespace

TEST_CASE("aesthetic score normalizes against the upper bound") {
  testing::TempDir dir("aes");
  Video v = testing::constant_video(16, 16, 24, 4.0);  // 6 s
  auto path = testing::write_video(v, dir.path(), "clip");
  VideoAsset asset{"clip", path.string(), 4.0, 24};
  RRUB rr{8.0, 100, 0.10};

  SUBCASE("scores equal to the bound give 1.0") {
    ProviderHub hub = hub_with_aesthetic_score(dir.path(), 8.0);
    MetricScore s = score_aesthetic(asset, hub, rr);
    CHECK(s.normalized == doctest::Approx(1.0));
    CHECK(s.diagnostics["frames_sampled"] == "6");
  }
  SUBCASE("mean over the per-second samples divided by the bound") {
    ProviderHub hub = hub_with_aesthetic_score(dir.path(), 6.0);
    CHECK(score_aesthetic(asset, hub, rr).normalized == doctest::Approx(0.75));
  }
  SUBCASE("scores above the bound clamp to 1.0") {
    ProviderHub hub = hub_with_aesthetic_score(dir.path(), 9.0);
    CHECK(score_aesthetic(asset, hub, rr).normalized == doctest::Approx(1.0));
  }
}

TEST_CASE("aesthetic sampling is invariant to fps re-encoding of the same seconds") {
  testing::TempDir dir("aes2");
  // same per-second content at 4 and 8 fps; mock scores depend on frame luma
  Video v4, v8;
  v4.fps = 4.0;
  v8.fps = 8.0;
  for (int second = 0; second < 5; ++second) {
    std::uint8_t luma = std::uint8_t(40 + 30 * second);
    for (int i = 0; i < 4; ++i) v4.frames.push_back(testing::constant_frame(16, 16, luma));
    for (int i = 0; i < 8; ++i) v8.frames.push_back(testing::constant_frame(16, 16, luma));
  }
  auto p4 = testing::write_video(v4, dir.path(), "enc4");
  auto p8 = testing::write_video(v8, dir.path(), "enc8");
  Config config = lveval::testing::mock_config(dir.path());
  ProviderHub hub(config);
  RRUB rr{8.0, 100, 0.10};
  MetricScore a = score_aesthetic(VideoAsset{"a", p4.string(), 4.0, 20}, hub, rr);
  MetricScore b = score_aesthetic(VideoAsset{"b", p8.string(), 8.0, 40}, hub, rr);
  CHECK(a.normalized == doctest::Approx(b.normalized));
}

TEST_CASE("technical clip segmentation") {
  SUBCASE("35 s video becomes 4 clips of 8.75 s") {
    auto clips = partition_clips(8.0, 280, 10.0);
    REQUIRE(clips.size() == 4);
    CHECK(clips[0] == std::pair<long, long>{0, 70});
    CHECK(clips[3] == std::pair<long, long>{210, 280});
  }
  SUBCASE("8 s video stays one clip") {
    auto clips = partition_clips(8.0, 64, 10.0);
    REQUIRE(clips.size() == 1);
    CHECK(clips[0] == std::pair<long, long>{0, 64});
  }
  SUBCASE("exact multiples still split below the limit") {
    auto clips = partition_clips(10.0, 200, 10.0);  // 20 s
    REQUIRE(clips.size() == 3);
    for (auto [b, e] : clips) CHECK(double(e - b) / 10.0 < 10.0);
  }
  SUBCASE("partition covers every frame exactly once") {
    for (long frames : {7L, 100L, 280L, 333L}) {
      auto clips = partition_clips(8.0, frames, 10.0);
      long covered = 0;
      long prev_end = 0;
      for (auto [b, e] : clips) {
        CHECK(b == prev_end);
        covered += e - b;
        prev_end = e;
      }
      CHECK(covered == frames);
    }
  }
}

TEST_CASE("technical score averages clip scores on the declared range") {
  testing::TempDir dir("tq");
  Video v = testing::constant_video(16, 16, 64, 8.0);
  auto path = testing::write_video(v, dir.path(), "clip");
  VideoAsset asset{"clip", path.string(), 8.0, 64};

  Config config = lveval::testing::mock_config(dir.path());
  config.set("providers.technical_scorer.params.score=0.61");
  ProviderHub hub(config);
  CHECK(score_technical(asset, hub).normalized == doctest::Approx(0.61));

  Config scaled = lveval::testing::mock_config(dir.path());
  scaled.set("providers.technical_scorer.params.score=61.0");
  scaled.set("providers.technical_scorer.params.range_lo=0.0");
  scaled.set("providers.technical_scorer.params.range_hi=100.0");
  ProviderHub hub2(scaled);
  CHECK(score_technical(asset, hub2).normalized == doctest::Approx(0.61));
}
