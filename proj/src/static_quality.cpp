#include "lveval/static_quality.hpp"

#include <algorithm>
#include <cmath>

namespace lveval {

RRUB compute_rr_ub(const std::vector<double>& reference_scores, double top_fraction) {
  if (reference_scores.empty()) throw InputError("compute_rr_ub: empty reference score list");
  if (!(top_fraction > 0.0 && top_fraction <= 1.0))
    throw InputError("compute_rr_ub: top_fraction must be in (0,1]");
  std::vector<double> sorted = reference_scores;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  std::size_t take = std::size_t(std::ceil(sorted.size() * top_fraction));
  take = std::clamp<std::size_t>(take, 1, sorted.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < take; ++i) sum += sorted[i];
  RRUB rr;
  rr.value = sum / double(take);
  rr.source_count = int(sorted.size());
  rr.top_fraction = top_fraction;
  return rr;
}

MetricScore score_aesthetic(const VideoAsset& video, ProviderHub& hub, const RRUB& rr_ub) {
  if (rr_ub.value <= 0.0) throw InputError("score_aesthetic: rr_ub must be positive");
  std::vector<long> indices = one_per_second_indices(video.fps, video.frame_count);
  if (indices.empty())
    return MetricScore::error(metric::aesthetic_quality, "no frames to sample");
  double total = 0.0;
  for (long idx : indices) total += hub.aesthetic_score(video.path, idx, video.sample_id);
  double mean_raw = total / double(indices.size());
  MetricScore score =
      MetricScore::ok(metric::aesthetic_quality, mean_raw, clamp01(mean_raw / rr_ub.value));
  score.diagnostics["frames_sampled"] = std::to_string(indices.size());
  score.diagnostics["rr_ub"] = std::to_string(rr_ub.value);
  return score;
}

MetricScore score_technical(const VideoAsset& video, ProviderHub& hub, double max_clip_s) {
  auto clips = partition_clips(video.fps, video.frame_count, max_clip_s);
  if (clips.empty())
    return MetricScore::error(metric::technical_quality, "no frames to segment");
  double total = 0.0;
  for (const auto& [begin, end] : clips)
    total += hub.technical_score(video.path, begin, end, video.sample_id);
  double value = total / double(clips.size());
  MetricScore score = MetricScore::ok(metric::technical_quality, value, clamp01(value));
  score.diagnostics["clips"] = std::to_string(clips.size());
  return score;
}

}  // namespace lveval
