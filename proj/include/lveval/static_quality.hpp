#pragma once

#include <vector>

#include "lveval/providers.hpp"
#include "lveval/types.hpp"

namespace lveval {

// Relative reference upper bound: aesthetic-score normalizer derived from a
// reference image set, computed once and carried in config.
struct RRUB {
  double value = 0.0;
  int source_count = 0;
  double top_fraction = 0.10;
};

// Mean of the top ceil(n * top_fraction) reference scores.
RRUB compute_rr_ub(const std::vector<double>& reference_scores, double top_fraction = 0.10);

// One frame per second of duration (zero-anchored, nearest frame), scored on
// the provider's 1-10 scale, normalized against rr_ub and clamped to [0,1].
MetricScore score_aesthetic(const VideoAsset& video, ProviderHub& hub, const RRUB& rr_ub);

// Contiguous equal-length clips each shorter than max_clip_s (when the video
// is longer than that), scored per clip and averaged.
MetricScore score_technical(const VideoAsset& video, ProviderHub& hub, double max_clip_s = 10.0);

}  // namespace lveval
