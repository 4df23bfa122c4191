#pragma once

#include <array>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "lveval/providers.hpp"
#include "lveval/types.hpp"

namespace lveval {

struct TransitionParams {
  int k = 8;  // half-window in frames
  std::array<double, 4> alpha = {0.25, 0.25, 0.25, 0.25};  // mae/ssim/feature/motion weights
  double b = 1.0e4;
  double c = 1.0;
};

struct EventClip {
  int event_index = 0;
  long start_frame = 0;
  long end_frame = 0;  // exclusive
  bool grounded = true;  // false = fallback uniform partition

  long length() const { return end_frame - start_frame; }
};

struct TrackEntry {
  int event_index = 0;
  long frame_index = 0;
  std::vector<double> feature;  // unit norm
  double coverage = 0.0;
};

struct TrackStore {
  std::map<std::string, std::vector<TrackEntry>> subjects;  // label -> appearances
  std::map<int, std::vector<TrackEntry>> background;        // event -> features
  std::map<std::string, std::string> notes;
};

// --- individual sub-metrics -------------------------------------------------

// Binary per-video motion judgment: 1.0 when the mean top-fraction flow
// magnitude over sampled frame pairs exceeds threshold_px.
MetricScore dynamic_degree(const VideoAsset& video, ProviderHub& hub, double threshold_px,
                           double top_fraction = 0.05, int max_pairs = 16);

// Drops alternate frames, reconstructs them with the interpolator, and scores
// 1 - mean reconstruction error.
MetricScore motion_smoothness(const VideoAsset& video, ProviderHub& hub,
                              int max_reconstructions = 32);

// 1 - MAD/255 across consecutive frames of static segments (pairs whose MAD
// is below static_threshold); falls back to all pairs when nothing is static.
MetricScore temporal_flickering(const Video& video, double static_threshold = 2.0);
MetricScore temporal_flickering(const VideoAsset& video, double static_threshold = 2.0);

// Warps each frame onto its successor along estimated flow and scores
// 1 - mean absolute error over in-bounds pixels.
MetricScore warping_error(const VideoAsset& video, ProviderHub& hub, int max_pairs = 16);

// Mean consecutive-frame embedding cosine, mapped to [0,1] via (cos+1)/2.
MetricScore semantic_consistency(const VideoAsset& video, ProviderHub& hub, int max_frames = 16);

// Scene-change frames from the detector, deduplicated within k frames.
std::vector<long> detect_transitions(const VideoAsset& video, ProviderHub& hub, int k);

// Weighted per-frame similarity sequence around one transition: pixel MAE,
// SSIM, embedding, and motion-consistency channels, each min-max normalized
// within the window. Returns an empty sequence when the window cannot fit.
std::vector<double> transition_similarity_sequence(const VideoFile& video, long transition,
                                                   const TransitionParams& params,
                                                   ProviderHub& hub, bool* truncated = nullptr);

// Smoothness of one window: sequence is sum-normalized, its variance drives
// abruptness A = var*b / (var*b + c); returns 1 - A.
double smoothness_from_sequence(const std::vector<double>& sequence, double b, double c);

MetricScore transition_smoothness(const VideoAsset& video, ProviderHub& hub,
                                  const TransitionParams& params);
// Same, with transition points supplied by the caller.
MetricScore transition_smoothness_at(const VideoAsset& video, const std::vector<long>& transitions,
                                     ProviderHub& hub, const TransitionParams& params,
                                     json* artifacts = nullptr);

// (occurrence + three smoothness checks) / 4 per action, averaged over
// actions; not_applicable when the prompt has no human actions.
MetricScore human_action_score(const PromptRecord& record, const VideoAsset& video,
                               ProviderHub& hub);

// Temporal spans per event; grounding failures fall back to that event's slot
// of a uniform partition.
std::vector<EventClip> ground_event_clips(const VideoAsset& video,
                                          const std::vector<EventSpec>& events, ProviderHub& hub);

// Subject masks, crops, and unit-norm features for sampled frames of each
// clip; background features use the dilated-mask complement.
TrackStore segment_tracks(const VideoAsset& video, const std::vector<EventClip>& clips,
                          const std::vector<EventSpec>& events, ProviderHub& hub,
                          int frames_per_clip = 16, int dilate_radius = 2);

struct ConsistencyScores {
  MetricScore subject;
  MetricScore background;
};

// Mean consecutive-appearance cosine per subject per event, averaged over
// subjects, then event-length weighted over events.
ConsistencyScores intra_event_consistency(const TrackStore& tracks,
                                          const std::vector<EventClip>& clips);

// All-pairs cross-event cosine per subject appearing in >= 2 events, averaged
// over event pairs and then subjects.
ConsistencyScores inter_event_consistency(const TrackStore& tracks);

// --- orchestration -----------------------------------------------------------

// Runs all eleven temporal sub-metrics for one sample. When artifacts_dir is
// set, writes transitions.json, event_clips.json, and the track feature store
// (tracks.bin + tracks.json manifest).
std::map<std::string, MetricScore> evaluate_temporal(const PromptRecord& record,
                                                     const VideoAsset& video, ProviderHub& hub,
                                                     const Config& config,
                                                     const std::filesystem::path& artifacts_dir = {});

void write_track_store(const TrackStore& tracks, const std::filesystem::path& dir);

}  // namespace lveval
