#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "lveval/providers.hpp"
#include "lveval/types.hpp"

namespace lveval {

// One matched (generated, ground-truth) event pair with its similarities.
struct MatchedPair {
  int gen_index = 0;
  int gt_index = 0;
  double semantic_sim = 0.0;
  std::map<std::string, double> field_sims;  // subject/setting/action/camera
};

struct EventMatching {
  std::vector<MatchedPair> pairs;  // sorted by gen_index
  long inversions = 0;
  long max_inversions = 0;  // N(N-1)/2
};

// Single-paragraph video description; bullet-formatted output is rejected and
// retried before surfacing a provider error.
std::string describe_video(const VideoAsset& video, ProviderHub& hub, int retries = 2);

// Clamped cosine of the two text embeddings.
MetricScore overall_alignment(const std::string& description, const std::string& prompt_base,
                              ProviderHub& hub, const std::string& context = "");

// Ordered event list parsed from the extractor's JSON array; a missing camera
// motion field becomes "static".
std::vector<EventSpec> extract_events(const std::string& text, ProviderHub& hub,
                                      const std::string& context = "");

// values[i][j] = clamped cosine of the event-description embeddings.
SimilarityMatrix build_similarity_matrix(const std::vector<EventSpec>& generated,
                                         const std::vector<EventSpec>& ground_truth,
                                         ProviderHub& hub, const std::string& context = "");

// Per-field clamped cosine with the empty-string conventions: both empty 1.0,
// exactly one empty 0.0.
std::map<std::string, double> field_similarity(const EventSpec& gen, const EventSpec& gt,
                                               ProviderHub& hub, const std::string& context = "");

// Builds the full matching (Hungarian assignment, field similarities,
// inversion count) from already extracted event lists.
EventMatching build_event_matching(const std::vector<EventSpec>& generated,
                                   const std::vector<EventSpec>& ground_truth, ProviderHub& hub,
                                   const std::string& context = "");

// Order-penalized mean event score: (1 - I/I_max) * (1/N) sum(sem * mean(field)).
// N <= 1 disables the penalty; N == 0 scores 0 with diagnostics.
MetricScore event_alignment_score(const EventMatching& matching);

struct AlignmentResult {
  std::string description;
  std::vector<EventSpec> generated_events;
  EventMatching matching;
  MetricScore overall;
  MetricScore event_level;
};

// Full text-video alignment pass for one sample. When artifacts_dir is given,
// persists description.txt, events_generated.json, and matching.json.
AlignmentResult evaluate_alignment(const PromptRecord& record, const VideoAsset& video,
                                   ProviderHub& hub,
                                   const std::filesystem::path& artifacts_dir = {});

json matching_to_json(const EventMatching& matching, const MetricScore& score);

}  // namespace lveval
