#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "lveval/providers.hpp"
#include "lveval/types.hpp"

namespace lveval {

struct ClarityTrial {
  int trial_index = 0;
  std::map<ClarityDimension, int> scores;   // each 0..4, all four present
  std::map<ClarityDimension, std::string> reasons;
};

enum class HerdAnswer { yes, no, unclear };

struct HerdResponse {
  HerdQuestion question;
  HerdAnswer answer = HerdAnswer::unclear;
  std::string raw_answer;
  bool canonical = true;  // false when the raw answer fell back to "unclear"
};

struct ClarityResult {
  MetricScore overall;                            // mean of the four dimensions
  std::map<ClarityDimension, MetricScore> per_dimension;
  std::vector<ClarityTrial> trials;
  int dropped_trials = 0;
};

struct HerdResult {
  MetricScore overall;                            // mean over applicable dimensions
  std::map<HerdDimension, MetricScore> per_dimension;
  std::vector<HerdResponse> responses;
};

// R judging rounds with distinct trial indices; trials whose output fails the
// 4-dimension 0..4 schema are retried once and then dropped. Throws
// ProviderError when no trial survives.
std::vector<ClarityTrial> run_clarity_trials(const VideoAsset& video, ProviderHub& hub, int trials);

// Per-dimension s_d = mean(raw/4) over trials; overall = mean of the four s_d.
ClarityResult clarity_score(const std::vector<ClarityTrial>& trials);

// One yes/no/unclear response per suite question; anything else canonicalizes
// to "unclear" (flagged in diagnostics downstream).
std::vector<HerdResponse> herd_answer(const PromptRecord& record, const VideoAsset& video,
                                      ProviderHub& hub);

// Polarity-consistent share of valid (yes/no) answers per dimension; the
// headline score is the mean over dimensions that had any valid answer.
HerdResult herd_score(const std::vector<HerdResponse>& responses);

// Full per-sample pass with optional artifact emission (clarity_trials.json,
// herd_responses.json).
ClarityResult evaluate_clarity(const VideoAsset& video, ProviderHub& hub, int trials,
                               const std::filesystem::path& artifacts_dir = {});
HerdResult evaluate_herd(const PromptRecord& record, const VideoAsset& video, ProviderHub& hub,
                         const std::filesystem::path& artifacts_dir = {});

const char* to_label(HerdAnswer a);

}  // namespace lveval
