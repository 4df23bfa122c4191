#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "lveval/config.hpp"
#include "lveval/providers.hpp"
#include "lveval/types.hpp"

namespace lveval {

struct RunSummary {
  std::filesystem::path report_path;
  int evaluated = 0;          // fresh evaluations this invocation
  int resumed = 0;            // loaded from checkpoints
  int sample_errors = 0;      // samples without a result (missing/broken video)
  bool complete = false;      // report written
};

// Evaluates every applicable metric for each suite sample against the videos
// in videos_dir (files named <id>.<ext>). Progress is checkpointed per sample
// under out_dir/samples/<id>/ and reruns reuse checkpoints whose config
// digest matches, so an interrupted run resumes to the same final report.
RunSummary run_evaluation(const std::filesystem::path& suite_path,
                          const std::filesystem::path& videos_dir, const Config& config,
                          const std::filesystem::path& out_dir);

// Single-sample evaluation used by the runner; exposed for tests.
ScoreReport evaluate_sample(const PromptRecord& record, const VideoAsset& video, ProviderHub& hub,
                            const Config& config, const std::filesystem::path& artifacts_dir = {});

}  // namespace lveval
