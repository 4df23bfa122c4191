#include "lveval/runner.hpp"

#include <atomic>
#include <fstream>
#include <mutex>
#include <thread>

#include "lveval/alignment.hpp"
#include "lveval/clarity_herd.hpp"
#include "lveval/report.hpp"
#include "lveval/static_quality.hpp"
#include "lveval/suite.hpp"
#include "lveval/temporal.hpp"

namespace lveval {

namespace {

std::optional<std::filesystem::path> find_video(const std::filesystem::path& videos_dir,
                                                const std::string& sample_id,
                                                const Config& config) {
  json exts = config.at("run.video_extensions");
  std::vector<std::string> extensions;
  if (exts.is_array()) {
    for (const auto& e : exts) {
      if (e.is_string()) extensions.push_back(e.get<std::string>());
    }
  }
  if (extensions.empty()) extensions = {".y4m", ".mp4", ".webm", ".mkv"};
  for (const auto& ext : extensions) {
    std::filesystem::path candidate = videos_dir / (sample_id + ext);
    if (std::filesystem::exists(candidate)) return candidate;
  }
  return std::nullopt;
}

void atomic_write(const std::filesystem::path& path, const std::string& body) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    out << body;
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace

ScoreReport evaluate_sample(const PromptRecord& record, const VideoAsset& video, ProviderHub& hub,
                            const Config& config, const std::filesystem::path& artifacts_dir) {
  std::map<std::string, MetricScore> metrics;
  auto guard = [&](const std::string& id, auto&& fn) {
    try {
      fn();
    } catch (const std::exception& e) {
      metrics[id] = MetricScore::error(id, e.what());
    }
  };

  RRUB rr_ub;
  rr_ub.value = config.number("metrics.rr_ub.value", 8.0);
  rr_ub.top_fraction = config.number("metrics.rr_ub.top_fraction", 0.10);
  guard(metric::aesthetic_quality,
        [&] { metrics[metric::aesthetic_quality] = score_aesthetic(video, hub, rr_ub); });
  guard(metric::technical_quality, [&] {
    metrics[metric::technical_quality] =
        score_technical(video, hub, config.number("metrics.technical.clip_max_s", 10.0));
  });

  try {
    AlignmentResult alignment = evaluate_alignment(record, video, hub, artifacts_dir);
    metrics[metric::overall_alignment] = alignment.overall;
    metrics[metric::event_alignment] = alignment.event_level;
  } catch (const std::exception& e) {
    metrics[metric::overall_alignment] = MetricScore::error(metric::overall_alignment, e.what());
    metrics[metric::event_alignment] = MetricScore::error(metric::event_alignment, e.what());
  }

  for (auto& [id, score] : evaluate_temporal(record, video, hub, config, artifacts_dir))
    metrics[id] = score;

  try {
    ClarityResult clarity =
        evaluate_clarity(video, hub, config.integer("metrics.clarity.trials", 3), artifacts_dir);
    for (const auto& [d, score] : clarity.per_dimension) metrics[clarity_metric_id(d)] = score;
  } catch (const std::exception& e) {
    for (auto d : all_clarity_dimensions())
      metrics[clarity_metric_id(d)] = MetricScore::error(clarity_metric_id(d), e.what());
  }

  if (record.herd_questions.empty()) {
    for (auto d : all_herd_dimensions())
      metrics[herd_metric_id(d)] =
          MetricScore::not_applicable(herd_metric_id(d), "suite has no questions");
  } else {
    try {
      HerdResult herd = evaluate_herd(record, video, hub, artifacts_dir);
      for (const auto& [d, score] : herd.per_dimension) metrics[herd_metric_id(d)] = score;
    } catch (const std::exception& e) {
      for (auto d : all_herd_dimensions())
        metrics[herd_metric_id(d)] = MetricScore::error(herd_metric_id(d), e.what());
    }
  }

  return finalize_report(record.id, std::move(metrics));
}

RunSummary run_evaluation(const std::filesystem::path& suite_path,
                          const std::filesystem::path& videos_dir, const Config& config,
                          const std::filesystem::path& out_dir) {
  Suite suite = load_suite(suite_path, config.theme_categories());
  SuiteRules rules;
  rules.herd_questions_per_dimension = config.integer("suite.herd_questions_per_dimension", 6);
  auto violations = validate_suite(suite, rules);
  if (!violations.empty()) {
    std::string detail;
    for (std::size_t i = 0; i < violations.size() && i < 5; ++i) detail += "\n  " + violations[i];
    throw InputError("suite does not validate (" + std::to_string(violations.size()) +
                     " violations):" + detail);
  }

  std::filesystem::create_directories(out_dir / "samples");
  ProviderHub hub(config);
  std::string config_digest = config.digest();
  long stop_after = config.integer("run.stop_after", 0);

  struct Slot {
    const PromptRecord* record = nullptr;
    std::optional<ScoreReport> report;
    std::optional<SampleError> error;
    bool fresh = false;
  };
  std::vector<Slot> slots(suite.samples.size());
  for (std::size_t i = 0; i < suite.samples.size(); ++i) slots[i].record = &suite.samples[i];

  // Resume pass: adopt checkpoints computed under the same configuration.
  for (auto& slot : slots) {
    std::filesystem::path checkpoint = out_dir / "samples" / slot.record->id / "score.json";
    std::ifstream in(checkpoint);
    if (!in) continue;
    json j = json::parse(in, nullptr, false);
    if (j.is_discarded() || j.value("config_digest", "") != config_digest) continue;
    slot.report = score_report_from_json(j["report"]);
  }

  std::atomic<long> fresh_budget{stop_after > 0 ? stop_after : long(slots.size()) + 1};
  std::atomic<std::size_t> next{0};
  std::mutex io_mu;

  auto worker = [&] {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= slots.size()) return;
      Slot& slot = slots[i];
      if (slot.report) continue;  // resumed
      if (fresh_budget.fetch_sub(1) <= 0) return;
      const PromptRecord& record = *slot.record;
      auto video_path = find_video(videos_dir, record.id, config);
      if (!video_path) {
        slot.error = SampleError{record.id, "video not found in " + videos_dir.string()};
        continue;
      }
      try {
        VideoFile file(*video_path);
        VideoAsset asset = file.asset(record.id);
        std::filesystem::path sample_dir = out_dir / "samples" / record.id;
        ScoreReport report = evaluate_sample(record, asset, hub, config, sample_dir);
        {
          std::lock_guard lock(io_mu);
          json checkpoint{{"config_digest", config_digest}, {"report", to_json(report)}};
          atomic_write(sample_dir / "score.json", checkpoint.dump(2) + "\n");
        }
        slot.report = std::move(report);
        slot.fresh = true;
      } catch (const std::exception& e) {
        slot.error = SampleError{record.id, e.what()};
      }
    }
  };

  int workers = std::max(1, config.integer("run.workers", 2));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  RunSummary summary;
  std::vector<ScoreReport> reports;
  std::vector<SampleError> errors;
  bool pending = false;
  for (const auto& slot : slots) {
    if (slot.report) {
      reports.push_back(*slot.report);
      if (slot.fresh) {
        ++summary.evaluated;
      } else {
        ++summary.resumed;
      }
    } else if (slot.error) {
      errors.push_back(*slot.error);
    } else {
      pending = true;  // stopped before reaching this sample
    }
  }
  summary.sample_errors = int(errors.size());

  if (!pending) {
    json report = build_report(config.text("run.method", "method"), reports, suite.samples,
                               errors, config);
    summary.report_path = out_dir / "report.json";
    atomic_write(summary.report_path, report.dump(2) + "\n");
    summary.complete = true;
  }
  return summary;
}

}  // namespace lveval
