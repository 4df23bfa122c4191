#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "lveval/aggregate.hpp"
#include "lveval/config.hpp"
#include "lveval/json_util.hpp"
#include "lveval/types.hpp"

namespace lveval {

json to_json(const MetricScore& score);
MetricScore metric_from_json(const std::string& id, const json& j);
json to_json(const ScoreReport& report);
ScoreReport score_report_from_json(const json& j);

struct SampleError {
  std::string sample_id;
  std::string error;
};

// Assembles the full report document: per-sample reports, method-level
// means, category grouping, correlations, errors, and the effective config.
json build_report(const std::string& method, const std::vector<ScoreReport>& sample_reports,
                  const std::vector<PromptRecord>& samples,
                  const std::vector<SampleError>& errors, const Config& config);

json load_report(const std::filesystem::path& path);

// Metric/dimension pairs correlated by default: static quality against every
// other dimension, event alignment against the four consistency metrics.
std::vector<std::pair<std::string, std::string>> default_correlation_pairs();

// Per-sample value series for a dimension name or metric id; samples lacking
// either value are skipped pairwise.
std::pair<std::vector<double>, std::vector<double>> paired_series(const json& report,
                                                                  const std::string& key_a,
                                                                  const std::string& key_b);

// Correlation rows (plus scatter points and OLS parameters) for the pairs.
json correlation_table(const json& report,
                       const std::vector<std::pair<std::string, std::string>>& pairs);

// Writes overall/temporal/herd tables (percent formatted, not-applicable as
// an em dash) in "csv" or "md" format plus radar.json; one row per report.
void emit_tables(const std::vector<json>& reports, const std::string& format,
                 const std::filesystem::path& out_dir);

void emit_correlations(const json& report,
                       const std::vector<std::pair<std::string, std::string>>& pairs,
                       const std::string& format, const std::filesystem::path& out_dir);

}  // namespace lveval
