#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lveval/types.hpp"

namespace lveval {

// Unweighted mean of normalized values over status=ok entries; nullopt when
// nothing is ok (not applicable).
std::optional<double> aggregate_dimension(const std::vector<MetricScore>& sub_scores);

// Unweighted mean of the five dimension averages; nullopt when any is absent.
std::optional<double> aggregate_overall(const std::vector<std::optional<double>>& dimension_averages);

// Builds dimension_averages and overall_average of a report from its metrics.
ScoreReport finalize_report(std::string sample_id, std::map<std::string, MetricScore> metrics);

// Method-level mean per metric over samples (ok entries only).
std::map<std::string, double> method_metric_means(const std::vector<ScoreReport>& reports);
// Method-level dimension averages derived from the metric means (the table
// row arithmetic: every sub-dimension column weighted equally).
std::map<std::string, double> method_dimension_means(const std::vector<ScoreReport>& reports);

// Per-category dimension means over member samples. Throws InputError naming
// the theme when a sample has no category.
std::map<std::string, std::map<std::string, double>> group_by_category(
    const std::vector<ScoreReport>& reports, const std::vector<PromptRecord>& samples);

struct CorrelationResult {
  std::optional<double> pearson;
  std::optional<double> spearman;
  std::optional<double> kendall;  // tau-b
  long n = 0;
};

// Pearson r, Spearman rho (average ranks on ties), Kendall tau-b. Zero
// variance in either series leaves the affected coefficients unset.
CorrelationResult correlate(const std::vector<double>& series_a,
                            const std::vector<double>& series_b);

struct OlsLine {
  double slope = 0.0;
  double intercept = 0.0;
};
std::optional<OlsLine> ols_fit(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace lveval
