#include "lveval/aggregate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace lveval {

std::optional<double> aggregate_dimension(const std::vector<MetricScore>& sub_scores) {
  double sum = 0.0;
  long count = 0;
  for (const auto& s : sub_scores) {
    if (s.status != MetricStatus::ok) continue;
    sum += s.normalized;
    ++count;
  }
  if (count == 0) return std::nullopt;
  return sum / double(count);
}

std::optional<double> aggregate_overall(
    const std::vector<std::optional<double>>& dimension_averages) {
  double sum = 0.0;
  for (const auto& d : dimension_averages) {
    if (!d) return std::nullopt;
    sum += *d;
  }
  if (dimension_averages.empty()) return std::nullopt;
  return sum / double(dimension_averages.size());
}

ScoreReport finalize_report(std::string sample_id, std::map<std::string, MetricScore> metrics) {
  ScoreReport report;
  report.sample_id = std::move(sample_id);
  report.metrics = std::move(metrics);
  std::vector<std::optional<double>> averages;
  for (const auto& dimension : all_dimensions()) {
    std::vector<MetricScore> subs;
    for (const auto& id : metrics_of_dimension(dimension)) {
      auto it = report.metrics.find(id);
      if (it != report.metrics.end()) subs.push_back(it->second);
    }
    auto average = aggregate_dimension(subs);
    if (average) report.dimension_averages[dimension] = *average;
    averages.push_back(average);
  }
  report.overall_average = aggregate_overall(averages);
  return report;
}

std::map<std::string, double> method_metric_means(const std::vector<ScoreReport>& reports) {
  std::map<std::string, std::pair<double, long>> sums;
  for (const auto& report : reports) {
    for (const auto& [id, score] : report.metrics) {
      if (score.status != MetricStatus::ok) continue;
      auto& [sum, count] = sums[id];
      sum += score.normalized;
      ++count;
    }
  }
  std::map<std::string, double> means;
  for (const auto& [id, pair] : sums) {
    if (pair.second > 0) means[id] = pair.first / double(pair.second);
  }
  return means;
}

std::map<std::string, double> method_dimension_means(const std::vector<ScoreReport>& reports) {
  auto metric_means = method_metric_means(reports);
  std::map<std::string, double> out;
  for (const auto& dimension : all_dimensions()) {
    double sum = 0.0;
    long count = 0;
    for (const auto& id : metrics_of_dimension(dimension)) {
      auto it = metric_means.find(id);
      if (it == metric_means.end()) continue;
      sum += it->second;
      ++count;
    }
    if (count > 0) out[dimension] = sum / double(count);
  }
  return out;
}

std::map<std::string, std::map<std::string, double>> group_by_category(
    const std::vector<ScoreReport>& reports, const std::vector<PromptRecord>& samples) {
  std::map<std::string, const PromptRecord*> by_id;
  for (const auto& r : samples) by_id[r.id] = &r;

  std::map<std::string, std::map<std::string, std::pair<double, long>>> sums;
  for (const auto& report : reports) {
    auto it = by_id.find(report.sample_id);
    if (it == by_id.end()) continue;
    const PromptRecord& record = *it->second;
    if (!record.category)
      throw InputError("group_by_category: theme '" + record.theme +
                       "' of sample " + record.id + " maps to no category");
    std::string category = to_label(*record.category);
    for (const auto& [dimension, value] : report.dimension_averages) {
      auto& [sum, count] = sums[category][dimension];
      sum += value;
      ++count;
    }
    if (report.overall_average) {
      auto& [sum, count] = sums[category]["overall"];
      sum += *report.overall_average;
      ++count;
    }
  }
  std::map<std::string, std::map<std::string, double>> out;
  for (const auto& [category, dims] : sums) {
    for (const auto& [dimension, pair] : dims) {
      if (pair.second > 0) out[category][dimension] = pair.first / double(pair.second);
    }
  }
  return out;
}

namespace {

std::vector<double> average_ranks(const std::vector<double>& v) {
  std::vector<std::size_t> order(v.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
  std::vector<double> ranks(v.size(), 0.0);
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i;
    while (j + 1 < order.size() && v[order[j + 1]] == v[order[i]]) ++j;
    double rank = (double(i) + double(j)) / 2.0 + 1.0;  // 1-based average rank
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = rank;
    i = j + 1;
  }
  return ranks;
}

std::optional<double> pearson(const std::vector<double>& a, const std::vector<double>& b) {
  double ma = 0.0, mb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    ma += a[i];
    mb += b[i];
  }
  ma /= double(a.size());
  mb /= double(a.size());
  double cov = 0.0, va = 0.0, vb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    double da = a[i] - ma;
    double db = b[i] - mb;
    cov += da * db;
    va += da * da;
    vb += db * db;
  }
  if (va <= 0.0 || vb <= 0.0) return std::nullopt;
  return cov / std::sqrt(va * vb);
}

}  // namespace

CorrelationResult correlate(const std::vector<double>& series_a,
                            const std::vector<double>& series_b) {
  if (series_a.size() != series_b.size())
    throw InputError("correlate: series length mismatch");
  if (series_a.size() < 3) throw InputError("correlate: need at least 3 points");
  for (double v : series_a) {
    if (!std::isfinite(v)) throw InputError("correlate: non-finite value in series");
  }
  for (double v : series_b) {
    if (!std::isfinite(v)) throw InputError("correlate: non-finite value in series");
  }
  CorrelationResult out;
  out.n = long(series_a.size());
  out.pearson = pearson(series_a, series_b);
  out.spearman = pearson(average_ranks(series_a), average_ranks(series_b));

  // Kendall tau-b
  long long concordant = 0, discordant = 0, ties_a = 0, ties_b = 0;
  std::size_t n = series_a.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      double da = series_a[i] - series_a[j];
      double db = series_b[i] - series_b[j];
      if (da == 0.0 && db == 0.0) {
        ++ties_a;
        ++ties_b;
      } else if (da == 0.0) {
        ++ties_a;
      } else if (db == 0.0) {
        ++ties_b;
      } else if ((da > 0) == (db > 0)) {
        ++concordant;
      } else {
        ++discordant;
      }
    }
  }
  long long n0 = (long long)(n) * (n - 1) / 2;
  double denom = std::sqrt(double(n0 - ties_a)) * std::sqrt(double(n0 - ties_b));
  if (denom > 0.0) out.kendall = double(concordant - discordant) / denom;
  return out;
}

std::optional<OlsLine> ols_fit(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) return std::nullopt;
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= double(x.size());
  my /= double(x.size());
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (sxx <= 0.0) return std::nullopt;
  OlsLine line;
  line.slope = sxy / sxx;
  line.intercept = my - line.slope * mx;
  return line;
}

}  // namespace lveval
