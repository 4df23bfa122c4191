#include "lveval/report.hpp"

#include <algorithm>
#include <fstream>
#include <set>

namespace lveval {

json to_json(const MetricScore& score) {
  json j{{"raw", score.raw}, {"status", to_label(score.status)}};
  if (score.status == MetricStatus::ok) j["normalized"] = score.normalized;
  if (!score.diagnostics.empty()) j["diagnostics"] = score.diagnostics;
  return j;
}

MetricScore metric_from_json(const std::string& id, const json& j) {
  MetricScore s;
  s.metric_id = id;
  s.raw = j.value("raw", 0.0);
  std::string status = j.value("status", "ok");
  s.status = status == "ok" ? MetricStatus::ok
             : status == "not_applicable" ? MetricStatus::not_applicable
                                          : MetricStatus::error;
  if (s.status == MetricStatus::ok) s.normalized = j.value("normalized", 0.0);
  if (j.contains("diagnostics")) {
    for (auto it = j["diagnostics"].begin(); it != j["diagnostics"].end(); ++it) {
      if (it->is_string()) s.diagnostics[it.key()] = it->get<std::string>();
    }
  }
  return s;
}

json to_json(const ScoreReport& report) {
  json metrics = json::object();
  for (const auto& [id, score] : report.metrics) metrics[id] = to_json(score);
  json j{{"sample_id", report.sample_id},
         {"metrics", metrics},
         {"dimension_averages", report.dimension_averages}};
  j["overall_average"] = report.overall_average ? json(*report.overall_average) : json();
  return j;
}

ScoreReport score_report_from_json(const json& j) {
  ScoreReport report;
  report.sample_id = j.value("sample_id", "");
  if (j.contains("metrics")) {
    for (auto it = j["metrics"].begin(); it != j["metrics"].end(); ++it)
      report.metrics[it.key()] = metric_from_json(it.key(), *it);
  }
  if (j.contains("dimension_averages")) {
    for (auto it = j["dimension_averages"].begin(); it != j["dimension_averages"].end(); ++it)
      report.dimension_averages[it.key()] = it->get<double>();
  }
  if (j.contains("overall_average") && j["overall_average"].is_number())
    report.overall_average = j["overall_average"].get<double>();
  return report;
}

std::vector<std::pair<std::string, std::string>> default_correlation_pairs() {
  return {
      {dim::static_quality, dim::temporal_quality},
      {dim::static_quality, dim::text_video_alignment},
      {dim::static_quality, dim::content_clarity},
      {dim::static_quality, dim::herd},
      {metric::event_alignment, metric::intra_event_subject},
      {metric::event_alignment, metric::intra_event_background},
      {metric::event_alignment, metric::inter_event_subject},
      {metric::event_alignment, metric::inter_event_background},
  };
}

namespace {

std::optional<double> sample_value(const json& sample, const std::string& key) {
  bool is_dimension =
      std::find(all_dimensions().begin(), all_dimensions().end(), key) != all_dimensions().end();
  if (is_dimension) {
    const json* dims = sample.contains("dimension_averages") ? &sample["dimension_averages"]
                                                             : nullptr;
    if (dims && dims->contains(key) && (*dims)[key].is_number())
      return (*dims)[key].get<double>();
    return std::nullopt;
  }
  if (!sample.contains("metrics")) return std::nullopt;
  const auto& metrics = sample["metrics"];
  if (metrics.contains(key) && metrics[key].contains("normalized") &&
      metrics[key]["normalized"].is_number())
    return metrics[key]["normalized"].get<double>();
  return std::nullopt;
}

}  // namespace

std::pair<std::vector<double>, std::vector<double>> paired_series(const json& report,
                                                                  const std::string& key_a,
                                                                  const std::string& key_b) {
  std::vector<double> a, b;
  if (!report.contains("samples") || !report["samples"].is_array())
    throw ParseError("report has no samples array");
  for (const auto& sample : report["samples"]) {
    auto va = sample_value(sample, key_a);
    auto vb = sample_value(sample, key_b);
    if (va && vb) {
      a.push_back(*va);
      b.push_back(*vb);
    }
  }
  return {a, b};
}

json correlation_table(const json& report,
                       const std::vector<std::pair<std::string, std::string>>& pairs) {
  json rows = json::array();
  for (const auto& [key_a, key_b] : pairs) {
    auto [a, b] = paired_series(report, key_a, key_b);
    json row{{"metric_1", key_a}, {"metric_2", key_b}, {"n", a.size()}};
    if (a.size() < 3) {
      row["status"] = "skipped";
      row["note"] = "fewer than 3 paired samples";
      rows.push_back(row);
      continue;
    }
    CorrelationResult c = correlate(a, b);
    row["pearson"] = c.pearson ? json(*c.pearson) : json();
    row["spearman"] = c.spearman ? json(*c.spearman) : json();
    row["kendall"] = c.kendall ? json(*c.kendall) : json();
    row["status"] = (c.pearson && c.spearman && c.kendall) ? "ok" : "not_applicable";
    if (auto line = ols_fit(a, b)) {
      row["ols"] = json{{"slope", line->slope}, {"intercept", line->intercept}};
    }
    json points = json::array();
    for (std::size_t i = 0; i < a.size(); ++i) points.push_back(json::array({a[i], b[i]}));
    row["points"] = points;
    rows.push_back(row);
  }
  return rows;
}

json build_report(const std::string& method, const std::vector<ScoreReport>& sample_reports,
                  const std::vector<PromptRecord>& samples,
                  const std::vector<SampleError>& errors, const Config& config) {
  json report;
  report["method"] = method;
  json sample_json = json::array();
  for (const auto& r : sample_reports) sample_json.push_back(to_json(r));
  report["samples"] = sample_json;
  report["metric_means"] = method_metric_means(sample_reports);
  json dims = method_dimension_means(sample_reports);
  report["dimension_means"] = dims;
  std::vector<std::optional<double>> averages;
  for (const auto& d : all_dimensions()) {
    averages.push_back(dims.contains(d) ? std::optional<double>(dims[d].get<double>())
                                        : std::nullopt);
  }
  auto overall = aggregate_overall(averages);
  report["overall_mean"] = overall ? json(*overall) : json();
  report["by_category"] = group_by_category(sample_reports, samples);
  json correlations = correlation_table(report, default_correlation_pairs());
  for (auto& row : correlations) row.erase("points");  // scatter data lives in the export
  report["correlations"] = correlations;
  json error_json = json::array();
  for (const auto& e : errors)
    error_json.push_back(json{{"sample_id", e.sample_id}, {"error", e.error}});
  report["errors"] = error_json;
  report["metadata"] = json{{"tool", "lveval"},
                            {"sample_count", sample_reports.size()},
                            {"config", config.scoring_view()}};
  return report;
}

json load_report(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open report: " + path.string());
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded()) throw ParseError("report is not valid JSON: " + path.string());
  return j;
}

namespace {

constexpr const char* kNa = "\xe2\x80\x94";  // em dash

std::string percent_cell(const json& container, const std::string& key) {
  if (!container.contains(key) || !container[key].is_number()) return kNa;
  return percent_string(container[key].get<double>());
}

struct TableSpec {
  std::string name;
  std::vector<std::string> headers;
  // series of keys resolved against metric_means ("m:") / dimension_means
  // ("d:") / overall ("overall")
  std::vector<std::string> keys;
};

std::vector<TableSpec> table_specs() {
  TableSpec overall{"overall",
                    {"Method", "AQ", "TQ", "SQ Avg", "OA", "EA", "TVA Avg", "Temporal Quality",
                     "TC", "LS", "ICP", "ICS", "CC Avg", "HERD", "Avg"},
                    {}};
  overall.keys = {std::string("m:") + metric::aesthetic_quality,
                  std::string("m:") + metric::technical_quality,
                  std::string("d:") + dim::static_quality,
                  std::string("m:") + metric::overall_alignment,
                  std::string("m:") + metric::event_alignment,
                  std::string("d:") + dim::text_video_alignment,
                  std::string("d:") + dim::temporal_quality,
                  "m:" + clarity_metric_id(ClarityDimension::theme_clarity),
                  "m:" + clarity_metric_id(ClarityDimension::logical_structure),
                  "m:" + clarity_metric_id(ClarityDimension::information_completeness),
                  "m:" + clarity_metric_id(ClarityDimension::information_consistency),
                  std::string("d:") + dim::content_clarity,
                  std::string("d:") + dim::herd,
                  "overall"};

  TableSpec temporal{"temporal",
                     {"Method", "Dynamic Degree", "Motion Smoothness", "Warping Error",
                      "Semantic Consistency", "Temporal Flickering", "Transition Smoothness",
                      "Human Action", "ITAE SC", "ITAE BC", "ITRE SC", "ITRE BC", "Avg"},
                     {}};
  temporal.keys = {std::string("m:") + metric::dynamic_degree,
                   std::string("m:") + metric::motion_smoothness,
                   std::string("m:") + metric::warping_error,
                   std::string("m:") + metric::semantic_consistency,
                   std::string("m:") + metric::temporal_flickering,
                   std::string("m:") + metric::transition_smoothness,
                   std::string("m:") + metric::human_action,
                   std::string("m:") + metric::intra_event_subject,
                   std::string("m:") + metric::intra_event_background,
                   std::string("m:") + metric::inter_event_subject,
                   std::string("m:") + metric::inter_event_background,
                   std::string("d:") + dim::temporal_quality};

  TableSpec herd{"herd",
                 {"Method", "Emotional Response", "Narrative Flow", "Character Development",
                  "Visual Style", "Themes", "Interpretive Depth", "Overall Impression", "Avg"},
                 {}};
  for (auto d : all_herd_dimensions()) herd.keys.push_back("m:" + herd_metric_id(d));
  herd.keys.push_back(std::string("d:") + dim::herd);
  return {overall, temporal, herd};
}

std::string resolve_cell(const json& report, const std::string& key) {
  if (key == "overall") {
    return report.contains("overall_mean") && report["overall_mean"].is_number()
               ? percent_string(report["overall_mean"].get<double>())
               : kNa;
  }
  if (key.rfind("m:", 0) == 0 && report.contains("metric_means"))
    return percent_cell(report["metric_means"], key.substr(2));
  if (key.rfind("d:", 0) == 0 && report.contains("dimension_means"))
    return percent_cell(report["dimension_means"], key.substr(2));
  return kNa;
}

void write_table(const TableSpec& spec, const std::vector<json>& reports,
                 const std::string& format, const std::filesystem::path& out_dir) {
  std::ofstream out(out_dir / (spec.name + "." + format));
  if (format == "md") {
    out << "|";
    for (const auto& h : spec.headers) out << " " << h << " |";
    out << "\n|";
    for (std::size_t i = 0; i < spec.headers.size(); ++i) out << " --- |";
    out << "\n";
    for (const auto& report : reports) {
      out << "| " << report.value("method", "?") << " |";
      for (const auto& key : spec.keys) out << " " << resolve_cell(report, key) << " |";
      out << "\n";
    }
  } else {
    for (std::size_t i = 0; i < spec.headers.size(); ++i)
      out << (i ? "," : "") << spec.headers[i];
    out << "\n";
    for (const auto& report : reports) {
      out << report.value("method", "?");
      for (const auto& key : spec.keys) out << "," << resolve_cell(report, key);
      out << "\n";
    }
  }
}

}  // namespace

void emit_tables(const std::vector<json>& reports, const std::string& format,
                 const std::filesystem::path& out_dir) {
  if (format != "csv" && format != "md")
    throw InputError("unknown table format '" + format + "' (use csv or md)");
  std::filesystem::create_directories(out_dir);
  for (const auto& spec : table_specs()) write_table(spec, reports, format, out_dir);

  // radar series: one entry per method with its five dimension values
  json radar = json::array();
  for (const auto& report : reports) {
    json dims = json::object();
    if (report.contains("dimension_means")) {
      for (const auto& d : all_dimensions()) {
        if (report["dimension_means"].contains(d) && report["dimension_means"][d].is_number())
          dims[d] = report["dimension_means"][d].get<double>() * 100.0;
      }
    }
    radar.push_back(json{{"method", report.value("method", "?")}, {"dimensions", dims}});
  }
  std::ofstream(out_dir / "radar.json") << radar.dump(2) << "\n";
}

void emit_correlations(const json& report,
                       const std::vector<std::pair<std::string, std::string>>& pairs,
                       const std::string& format, const std::filesystem::path& out_dir) {
  if (format != "csv" && format != "md")
    throw InputError("unknown table format '" + format + "' (use csv or md)");
  std::filesystem::create_directories(out_dir);
  json rows = correlation_table(report, pairs);

  auto cell = [&](const json& row, const char* key) -> std::string {
    if (!row.contains(key) || !row[key].is_number()) return kNa;
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4f", row[key].get<double>());
    return buf;
  };
  std::ofstream out(out_dir / (std::string("correlations.") + format));
  if (format == "md") {
    out << "| Metric 1 | Metric 2 | Pearson r | Spearman rho | Kendall tau | n |\n";
    out << "| --- | --- | --- | --- | --- | --- |\n";
    for (const auto& row : rows) {
      out << "| " << row["metric_1"].get<std::string>() << " | "
          << row["metric_2"].get<std::string>() << " | " << cell(row, "pearson") << " | "
          << cell(row, "spearman") << " | " << cell(row, "kendall") << " | " << row["n"]
          << " |\n";
    }
  } else {
    out << "metric_1,metric_2,pearson,spearman,kendall,n\n";
    for (const auto& row : rows) {
      out << row["metric_1"].get<std::string>() << "," << row["metric_2"].get<std::string>() << ","
          << cell(row, "pearson") << "," << cell(row, "spearman") << "," << cell(row, "kendall")
          << "," << row["n"] << "\n";
    }
  }

  // scatter data with OLS lines for external plotting
  json scatter = json::array();
  for (auto& row : rows) {
    json entry{{"metric_1", row["metric_1"]}, {"metric_2", row["metric_2"]}};
    if (row.contains("points")) entry["points"] = row["points"];
    if (row.contains("ols")) entry["ols"] = row["ols"];
    scatter.push_back(entry);
  }
  std::ofstream(out_dir / "scatter.json") << scatter.dump(2) << "\n";
}

}  // namespace lveval
