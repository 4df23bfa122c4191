#include "lveval/types.hpp"

#include <cmath>
#include <cstdio>

namespace lveval {

std::string to_label(ThemeCategory c) {
  switch (c) {
    case ThemeCategory::human_real_life: return "human-real-life";
    case ThemeCategory::nature_exploration: return "nature-exploration";
    case ThemeCategory::virtual_entertainment: return "virtual-entertainment";
  }
  return {};
}

std::string to_label(HerdDimension d) {
  switch (d) {
    case HerdDimension::emotional_response: return "emotional-response";
    case HerdDimension::narrative_flow: return "narrative-flow";
    case HerdDimension::character_development: return "character-development";
    case HerdDimension::visual_style: return "visual-style";
    case HerdDimension::themes: return "themes";
    case HerdDimension::interpretive_depth: return "interpretive-depth";
    case HerdDimension::overall_impression: return "overall-impression";
  }
  return {};
}

std::string to_label(ClarityDimension d) {
  switch (d) {
    case ClarityDimension::theme_clarity: return "theme-clarity";
    case ClarityDimension::logical_structure: return "logical-structure";
    case ClarityDimension::information_completeness: return "information-completeness";
    case ClarityDimension::information_consistency: return "information-consistency";
  }
  return {};
}

std::string to_label(Polarity p) {
  switch (p) {
    case Polarity::positive: return "positive";
    case Polarity::negative: return "negative";
    case Polarity::unknown: return "unknown";
  }
  return {};
}

std::string to_label(MetricStatus s) {
  switch (s) {
    case MetricStatus::ok: return "ok";
    case MetricStatus::not_applicable: return "not_applicable";
    case MetricStatus::error: return "error";
  }
  return {};
}

std::optional<ThemeCategory> category_from_label(const std::string& s) {
  for (auto c : {ThemeCategory::human_real_life, ThemeCategory::nature_exploration,
                 ThemeCategory::virtual_entertainment}) {
    if (to_label(c) == s) return c;
  }
  return std::nullopt;
}

const std::vector<HerdDimension>& all_herd_dimensions() {
  static const std::vector<HerdDimension> dims = {
      HerdDimension::emotional_response,  HerdDimension::narrative_flow,
      HerdDimension::character_development, HerdDimension::visual_style,
      HerdDimension::themes,              HerdDimension::interpretive_depth,
      HerdDimension::overall_impression,
  };
  return dims;
}

const std::vector<ClarityDimension>& all_clarity_dimensions() {
  static const std::vector<ClarityDimension> dims = {
      ClarityDimension::theme_clarity,
      ClarityDimension::logical_structure,
      ClarityDimension::information_completeness,
      ClarityDimension::information_consistency,
  };
  return dims;
}

std::optional<HerdDimension> herd_dimension_from_label(const std::string& s) {
  for (auto d : all_herd_dimensions()) {
    if (to_label(d) == s) return d;
  }
  return std::nullopt;
}

std::optional<ClarityDimension> clarity_dimension_from_label(const std::string& s) {
  for (auto d : all_clarity_dimensions()) {
    if (to_label(d) == s) return d;
  }
  return std::nullopt;
}

MetricScore MetricScore::ok(std::string id, double raw, double normalized) {
  MetricScore m;
  m.metric_id = std::move(id);
  m.raw = raw;
  m.normalized = normalized;
  m.status = MetricStatus::ok;
  return m;
}

MetricScore MetricScore::not_applicable(std::string id, std::string reason) {
  MetricScore m;
  m.metric_id = std::move(id);
  m.status = MetricStatus::not_applicable;
  m.diagnostics["reason"] = std::move(reason);
  return m;
}

MetricScore MetricScore::error(std::string id, std::string what) {
  MetricScore m;
  m.metric_id = std::move(id);
  m.status = MetricStatus::error;
  m.diagnostics["error"] = std::move(what);
  return m;
}

std::string clarity_metric_id(ClarityDimension d) {
  std::string label = to_label(d);
  for (char& c : label) {
    if (c == '-') c = '_';
  }
  return "clarity_" + label;
}

std::string herd_metric_id(HerdDimension d) {
  std::string label = to_label(d);
  for (char& c : label) {
    if (c == '-') c = '_';
  }
  return "herd_" + label;
}

const std::vector<std::string>& all_dimensions() {
  static const std::vector<std::string> dims = {
      dim::static_quality, dim::text_video_alignment, dim::temporal_quality,
      dim::content_clarity, dim::herd,
  };
  return dims;
}

const std::vector<std::string>& metrics_of_dimension(const std::string& dimension) {
  static const std::map<std::string, std::vector<std::string>> table = [] {
    std::map<std::string, std::vector<std::string>> t;
    t[dim::static_quality] = {metric::aesthetic_quality, metric::technical_quality};
    t[dim::text_video_alignment] = {metric::overall_alignment, metric::event_alignment};
    t[dim::temporal_quality] = {
        metric::dynamic_degree,       metric::motion_smoothness,
        metric::warping_error,        metric::semantic_consistency,
        metric::temporal_flickering,  metric::transition_smoothness,
        metric::human_action,         metric::intra_event_subject,
        metric::intra_event_background, metric::inter_event_subject,
        metric::inter_event_background,
    };
    std::vector<std::string> clarity;
    for (auto d : all_clarity_dimensions()) clarity.push_back(clarity_metric_id(d));
    t[dim::content_clarity] = clarity;
    std::vector<std::string> herd;
    for (auto d : all_herd_dimensions()) herd.push_back(herd_metric_id(d));
    t[dim::herd] = herd;
    return t;
  }();
  static const std::vector<std::string> empty;
  auto it = table.find(dimension);
  return it == table.end() ? empty : it->second;
}

std::string dimension_of_metric(const std::string& metric_id) {
  for (const auto& d : all_dimensions()) {
    for (const auto& m : metrics_of_dimension(d)) {
      if (m == metric_id) return d;
    }
  }
  return {};
}

double normalize_percent(double raw) {
  if (!(raw >= 0.0 && raw <= 1.0)) {
    throw InputError("normalize_percent: value " + std::to_string(raw) +
                     " outside [0,1]");
  }
  return 100.0 * raw;
}

std::string percent_string(double normalized) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", normalize_percent(normalized));
  return buf;
}

}  // namespace lveval
