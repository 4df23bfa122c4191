#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lveval {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Enumerations
// ---------------------------------------------------------------------------

enum class ThemeCategory { human_real_life, nature_exploration, virtual_entertainment };

enum class HerdDimension {
  emotional_response,
  narrative_flow,
  character_development,
  visual_style,
  themes,
  interpretive_depth,
  overall_impression,
};
inline constexpr int kHerdDimensionCount = 7;

enum class ClarityDimension {
  theme_clarity,
  logical_structure,
  information_completeness,
  information_consistency,
};
inline constexpr int kClarityDimensionCount = 4;

enum class Polarity { positive, negative, unknown };

enum class MetricStatus { ok, not_applicable, error };

// Canonical kebab-case labels used in suite files and reports.
std::string to_label(ThemeCategory c);
std::string to_label(HerdDimension d);
std::string to_label(ClarityDimension d);
std::string to_label(Polarity p);
std::string to_label(MetricStatus s);
std::optional<ThemeCategory> category_from_label(const std::string& s);
std::optional<HerdDimension> herd_dimension_from_label(const std::string& s);
std::optional<ClarityDimension> clarity_dimension_from_label(const std::string& s);

const std::vector<HerdDimension>& all_herd_dimensions();
const std::vector<ClarityDimension>& all_clarity_dimensions();

// ---------------------------------------------------------------------------
// Suite record types
// ---------------------------------------------------------------------------

struct EventSpec {
  std::string event;
  std::string subject;  // empty string allowed (no clear visual subject)
  std::string setting;
  std::string action;
  std::string camera_motion = "static";

  bool operator==(const EventSpec&) const = default;
};

struct HerdQuestion {
  HerdDimension dimension = HerdDimension::emotional_response;
  std::string text;
  Polarity polarity = Polarity::unknown;
  std::string raw_polarity;  // preserved when polarity failed to parse

  bool operator==(const HerdQuestion&) const = default;
};

struct ActionSpec {
  std::string subject;
  std::string action;

  bool operator==(const ActionSpec&) const = default;
};

struct ComplexityScore {
  int semantic = 0;   // 1-10
  int structural = 0; // 1-10
  int control = 0;    // 1-10
  double average = 0.0;

  bool operator==(const ComplexityScore&) const = default;
};

struct PromptRecord {
  std::string id;
  std::string theme;
  std::optional<ThemeCategory> category;
  std::string prompt_text;
  std::string prompt_base;
  std::vector<EventSpec> ground_truth_events;  // textual order preserved
  std::vector<HerdQuestion> herd_questions;
  std::vector<ActionSpec> human_actions;
  std::optional<ComplexityScore> complexity;

  bool operator==(const PromptRecord&) const = default;
};

struct VideoAsset {
  std::string sample_id;
  std::string path;
  double fps = 0.0;
  long frame_count = 0;

  double duration_s() const { return fps > 0 ? double(frame_count) / fps : 0.0; }
};

// ---------------------------------------------------------------------------
// Scores
// ---------------------------------------------------------------------------

struct MetricScore {
  std::string metric_id;
  double raw = 0.0;
  double normalized = 0.0;  // meaningful only when status == ok
  MetricStatus status = MetricStatus::ok;
  std::map<std::string, std::string> diagnostics;

  static MetricScore ok(std::string id, double raw, double normalized);
  static MetricScore not_applicable(std::string id, std::string reason);
  static MetricScore error(std::string id, std::string what);
};

struct ScoreReport {
  std::string sample_id;
  std::map<std::string, MetricScore> metrics;           // metric_id -> score
  std::map<std::string, double> dimension_averages;     // dimension -> mean
  std::optional<double> overall_average;
};

struct SimilarityMatrix {
  int rows = 0;  // generated events
  int cols = 0;  // ground-truth events
  std::vector<double> values;  // row-major, each value clamped to [0,1]

  double at(int r, int c) const { return values[std::size_t(r) * cols + c]; }
  double& at(int r, int c) { return values[std::size_t(r) * cols + c]; }
};

// ---------------------------------------------------------------------------
// Metric/dimension registry
// ---------------------------------------------------------------------------

namespace dim {
inline constexpr const char* static_quality = "static_quality";
inline constexpr const char* text_video_alignment = "text_video_alignment";
inline constexpr const char* temporal_quality = "temporal_quality";
inline constexpr const char* content_clarity = "content_clarity";
inline constexpr const char* herd = "herd";
}  // namespace dim

namespace metric {
inline constexpr const char* aesthetic_quality = "aesthetic_quality";
inline constexpr const char* technical_quality = "technical_quality";
inline constexpr const char* overall_alignment = "overall_alignment";
inline constexpr const char* event_alignment = "event_alignment";
inline constexpr const char* dynamic_degree = "dynamic_degree";
inline constexpr const char* motion_smoothness = "motion_smoothness";
inline constexpr const char* warping_error = "warping_error";
inline constexpr const char* semantic_consistency = "semantic_consistency";
inline constexpr const char* temporal_flickering = "temporal_flickering";
inline constexpr const char* transition_smoothness = "transition_smoothness";
inline constexpr const char* human_action = "human_action";
inline constexpr const char* intra_event_subject = "intra_event_subject_consistency";
inline constexpr const char* intra_event_background = "intra_event_background_consistency";
inline constexpr const char* inter_event_subject = "inter_event_subject_consistency";
inline constexpr const char* inter_event_background = "inter_event_background_consistency";
}  // namespace metric

// All five dimensions in report order.
const std::vector<std::string>& all_dimensions();

// Sub-dimension metric ids of one dimension, in table column order. Clarity
// metrics are "clarity_<dim>", HERD metrics "herd_<dim>".
const std::vector<std::string>& metrics_of_dimension(const std::string& dimension);

// Dimension a metric id belongs to; empty when unknown.
std::string dimension_of_metric(const std::string& metric_id);

std::string clarity_metric_id(ClarityDimension d);
std::string herd_metric_id(HerdDimension d);

// ---------------------------------------------------------------------------
// Operations
// ---------------------------------------------------------------------------

// Maps a [0,1] score to the percent scale used for display. Rounding to two
// decimals happens only at formatting time.
double normalize_percent(double raw);

// Formats a [0,1] score as a 2-decimal percent string.
std::string percent_string(double normalized);

}  // namespace lveval
