#include "lveval/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "lveval/digest.hpp"

namespace lveval {

namespace {

json default_values() {
  json j;
  j["metrics"] = {
      {"rr_ub", {{"value", 8.0}, {"top_fraction", 0.10}}},
      {"technical", {{"clip_max_s", 10.0}}},
      {"dynamic", {{"threshold_px", 1.0}, {"top_fraction", 0.05}, {"max_pairs", 16}}},
      {"motion", {{"max_reconstructions", 32}}},
      {"flicker", {{"static_threshold", 2.0}}},
      {"warp", {{"max_pairs", 16}}},
      {"semantic", {{"max_frames", 16}}},
      {"transition",
       {{"k", 8},
        {"alpha", {0.25, 0.25, 0.25, 0.25}},
        {"b", 1.0e4},
        {"c", 1.0}}},
      {"tracks", {{"frames_per_clip", 16}, {"dilate_radius", 2}}},
      {"clarity", {{"trials", 3}}},
      {"herd", {{"questions_per_dimension", 6}}},
  };
  json providers = json::object();
  for (const char* kind :
       {"text_embedder", "frame_embedder", "describer", "question_answerer", "scene_detector",
        "flow_estimator", "frame_interpolator", "segmenter", "grounder", "aesthetic_scorer",
        "technical_scorer", "llm_judge"}) {
    providers[kind] = {{"backend", "mock"},
                       {"endpoint", ""},
                       {"api_key_env", ""},
                       {"params", json::object()},
                       {"retries", 2},
                       {"max_concurrent", 4},
                       {"min_interval_ms", 0}};
  }
  // Frame-dense payloads are deterministic locally; caching them only costs
  // disk. Remote deployments can flip these back on.
  providers["flow_estimator"]["cache"] = false;
  providers["frame_interpolator"]["cache"] = false;
  providers["frame_embedder"]["cache"] = false;
  j["providers"] = providers;
  j["cache"] = {{"dir", ""}, {"enabled", true}};
  j["run"] = {{"workers", 2},
              {"stop_after", 0},
              {"max_parallel_requests", 8},
              {"video_extensions", {".y4m", ".mp4", ".webm", ".mkv"}}};
  j["suite"] = {
      {"herd_questions_per_dimension", 6},
      {"self_refine_iterations", 2},
      {"themes",
       {"food", "travel", "sports", "fashion", "minivlog", "dailylife", "education", "nature",
        "pets", "ocean", "wildlife", "plants", "weather", "gaming", "animation", "scifi", "dance",
        "music"}},
      {"theme_categories",
       {{"food", "human-real-life"},
        {"travel", "human-real-life"},
        {"sports", "human-real-life"},
        {"fashion", "human-real-life"},
        {"minivlog", "human-real-life"},
        {"dailylife", "human-real-life"},
        {"education", "human-real-life"},
        {"nature", "nature-exploration"},
        {"pets", "nature-exploration"},
        {"ocean", "nature-exploration"},
        {"wildlife", "nature-exploration"},
        {"plants", "nature-exploration"},
        {"weather", "nature-exploration"},
        {"gaming", "virtual-entertainment"},
        {"animation", "virtual-entertainment"},
        {"scifi", "virtual-entertainment"},
        {"dance", "virtual-entertainment"},
        {"music", "virtual-entertainment"}}},
  };
  return j;
}

void deep_merge(json& base, const json& overlay) {
  if (!overlay.is_object() || !base.is_object()) {
    base = overlay;
    return;
  }
  for (auto it = overlay.begin(); it != overlay.end(); ++it) {
    if (base.contains(it.key()) && base[it.key()].is_object() && it->is_object()) {
      deep_merge(base[it.key()], *it);
    } else {
      base[it.key()] = *it;
    }
  }
}

std::vector<std::string> split_path(const std::string& dotted) {
  std::vector<std::string> parts;
  std::stringstream ss(dotted);
  std::string item;
  while (std::getline(ss, item, '.')) {
    if (!item.empty()) parts.push_back(item);
  }
  return parts;
}

}  // namespace

Config::Config() : values_(default_values()) {}

Config::Config(json values) : values_(std::move(values)) {}

Config Config::defaults() { return Config(); }

Config Config::load(const std::filesystem::path& file,
                    const std::vector<std::string>& cli_overrides) {
  Config cfg;
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) throw InputError("cannot open config file: " + file.string());
    json overlay = json::parse(in, nullptr, false);
    if (overlay.is_discarded())
      throw InputError("config file is not valid JSON: " + file.string());
    cfg.merge(overlay);
  }
  if (const char* env = std::getenv("LVEVAL_SET")) {
    std::stringstream ss(env);
    std::string item;
    while (std::getline(ss, item, ';')) {
      if (!item.empty()) cfg.set(item);
    }
  }
  for (const auto& assignment : cli_overrides) cfg.set(assignment);
  return cfg;
}

void Config::merge(const json& other) { deep_merge(values_, other); }

void Config::set(const std::string& assignment) {
  auto eq = assignment.find('=');
  if (eq == std::string::npos)
    throw InputError("config override must be key=value: " + assignment);
  std::string path = assignment.substr(0, eq);
  std::string raw = assignment.substr(eq + 1);
  json value = json::parse(raw, nullptr, false);
  if (value.is_discarded()) value = raw;

  json* node = &values_;
  auto parts = split_path(path);
  if (parts.empty()) throw InputError("empty config key in: " + assignment);
  for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
    if (!node->contains(parts[i]) || !(*node)[parts[i]].is_object())
      (*node)[parts[i]] = json::object();
    node = &(*node)[parts[i]];
  }
  (*node)[parts.back()] = value;
}

json Config::at(const std::string& dotted_path) const {
  const json* node = &values_;
  for (const auto& part : split_path(dotted_path)) {
    if (!node->is_object() || !node->contains(part)) return json();
    node = &(*node)[part];
  }
  return *node;
}

double Config::number(const std::string& path, double fallback) const {
  json v = at(path);
  return v.is_number() ? v.get<double>() : fallback;
}

int Config::integer(const std::string& path, int fallback) const {
  json v = at(path);
  return v.is_number() ? v.get<int>() : fallback;
}

bool Config::boolean(const std::string& path, bool fallback) const {
  json v = at(path);
  return v.is_boolean() ? v.get<bool>() : fallback;
}

std::string Config::text(const std::string& path, const std::string& fallback) const {
  json v = at(path);
  return v.is_string() ? v.get<std::string>() : fallback;
}

std::vector<double> Config::numbers(const std::string& path) const {
  std::vector<double> out;
  json v = at(path);
  if (v.is_array()) {
    for (const auto& x : v) {
      if (x.is_number()) out.push_back(x.get<double>());
    }
  }
  return out;
}

std::map<std::string, ThemeCategory> Config::theme_categories() const {
  std::map<std::string, ThemeCategory> out;
  json v = at("suite.theme_categories");
  if (v.is_object()) {
    for (auto it = v.begin(); it != v.end(); ++it) {
      if (it->is_string()) {
        if (auto c = category_from_label(it->get<std::string>())) out[it.key()] = *c;
      }
    }
  }
  return out;
}

json Config::scoring_view() const {
  json out = json::object();
  for (const char* key : {"metrics", "providers", "suite"}) {
    if (values_.contains(key)) out[key] = values_[key];
  }
  return out;
}

std::string Config::digest() const { return sha256_hex(scoring_view().dump()); }

}  // namespace lveval
