#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "lveval/json_util.hpp"
#include "lveval/types.hpp"

namespace lveval {

// Layered configuration: built-in defaults <- config file <- LVEVAL_SET
// environment variable <- CLI --set flags. Every metric constant lives under
// "metrics" and is echoed into report metadata so results carry their knobs.
class Config {
 public:
  Config();
  explicit Config(json values);

  static Config defaults();
  static Config load(const std::filesystem::path& file,
                     const std::vector<std::string>& cli_overrides = {});

  // Overlays `other` on top of this config (deep merge, scalars replaced).
  void merge(const json& other);
  // Applies one "dotted.path=value" override; value parsed as JSON if valid,
  // kept as string otherwise.
  void set(const std::string& assignment);

  const json& root() const { return values_; }
  json at(const std::string& dotted_path) const;  // null when absent

  double number(const std::string& path, double fallback) const;
  int integer(const std::string& path, int fallback) const;
  bool boolean(const std::string& path, bool fallback) const;
  std::string text(const std::string& path, const std::string& fallback) const;
  std::vector<double> numbers(const std::string& path) const;

  std::map<std::string, ThemeCategory> theme_categories() const;

  // The score-affecting sections (metrics, providers, suite) — what gets
  // echoed into reports and hashed for checkpoints. Run-control knobs like
  // worker count or stop_after deliberately stay out, so staged or resumed
  // runs remain compatible with full ones.
  json scoring_view() const;

  // Digest over scoring_view(); stored in checkpoints so a resumed run never
  // mixes results computed under different settings.
  std::string digest() const;

 private:
  json values_;
};

}  // namespace lveval
