#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "lveval/json_util.hpp"
#include "lveval/types.hpp"

namespace lveval {

struct Suite {
  std::string version = "1";
  std::vector<PromptRecord> samples;
};

// Validation knobs; defaults follow the suite conventions (7 HERD dimensions
// with 6 questions each, free theme vocabulary unless a list is given).
struct SuiteRules {
  int herd_questions_per_dimension = 6;
  std::vector<std::string> allowed_themes;  // empty = accept any theme
};

json to_json(const EventSpec& e);
json to_json(const PromptRecord& r);
json to_json(const Suite& s);

// Lenient parsers: structurally broken documents throw ParseError, while
// value-level problems (bad polarity, out-of-range complexity) survive into
// the record so validate_prompt_record can report them.
EventSpec event_from_json(const json& j);
PromptRecord record_from_json(const json& j,
                              const std::map<std::string, ThemeCategory>& theme_categories = {});
Suite suite_from_json(const json& j,
                      const std::map<std::string, ThemeCategory>& theme_categories = {});

Suite load_suite(const std::filesystem::path& path,
                 const std::map<std::string, ThemeCategory>& theme_categories = {});
void save_suite(const Suite& suite, const std::filesystem::path& path);

// Returns one "field: rule" line per violated invariant; empty means valid.
std::vector<std::string> validate_prompt_record(const PromptRecord& record,
                                                const SuiteRules& rules = {});

// Record-level checks for every sample plus suite-level id uniqueness.
// Violations are prefixed with "samples[i]." for attribution.
std::vector<std::string> validate_suite(const Suite& suite, const SuiteRules& rules = {});

}  // namespace lveval
