#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

namespace lveval {

using json = nlohmann::json;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Extracts the first well-formed JSON object or array embedded in raw model
// output. Handles ```json fences and surrounding prose. Throws ParseError
// when nothing parseable is found.
json parse_json_block(std::string_view llm_text);

// Substitutes {placeholder} markers in a prompt template. Unknown markers are
// left untouched so templates keep their literal braces.
std::string render_template(std::string_view tmpl,
                            const std::map<std::string, std::string>& values);

// Lowercases, trims, and strips trailing punctuation; returns the leading
// word. Used to canonicalize single-token model answers.
std::string canonical_token(std::string_view text);

}  // namespace lveval
