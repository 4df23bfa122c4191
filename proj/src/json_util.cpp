#include "lveval/json_util.hpp"

#include <cctype>

namespace lveval {

namespace {

// Finds the end of the JSON value starting at `start` (which must point at
// '{' or '['), honoring strings and escapes. Returns npos when unbalanced.
std::size_t matching_close(std::string_view text, std::size_t start) {
  char open = text[start];
  char close = open == '{' ? '}' : ']';
  int depth = 0;
  bool in_string = false;
  for (std::size_t i = start; i < text.size(); ++i) {
    char c = text[i];
    if (in_string) {
      if (c == '\\') {
        ++i;
      } else if (c == '"') {
        in_string = false;
      }
      continue;
    }
    if (c == '"') {
      in_string = true;
    } else if (c == '{' || c == '[') {
      ++depth;
    } else if (c == '}' || c == ']') {
      --depth;
      if (depth == 0) return c == close ? i : std::string_view::npos;
      if (depth < 0) return std::string_view::npos;
    }
  }
  return std::string_view::npos;
}

}  // namespace

json parse_json_block(std::string_view llm_text) {
  // Prefer fenced blocks: the span between the first ``` pair looks like the
  // intended payload even when prose follows.
  std::size_t fence = llm_text.find("```");
  if (fence != std::string_view::npos) {
    std::size_t body = llm_text.find('\n', fence);
    std::size_t end = body == std::string_view::npos
                          ? std::string_view::npos
                          : llm_text.find("```", body);
    if (body != std::string_view::npos && end != std::string_view::npos) {
      std::string_view inner = llm_text.substr(body + 1, end - body - 1);
      try {
        return parse_json_block(inner);
      } catch (const ParseError&) {
        // fall through to a whole-text scan
      }
    }
  }
  for (std::size_t i = 0; i < llm_text.size(); ++i) {
    char c = llm_text[i];
    if (c != '{' && c != '[') continue;
    std::size_t end = matching_close(llm_text, i);
    if (end == std::string_view::npos) continue;
    std::string_view span = llm_text.substr(i, end - i + 1);
    json parsed = json::parse(span, nullptr, false);
    if (!parsed.is_discarded()) return parsed;
  }
  throw ParseError("no JSON object or array found in model output: " +
                   std::string(llm_text.substr(0, 200)));
}

std::string render_template(std::string_view tmpl,
                            const std::map<std::string, std::string>& values) {
  std::string out;
  out.reserve(tmpl.size());
  std::size_t pos = 0;
  while (pos < tmpl.size()) {
    std::size_t open = tmpl.find('{', pos);
    if (open == std::string_view::npos) {
      out.append(tmpl.substr(pos));
      break;
    }
    std::size_t close = tmpl.find('}', open);
    bool replaced = false;
    if (close != std::string_view::npos) {
      std::string key(tmpl.substr(open + 1, close - open - 1));
      auto it = values.find(key);
      if (it != values.end()) {
        out.append(tmpl.substr(pos, open - pos));
        out.append(it->second);
        pos = close + 1;
        replaced = true;
      }
    }
    if (!replaced) {
      out.append(tmpl.substr(pos, open - pos + 1));
      pos = open + 1;
    }
  }
  return out;
}

std::string canonical_token(std::string_view text) {
  std::size_t begin = 0;
  while (begin < text.size() && !std::isalpha(static_cast<unsigned char>(text[begin]))) ++begin;
  std::size_t end = begin;
  while (end < text.size() && std::isalpha(static_cast<unsigned char>(text[end]))) ++end;
  std::string token(text.substr(begin, end - begin));
  for (char& c : token) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return token;
}

}  // namespace lveval
