#include "lveval/suite.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>

namespace lveval {

namespace {

std::string get_string(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end() || !it->is_string()) return {};
  return it->get<std::string>();
}

}  // namespace

json to_json(const EventSpec& e) {
  // "camera motion" keeps its space: this is the on-disk key of the suite
  // schema and of extractor outputs.
  return json{{"event", e.event},
              {"subject", e.subject},
              {"setting", e.setting},
              {"action", e.action},
              {"camera motion", e.camera_motion}};
}

EventSpec event_from_json(const json& j) {
  EventSpec e;
  if (!j.is_object()) throw ParseError("event is not an object: " + j.dump());
  e.event = get_string(j, "event");
  e.subject = get_string(j, "subject");
  e.setting = get_string(j, "setting");
  e.action = get_string(j, "action");
  std::string cam = get_string(j, "camera motion");
  if (cam.empty()) cam = get_string(j, "camera_motion");
  e.camera_motion = cam.empty() ? "static" : cam;
  return e;
}

json to_json(const PromptRecord& r) {
  json j{{"id", r.id},
         {"theme", r.theme},
         {"prompt_text", r.prompt_text},
         {"prompt_base", r.prompt_base}};
  if (r.category) j["category"] = to_label(*r.category);
  j["ground_truth_events"] = json::array();
  for (const auto& e : r.ground_truth_events) j["ground_truth_events"].push_back(to_json(e));
  j["herd_questions"] = json::array();
  for (const auto& q : r.herd_questions) {
    j["herd_questions"].push_back(
        json{{"dimension", to_label(q.dimension)},
             {"text", q.text},
             {"polarity", q.polarity == Polarity::unknown ? q.raw_polarity
                                                          : to_label(q.polarity)}});
  }
  j["human_actions"] = json::array();
  for (const auto& a : r.human_actions)
    j["human_actions"].push_back(json{{"subject", a.subject}, {"action", a.action}});
  if (r.complexity) {
    j["complexity"] = json{{"semantic", r.complexity->semantic},
                           {"structural", r.complexity->structural},
                           {"control", r.complexity->control},
                           {"average", r.complexity->average}};
  }
  return j;
}

PromptRecord record_from_json(const json& j,
                              const std::map<std::string, ThemeCategory>& theme_categories) {
  if (!j.is_object()) throw ParseError("sample is not an object");
  PromptRecord r;
  r.id = get_string(j, "id");
  r.theme = get_string(j, "theme");
  r.prompt_text = get_string(j, "prompt_text");
  r.prompt_base = get_string(j, "prompt_base");
  if (j.contains("category")) {
    r.category = category_from_label(get_string(j, "category"));
  } else if (auto it = theme_categories.find(r.theme); it != theme_categories.end()) {
    r.category = it->second;
  }
  if (auto it = j.find("ground_truth_events"); it != j.end() && it->is_array()) {
    for (const auto& e : *it) r.ground_truth_events.push_back(event_from_json(e));
  }
  if (auto it = j.find("herd_questions"); it != j.end() && it->is_array()) {
    for (const auto& q : *it) {
      HerdQuestion hq;
      std::string dimension = get_string(q, "dimension");
      if (auto d = herd_dimension_from_label(dimension)) hq.dimension = *d;
      hq.text = get_string(q, "text");
      std::string pol = get_string(q, "polarity");
      if (pol == "positive") {
        hq.polarity = Polarity::positive;
      } else if (pol == "negative") {
        hq.polarity = Polarity::negative;
      } else {
        hq.polarity = Polarity::unknown;
        hq.raw_polarity = pol;
      }
      r.herd_questions.push_back(std::move(hq));
    }
  }
  if (auto it = j.find("human_actions"); it != j.end() && it->is_array()) {
    for (const auto& a : *it)
      r.human_actions.push_back(ActionSpec{get_string(a, "subject"), get_string(a, "action")});
  }
  if (auto it = j.find("complexity"); it != j.end() && it->is_object()) {
    ComplexityScore c;
    c.semantic = it->value("semantic", 0);
    c.structural = it->value("structural", 0);
    c.control = it->value("control", 0);
    c.average = it->value("average", 0.0);
    r.complexity = c;
  }
  return r;
}

json to_json(const Suite& s) {
  json j{{"version", s.version}};
  j["samples"] = json::array();
  for (const auto& r : s.samples) j["samples"].push_back(to_json(r));
  return j;
}

Suite suite_from_json(const json& j,
                      const std::map<std::string, ThemeCategory>& theme_categories) {
  if (!j.is_object() || !j.contains("samples") || !j["samples"].is_array()) {
    throw ParseError("suite document must be {\"version\":..., \"samples\":[...]}");
  }
  Suite s;
  s.version = j.value("version", "1");
  for (const auto& rec : j["samples"]) s.samples.push_back(record_from_json(rec, theme_categories));
  return s;
}

Suite load_suite(const std::filesystem::path& path,
                 const std::map<std::string, ThemeCategory>& theme_categories) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open suite file: " + path.string());
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded()) throw ParseError("suite file is not valid JSON: " + path.string());
  return suite_from_json(j, theme_categories);
}

void save_suite(const Suite& suite, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write suite file: " + path.string());
  out << to_json(suite).dump(2) << "\n";
}

std::vector<std::string> validate_prompt_record(const PromptRecord& record,
                                                const SuiteRules& rules) {
  std::vector<std::string> v;
  if (record.id.empty()) v.push_back("id: must be nonempty");
  if (record.prompt_base.empty()) v.push_back("prompt_base: must be nonempty");
  if (!rules.allowed_themes.empty() &&
      std::find(rules.allowed_themes.begin(), rules.allowed_themes.end(), record.theme) ==
          rules.allowed_themes.end()) {
    v.push_back("theme: '" + record.theme + "' not in configured theme list");
  }
  if (!record.category) v.push_back("category: missing and theme not mapped to a category");

  for (std::size_t i = 0; i < record.ground_truth_events.size(); ++i) {
    if (record.ground_truth_events[i].event.empty())
      v.push_back("ground_truth_events[" + std::to_string(i) + "].event: must be nonempty");
  }

  if (!record.herd_questions.empty()) {
    std::map<HerdDimension, int> per_dim;
    for (std::size_t i = 0; i < record.herd_questions.size(); ++i) {
      const auto& q = record.herd_questions[i];
      ++per_dim[q.dimension];
      if (q.polarity == Polarity::unknown)
        v.push_back("herd_questions[" + std::to_string(i) +
                    "].polarity: not in {positive,negative}");
      if (q.text.empty() || q.text.back() != '?')
        v.push_back("herd_questions[" + std::to_string(i) + "].text: must end with '?'");
    }
    if (int(per_dim.size()) != kHerdDimensionCount) {
      v.push_back("herd_questions: expected " + std::to_string(kHerdDimensionCount) +
                  " dimensions, found " + std::to_string(per_dim.size()));
    }
    for (const auto& [dimension, count] : per_dim) {
      if (count != rules.herd_questions_per_dimension) {
        v.push_back("herd_questions[" + to_label(dimension) + "]: expected " +
                    std::to_string(rules.herd_questions_per_dimension) + " questions, found " +
                    std::to_string(count));
      }
    }
  }

  for (std::size_t i = 0; i < record.human_actions.size(); ++i) {
    const auto& a = record.human_actions[i];
    if (a.subject.empty())
      v.push_back("human_actions[" + std::to_string(i) + "].subject: must be nonempty");
    if (a.action.empty())
      v.push_back("human_actions[" + std::to_string(i) + "].action: must be nonempty");
  }

  if (record.complexity) {
    const auto& c = *record.complexity;
    auto in_range = [](int x) { return x >= 1 && x <= 10; };
    if (!in_range(c.semantic) || !in_range(c.structural) || !in_range(c.control))
      v.push_back("complexity: scores must be integers in [1,10]");
    double mean = (c.semantic + c.structural + c.control) / 3.0;
    if (std::abs(mean - c.average) > 1e-9)
      v.push_back("complexity.average: not the mean of the three scores");
  }
  return v;
}

std::vector<std::string> validate_suite(const Suite& suite, const SuiteRules& rules) {
  std::vector<std::string> v;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < suite.samples.size(); ++i) {
    const auto& r = suite.samples[i];
    std::string prefix = "samples[" + std::to_string(i) + "].";
    for (const auto& violation : validate_prompt_record(r, rules)) v.push_back(prefix + violation);
    if (!r.id.empty() && !seen.insert(r.id).second)
      v.push_back(prefix + "id: duplicate id '" + r.id + "'");
  }
  return v;
}

}  // namespace lveval
