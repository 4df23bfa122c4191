#include "lveval/suite_tools.hpp"

#include <set>

#include "lveval/json_util.hpp"
#include "lveval/suite.hpp"
#include "lveval/templates.hpp"

namespace lveval {

ComplexityScore score_prompt_complexity(const std::string& prompt, ProviderHub& hub,
                                        const std::string& context) {
  if (prompt.empty()) throw InputError("score_prompt_complexity: empty prompt");
  std::string rendered =
      render_template(templates::complexity_scoring.text, {{"prompt_text", prompt}});
  int retries = 1;
  for (int attempt = 0; attempt <= retries; ++attempt) {
    std::string raw =
        hub.judge_text(rendered, templates::complexity_scoring.version, attempt, context);
    try {
      json parsed = parse_json_block(raw);
      auto read = [&](const char* key) {
        if (!parsed.contains(key) || !parsed[key].is_object() ||
            !parsed[key].contains("score") || !parsed[key]["score"].is_number_integer())
          throw ParseError(std::string("missing integer score for ") + key);
        int score = parsed[key]["score"].get<int>();
        if (score < 1 || score > 10)
          throw ParseError(std::string(key) + " score out of range: " + std::to_string(score));
        return score;
      };
      ComplexityScore c;
      c.semantic = read("semantic_complexity");
      c.structural = read("structural_complexity");
      c.control = read("control_complexity");
      c.average = (c.semantic + c.structural + c.control) / 3.0;
      return c;
    } catch (const ParseError&) {
      if (attempt == retries) throw;
    }
  }
  throw ProviderError("complexity judging failed" + (context.empty() ? "" : " [" + context + "]"));
}

std::vector<ActionSpec> extract_human_actions(const std::string& prompt, ProviderHub& hub,
                                              const std::string& context) {
  if (prompt.empty()) throw InputError("extract_human_actions: empty prompt");
  std::string rendered =
      render_template(templates::human_action_extraction.text, {{"prompt_text", prompt}});
  int retries = 1;
  for (int attempt = 0; attempt <= retries; ++attempt) {
    std::string raw =
        hub.judge_text(rendered, templates::human_action_extraction.version, attempt, context);
    try {
      json parsed = parse_json_block(raw);
      if (!parsed.is_array()) throw ParseError("expected a JSON list of actions");
      std::vector<ActionSpec> actions;
      for (const auto& item : parsed) {
        if (!item.is_object()) throw ParseError("action entry is not an object");
        actions.push_back(ActionSpec{item.value("subject", ""), item.value("action", "")});
      }
      return actions;
    } catch (const ParseError&) {
      if (attempt == retries) throw;
    }
  }
  return {};
}

std::vector<HerdQuestion> generate_herd_questions(
    const std::map<HerdDimension, std::string>& dimension_evaluations, ProviderHub& hub,
    int questions_per_dimension, const std::string& context, int* accepted_duplicates) {
  for (auto d : all_herd_dimensions()) {
    if (!dimension_evaluations.count(d))
      throw InputError("generate_herd_questions: missing dimension " + to_label(d));
  }
  // Template input keys use the display form of the dimension names.
  const std::map<HerdDimension, std::string> display = {
      {HerdDimension::emotional_response, "Emotional Response"},
      {HerdDimension::narrative_flow, "Narrative Flow"},
      {HerdDimension::character_development, "Character Development"},
      {HerdDimension::visual_style, "Visual Style"},
      {HerdDimension::themes, "Themes"},
      {HerdDimension::interpretive_depth, "Interpretive Depth"},
      {HerdDimension::overall_impression, "Overall Impression"},
  };
  json input = json::object();
  for (const auto& [d, evaluation] : dimension_evaluations) input[display.at(d)] = evaluation;
  std::string rendered = render_template(templates::herd_question_generation.text,
                                         {{"evaluation_text", input.dump(2)}});

  std::map<HerdDimension, std::vector<std::string>> collected;
  std::map<HerdDimension, std::set<std::string>> seen;
  std::map<HerdDimension, bool> pending_regen;  // one retry per duplicate slot
  int duplicates_kept = 0;
  // One generation round yields one question per dimension; repeated sampling
  // (distinct trial seeds) fills the per-dimension quota.
  int max_rounds = questions_per_dimension * 3 + 2;
  for (int round = 0; round < max_rounds; ++round) {
    bool done = true;
    for (auto d : all_herd_dimensions()) {
      if (int(collected[d].size()) < questions_per_dimension) done = false;
    }
    if (done) break;
    std::string raw =
        hub.judge_text(rendered, templates::herd_question_generation.version, round, context);
    json parsed;
    try {
      parsed = parse_json_block(raw);
    } catch (const ParseError&) {
      continue;
    }
    if (!parsed.is_object()) continue;
    for (const auto& [d, name] : display) {
      if (int(collected[d].size()) >= questions_per_dimension) continue;
      if (!parsed.contains(name) || !parsed[name].is_string()) continue;
      std::string question = parsed[name].get<std::string>();
      if (question.empty()) continue;
      if (question.back() != '?') question += "?";
      bool duplicate = !seen[d].insert(question).second;
      if (duplicate) {
        if (!pending_regen[d]) {
          pending_regen[d] = true;  // regenerate once before accepting a repeat
          continue;
        }
        ++duplicates_kept;
      }
      pending_regen[d] = false;
      collected[d].push_back(question);
    }
  }
  if (accepted_duplicates) *accepted_duplicates = duplicates_kept;
  for (auto d : all_herd_dimensions()) {
    if (int(collected[d].size()) < questions_per_dimension)
      throw ProviderError("question generation stalled for dimension " + to_label(d) +
                          (context.empty() ? "" : " [" + context + "]"));
  }
  std::vector<HerdQuestion> questions;
  for (auto d : all_herd_dimensions()) {
    for (int i = 0; i < questions_per_dimension; ++i) {
      HerdQuestion q;
      q.dimension = d;
      q.text = collected[d][std::size_t(i)];
      q.polarity = Polarity::unknown;
      questions.push_back(std::move(q));
    }
  }
  return questions;
}

Polarity annotate_polarity(const std::string& question, ProviderHub& hub,
                           const std::string& context) {
  if (question.empty()) throw InputError("annotate_polarity: empty question");
  std::string rendered =
      render_template(templates::herd_polarity.text, {{"question_text", question}});
  int retries = 2;
  for (int attempt = 0; attempt <= retries; ++attempt) {
    std::string raw = hub.judge_text(rendered, templates::herd_polarity.version, attempt, context);
    std::string token = canonical_token(raw);
    if (token == "positive") return Polarity::positive;
    if (token == "negative") return Polarity::negative;
  }
  throw ProviderError("polarity annotation failed for question: " + question);
}

std::vector<std::string> split_event_prompts(const std::string& prompt,
                                             const std::vector<EventSpec>& events,
                                             ProviderHub& hub, const std::string& context) {
  if (events.empty()) throw InputError("split_event_prompts: no events");
  json events_json = json::array();
  for (const auto& e : events) events_json.push_back(to_json(e));
  std::string rendered = render_template(
      templates::event_prompt_split.text,
      {{"prompt_text", prompt}, {"events_json", events_json.dump(2)}});
  int retries = 1;
  for (int attempt = 0; attempt <= retries; ++attempt) {
    std::string raw =
        hub.judge_text(rendered, templates::event_prompt_split.version, attempt, context);
    try {
      json parsed = parse_json_block(raw);
      if (!parsed.is_array() || parsed.size() != events.size())
        throw ParseError("sub-prompt count does not match event count");
      std::vector<std::string> prompts;
      for (const auto& item : parsed) {
        std::string text = item.is_string() ? item.get<std::string>() : std::string();
        if (text.empty()) throw ParseError("empty sub-prompt");
        prompts.push_back(std::move(text));
      }
      return prompts;
    } catch (const ParseError&) {
      if (attempt == retries) throw;
    }
  }
  return {};
}

std::string self_refine_prompt(const std::string& seed_text, ProviderHub& hub, int iterations,
                               const std::string& context) {
  std::string draft = hub.judge_text(
      "Write a detailed video generation prompt based on this description:\n" + seed_text,
      "self-refine-v1", 0, context);
  for (int i = 0; i < iterations; ++i) {
    std::string critique = hub.judge_text(
        "Critique this video generation prompt for missing detail or inconsistency:\n" + draft,
        "self-refine-v1", 2 * i + 1, context);
    draft = hub.judge_text("Revise the prompt below to address the critique.\nPrompt:\n" + draft +
                               "\nCritique:\n" + critique,
                           "self-refine-v1", 2 * i + 2, context);
  }
  return draft;
}

}  // namespace lveval
