#include "lveval/clarity_herd.hpp"

#include <algorithm>
#include <fstream>

#include "lveval/json_util.hpp"
#include "lveval/templates.hpp"

namespace lveval {

namespace {

// Accepts {"Theme Clarity": {"score":..}, ...} with forgiving key matching
// (case and separators), or an array of {"dimension","score","reason"}.
std::optional<ClarityTrial> parse_clarity_trial(const std::string& raw, int trial_index) {
  json parsed;
  try {
    parsed = parse_json_block(raw);
  } catch (const ParseError&) {
    return std::nullopt;
  }
  auto canon = [](std::string s) {
    std::string out;
    for (char c : s) {
      if (std::isalnum(static_cast<unsigned char>(c)))
        out += char(std::tolower(static_cast<unsigned char>(c)));
    }
    return out;
  };
  std::map<std::string, ClarityDimension> lookup;
  for (auto d : all_clarity_dimensions()) lookup[canon(to_label(d))] = d;

  ClarityTrial trial;
  trial.trial_index = trial_index;
  auto add = [&](const std::string& name, const json& body) {
    auto it = lookup.find(canon(name));
    if (it == lookup.end()) return;
    if (!body.is_object() || !body.contains("score") || !body["score"].is_number_integer())
      return;
    int score = body["score"].get<int>();
    if (score < 0 || score > 4) return;
    trial.scores[it->second] = score;
    trial.reasons[it->second] = body.value("reason", "");
  };
  if (parsed.is_object()) {
    for (auto it = parsed.begin(); it != parsed.end(); ++it) add(it.key(), *it);
  } else if (parsed.is_array()) {
    for (const auto& item : parsed) {
      if (item.is_object() && item.contains("dimension")) add(item["dimension"], item);
    }
  }
  if (int(trial.scores.size()) != kClarityDimensionCount) return std::nullopt;
  return trial;
}

}  // namespace

std::vector<ClarityTrial> run_clarity_trials(const VideoAsset& video, ProviderHub& hub,
                                             int trials) {
  if (trials < 1) throw InputError("run_clarity_trials: need at least one trial");
  std::vector<ClarityTrial> valid;
  for (int trial = 0; trial < trials; ++trial) {
    std::optional<ClarityTrial> parsed;
    for (int attempt = 0; attempt < 2 && !parsed; ++attempt) {
      // the retry gets its own sampling seed, far away from regular trials
      int seed = attempt == 0 ? trial : trials + trial;
      std::string raw = hub.describe(video.path, templates::content_clarity_judge.text,
                                     templates::content_clarity_judge.version, seed,
                                     video.sample_id);
      parsed = parse_clarity_trial(raw, trial);
    }
    if (parsed) valid.push_back(std::move(*parsed));
  }
  if (valid.empty())
    throw ProviderError("all clarity trials invalid for sample " + video.sample_id);
  return valid;
}

ClarityResult clarity_score(const std::vector<ClarityTrial>& trials) {
  if (trials.empty()) throw InputError("clarity_score: no valid trials");
  ClarityResult result;
  result.trials = trials;
  double total = 0.0;
  for (auto d : all_clarity_dimensions()) {
    double sum = 0.0;
    for (const auto& t : trials) sum += t.scores.at(d) / 4.0;
    double value = sum / double(trials.size());
    result.per_dimension[d] = MetricScore::ok(clarity_metric_id(d), value, clamp01(value));
    total += value;
  }
  double overall = total / double(kClarityDimensionCount);
  result.overall = MetricScore::ok("content_clarity", overall, clamp01(overall));
  result.overall.diagnostics["trials"] = std::to_string(trials.size());
  return result;
}

std::vector<HerdResponse> herd_answer(const PromptRecord& record, const VideoAsset& video,
                                      ProviderHub& hub) {
  if (record.herd_questions.empty())
    throw InputError("herd_answer: record has no questions: " + record.id);
  std::vector<HerdResponse> responses;
  responses.reserve(record.herd_questions.size());
  for (const auto& question : record.herd_questions) {
    std::string prompt =
        render_template(templates::herd_vqa.text, {{"question_text", question.text}});
    std::string raw = hub.answer(video.path, question.text, prompt, templates::herd_vqa.version,
                                 "yes_no_unclear", video.sample_id);
    std::string token = canonical_token(raw);
    HerdResponse response;
    response.question = question;
    response.raw_answer = raw;
    if (token == "yes") {
      response.answer = HerdAnswer::yes;
    } else if (token == "no") {
      response.answer = HerdAnswer::no;
    } else {
      response.answer = HerdAnswer::unclear;
      response.canonical = token == "unclear";
    }
    responses.push_back(std::move(response));
  }
  return responses;
}

HerdResult herd_score(const std::vector<HerdResponse>& responses) {
  if (responses.empty()) throw InputError("herd_score: no responses");
  HerdResult result;
  result.responses = responses;

  std::map<HerdDimension, std::pair<int, int>> tallies;  // dimension -> (consistent, valid)
  for (const auto& r : responses) {
    if (r.answer == HerdAnswer::unclear) continue;
    bool consistent = (r.answer == HerdAnswer::yes && r.question.polarity == Polarity::positive) ||
                      (r.answer == HerdAnswer::no && r.question.polarity == Polarity::negative);
    auto& [good, valid] = tallies[r.question.dimension];
    ++valid;
    if (consistent) ++good;
  }

  std::vector<double> dimension_values;
  for (auto d : all_herd_dimensions()) {
    auto it = tallies.find(d);
    if (it == tallies.end() || it->second.second == 0) {
      // only report dimensions the suite actually asked about
      bool asked = std::any_of(responses.begin(), responses.end(),
                               [&](const HerdResponse& r) { return r.question.dimension == d; });
      if (asked)
        result.per_dimension[d] =
            MetricScore::not_applicable(herd_metric_id(d), "no valid yes/no answers");
      continue;
    }
    double value = double(it->second.first) / double(it->second.second);
    MetricScore s = MetricScore::ok(herd_metric_id(d), value, clamp01(value));
    s.diagnostics["valid_answers"] = std::to_string(it->second.second);
    result.per_dimension[d] = s;
    dimension_values.push_back(value);
  }

  if (dimension_values.empty()) {
    result.overall = MetricScore::not_applicable("herd", "all answers unclear");
  } else {
    double value = clamp01(mean(dimension_values));
    result.overall = MetricScore::ok("herd", value, value);
    result.overall.diagnostics["dimensions_scored"] = std::to_string(dimension_values.size());
  }
  long fallbacks = std::count_if(responses.begin(), responses.end(),
                                 [](const HerdResponse& r) { return !r.canonical; });
  if (fallbacks > 0)
    result.overall.diagnostics["answers_coerced_to_unclear"] = std::to_string(fallbacks);
  return result;
}

ClarityResult evaluate_clarity(const VideoAsset& video, ProviderHub& hub, int trials,
                               const std::filesystem::path& artifacts_dir) {
  std::vector<ClarityTrial> valid = run_clarity_trials(video, hub, trials);
  ClarityResult result = clarity_score(valid);
  result.dropped_trials = trials - int(valid.size());
  if (result.dropped_trials > 0)
    result.overall.diagnostics["dropped_trials"] = std::to_string(result.dropped_trials);
  if (!artifacts_dir.empty()) {
    std::filesystem::create_directories(artifacts_dir);
    json out = json::array();
    for (const auto& t : result.trials) {
      json scores = json::object();
      for (const auto& [d, s] : t.scores) {
        scores[to_label(d)] = json{{"score", s}, {"reason", t.reasons.at(d)}};
      }
      out.push_back(json{{"trial_index", t.trial_index}, {"scores", scores}});
    }
    std::ofstream(artifacts_dir / "clarity_trials.json") << out.dump(2) << "\n";
  }
  return result;
}

HerdResult evaluate_herd(const PromptRecord& record, const VideoAsset& video, ProviderHub& hub,
                         const std::filesystem::path& artifacts_dir) {
  HerdResult result = herd_score(herd_answer(record, video, hub));
  if (!artifacts_dir.empty()) {
    std::filesystem::create_directories(artifacts_dir);
    json out = json::array();
    for (const auto& r : result.responses) {
      out.push_back(json{{"dimension", to_label(r.question.dimension)},
                         {"question", r.question.text},
                         {"polarity", to_label(r.question.polarity)},
                         {"answer", to_label(r.answer)},
                         {"raw_answer", r.raw_answer}});
    }
    std::ofstream(artifacts_dir / "herd_responses.json") << out.dump(2) << "\n";
  }
  return result;
}

const char* to_label(HerdAnswer a) {
  switch (a) {
    case HerdAnswer::yes: return "yes";
    case HerdAnswer::no: return "no";
    case HerdAnswer::unclear: return "unclear";
  }
  return "unclear";
}

}  // namespace lveval
