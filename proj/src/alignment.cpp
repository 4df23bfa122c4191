#include "lveval/alignment.hpp"

#include <fstream>

#include "lveval/hungarian.hpp"
#include "lveval/json_util.hpp"
#include "lveval/suite.hpp"
#include "lveval/templates.hpp"

namespace lveval {

namespace {

bool looks_like_bullet_list(const std::string& text) {
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string::npos) eol = text.size();
    std::size_t first = text.find_first_not_of(" \t", pos);
    if (first != std::string::npos && first < eol) {
      char c = text[first];
      if (c == '-' || c == '*' || c == '\xe2' /* bullet glyphs */) return true;
      if (std::isdigit(static_cast<unsigned char>(c)) && first + 1 < eol &&
          (text[first + 1] == '.' || text[first + 1] == ')'))
        return true;
    }
    pos = eol + 1;
  }
  return false;
}

double clamped_text_cosine(const std::string& a, const std::string& b, ProviderHub& hub,
                           const std::string& context) {
  return clamp01(cosine(hub.embed_text(a, context), hub.embed_text(b, context)));
}

}  // namespace

std::string describe_video(const VideoAsset& video, ProviderHub& hub, int retries) {
  for (int attempt = 0; attempt <= retries; ++attempt) {
    std::string text = hub.describe(video.path, templates::video_description.text,
                                    templates::video_description.version, attempt,
                                    video.sample_id);
    if (!text.empty() && !looks_like_bullet_list(text)) return text;
  }
  throw ProviderError("describer returned degenerate output for " + video.sample_id);
}

MetricScore overall_alignment(const std::string& description, const std::string& prompt_base,
                              ProviderHub& hub, const std::string& context) {
  if (description.empty() || prompt_base.empty())
    throw InputError("overall_alignment: empty text input");
  double sim = clamped_text_cosine(description, prompt_base, hub, context);
  return MetricScore::ok(metric::overall_alignment, sim, sim);
}

std::vector<EventSpec> extract_events(const std::string& text, ProviderHub& hub,
                                      const std::string& context) {
  if (text.empty()) throw InputError("extract_events: empty text");
  std::string prompt =
      render_template(templates::event_extraction.text, {{"description_text", text}});
  int retries = 1;
  for (int attempt = 0; attempt <= retries; ++attempt) {
    std::string raw =
        hub.judge_text(prompt, templates::event_extraction.version, attempt, context);
    try {
      json parsed = parse_json_block(raw);
      if (!parsed.is_array()) throw ParseError("expected a JSON array of events");
      std::vector<EventSpec> events;
      for (const auto& item : parsed) events.push_back(event_from_json(item));
      return events;
    } catch (const ParseError&) {
      if (attempt == retries) throw;
    }
  }
  return {};
}

SimilarityMatrix build_similarity_matrix(const std::vector<EventSpec>& generated,
                                         const std::vector<EventSpec>& ground_truth,
                                         ProviderHub& hub, const std::string& context) {
  SimilarityMatrix m;
  m.rows = int(generated.size());
  m.cols = int(ground_truth.size());
  m.values.assign(std::size_t(m.rows) * m.cols, 0.0);
  if (m.rows == 0 || m.cols == 0) return m;

  std::vector<std::vector<double>> gen_vecs, gt_vecs;
  gen_vecs.reserve(generated.size());
  gt_vecs.reserve(ground_truth.size());
  for (const auto& e : generated) gen_vecs.push_back(hub.embed_text(e.event, context));
  for (const auto& e : ground_truth) gt_vecs.push_back(hub.embed_text(e.event, context));
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) {
      m.at(i, j) = clamp01(cosine(gen_vecs[std::size_t(i)], gt_vecs[std::size_t(j)]));
    }
  }
  return m;
}

std::map<std::string, double> field_similarity(const EventSpec& gen, const EventSpec& gt,
                                               ProviderHub& hub, const std::string& context) {
  auto one = [&](const std::string& a, const std::string& b) {
    if (a.empty() && b.empty()) return 1.0;
    if (a.empty() || b.empty()) return 0.0;
    return clamped_text_cosine(a, b, hub, context);
  };
  return {{"subject", one(gen.subject, gt.subject)},
          {"setting", one(gen.setting, gt.setting)},
          {"action", one(gen.action, gt.action)},
          {"camera", one(gen.camera_motion, gt.camera_motion)}};
}

EventMatching build_event_matching(const std::vector<EventSpec>& generated,
                                   const std::vector<EventSpec>& ground_truth, ProviderHub& hub,
                                   const std::string& context) {
  SimilarityMatrix matrix = build_similarity_matrix(generated, ground_truth, hub, context);
  EventMatching matching;
  auto pairs = match_events(matrix);
  std::vector<long> gt_order;
  for (const auto& [g, t] : pairs) {
    MatchedPair p;
    p.gen_index = g;
    p.gt_index = t;
    p.semantic_sim = matrix.at(g, t);
    p.field_sims =
        field_similarity(generated[std::size_t(g)], ground_truth[std::size_t(t)], hub, context);
    matching.pairs.push_back(std::move(p));
    gt_order.push_back(t);
  }
  long n = long(matching.pairs.size());
  matching.inversions = count_inversions(gt_order);
  matching.max_inversions = n * (n - 1) / 2;
  return matching;
}

MetricScore event_alignment_score(const EventMatching& matching) {
  long n = long(matching.pairs.size());
  if (n == 0) {
    MetricScore s = MetricScore::ok(metric::event_alignment, 0.0, 0.0);
    s.diagnostics["note"] = "no events matched";
    return s;
  }
  double sum = 0.0;
  for (const auto& p : matching.pairs) {
    double field_total = 0.0;
    for (const auto& [name, sim] : p.field_sims) field_total += sim;
    sum += p.semantic_sim * (field_total / 4.0);
  }
  double mean_score = sum / double(n);
  double penalty = 1.0;
  if (n > 1 && matching.max_inversions > 0)
    penalty = 1.0 - double(matching.inversions) / double(matching.max_inversions);
  double value = clamp01(penalty * mean_score);
  MetricScore s = MetricScore::ok(metric::event_alignment, value, value);
  s.diagnostics["matched_pairs"] = std::to_string(n);
  s.diagnostics["inversions"] = std::to_string(matching.inversions);
  return s;
}

json matching_to_json(const EventMatching& matching, const MetricScore& score) {
  json pairs = json::array();
  for (const auto& p : matching.pairs) {
    pairs.push_back(json{{"gen_index", p.gen_index},
                         {"gt_index", p.gt_index},
                         {"semantic_sim", p.semantic_sim},
                         {"field_sims", p.field_sims}});
  }
  return json{{"pairs", pairs},
              {"inversions", matching.inversions},
              {"max_inversions", matching.max_inversions},
              {"score", score.status == MetricStatus::ok ? json(score.normalized) : json()}};
}

AlignmentResult evaluate_alignment(const PromptRecord& record, const VideoAsset& video,
                                   ProviderHub& hub, const std::filesystem::path& artifacts_dir) {
  AlignmentResult result;
  result.description = describe_video(video, hub);
  result.overall = overall_alignment(result.description, record.prompt_base, hub, video.sample_id);
  result.generated_events = extract_events(result.description, hub, video.sample_id);
  result.matching =
      build_event_matching(result.generated_events, record.ground_truth_events, hub,
                           video.sample_id);
  result.event_level = event_alignment_score(result.matching);

  if (!artifacts_dir.empty()) {
    std::filesystem::create_directories(artifacts_dir);
    std::ofstream(artifacts_dir / "description.txt") << result.description << "\n";
    json events = json::array();
    for (const auto& e : result.generated_events) events.push_back(to_json(e));
    std::ofstream(artifacts_dir / "events_generated.json") << events.dump(2) << "\n";
    std::ofstream(artifacts_dir / "matching.json")
        << matching_to_json(result.matching, result.event_level).dump(2) << "\n";
  }
  return result;
}

}  // namespace lveval
