#include <algorithm>
#include <cmath>
#include <sstream>

#include "lveval/digest.hpp"
#include "lveval/providers.hpp"

namespace lveval {

namespace {

// Fully deterministic stand-ins for the model providers. Behavior is derived
// from request content (so identical runs replay identically) and can be
// pinned per test through spec.params tables:
//   vectors / table            preset embeddings
//   responses_by_contains      [{contains, response}] for text roles
//   answers / default_answer   question-answerer tables
//   regions                    segmenter rectangles per subject
//   mode / spans               grounder behavior
//   score / clarity_scores ... fixed scorer outputs
class MockBackend : public ProviderBackend {
 public:
  json call(const ProviderSpec& spec, const json& request) override {
    switch (spec.kind) {
      case ProviderKind::text_embedder: return embed_text(spec, request);
      case ProviderKind::frame_embedder: return embed_frame(spec, request);
      case ProviderKind::describer: return describe(spec, request);
      case ProviderKind::question_answerer: return answer(spec, request);
      case ProviderKind::scene_detector: return detect_scenes(spec, request);
      case ProviderKind::flow_estimator: return estimate_flow(spec, request);
      case ProviderKind::frame_interpolator: return interpolate(spec, request);
      case ProviderKind::segmenter: return segment(spec, request);
      case ProviderKind::grounder: return ground(spec, request);
      case ProviderKind::aesthetic_scorer: return aesthetic(spec, request);
      case ProviderKind::technical_scorer: return technical(spec, request);
      case ProviderKind::llm_judge: return judge(spec, request);
    }
    throw ProviderError("mock: unhandled provider kind");
  }

 private:
  static std::uint64_t seed_of(const json& request, const char* salt) {
    return digest_seed(std::string(salt) + request.dump());
  }

  static json match_contains(const json& params, const std::string& haystack) {
    if (auto it = params.find("responses_by_contains"); it != params.end() && it->is_array()) {
      for (const auto& rule : *it) {
        if (haystack.find(rule.value("contains", "")) != std::string::npos)
          return rule.value("response", json());
      }
    }
    return json();
  }

  json embed_text(const ProviderSpec& spec, const json& request) {
    std::string text = request.value("text", "");
    if (auto it = spec.params.find("vectors"); it != spec.params.end() && it->contains(text))
      return json{{"vector", (*it)[text]}};
    int dim = spec.params.value("dim", 64);
    std::vector<double> v(std::size_t(dim), 0.0);
    std::string token;
    auto flush = [&] {
      if (!token.empty()) {
        v[std::size_t(digest_seed(token) % std::uint64_t(dim))] += 1.0;
        token.clear();
      }
    };
    for (char c : text) {
      if (std::isalnum(static_cast<unsigned char>(c))) {
        token += char(std::tolower(static_cast<unsigned char>(c)));
      } else {
        flush();
      }
    }
    flush();
    if (norm(v) < 1e-12) v[0] = 1.0;  // degenerate text still embeds
    return json{{"vector", v}};
  }

  json embed_frame(const ProviderSpec& spec, const json& request) {
    if (spec.params.value("mode", "pixels") == "table") {
      const auto& table = spec.params.at("table");
      std::size_t idx = std::size_t(request.value("frame_index", 0L)) % table.size();
      return json{{"vector", table[idx]}};
    }
    Frame f(request.value("width", 0), request.value("height", 0));
    std::vector<int> px = request.value("pixels", std::vector<int>{});
    if (px.size() != f.pixels.size() || f.pixels.empty())
      throw ProviderError("mock frame_embedder: bad pixel payload");
    for (std::size_t i = 0; i < px.size(); ++i) f.pixels[i] = std::uint8_t(px[i]);
    std::vector<double> v = downsample(f, 8, 8);
    v.push_back(128.0);  // constant bias keeps the embedding nonzero
    return json{{"vector", v}};
  }

  json describe(const ProviderSpec& spec, const json& request) {
    std::string prompt = request.value("prompt", "");
    std::string path = request.value("video_path", "");
    int trial = request.value("trial", 0);
    json preset = match_contains(spec.params, prompt + "\n" + path);
    if (preset.is_string()) return json{{"text", preset}};

    if (prompt.find("Theme Clarity") != std::string::npos) {
      // structured clarity judgment
      json scores = spec.params.value("clarity_scores", json());
      json out = json::object();
      const char* names[4] = {"Theme Clarity", "Logical Structure", "Information Completeness",
                              "Information Consistency"};
      for (int d = 0; d < 4; ++d) {
        int score;
        if (scores.is_array() && scores.size() == 4 && scores[0].is_number()) {
          score = scores[std::size_t(d)].get<int>();
        } else if (scores.is_array() && !scores.empty() && scores[0].is_array()) {
          const auto& row = scores[std::size_t(trial) % scores.size()];
          score = row[std::size_t(d)].get<int>();
        } else {
          score = int(seed_of(request, names[d]) % 5);
        }
        out[names[d]] = json{{"score", score}, {"reason", "mock judgment"}};
      }
      return json{{"text", "```json\n" + out.dump(2) + "\n```"}};
    }

    std::string stem = std::filesystem::path(path).stem().string();
    std::ostringstream text;
    text << "The video " << stem
         << " opens on a first scene where the main subject moves steadily through the frame"
         << " while the camera holds a wide view. It then shifts into a second setting with"
         << " changed lighting and continues the motion at a calmer pace. The piece closes on"
         << " a final scene that echoes the opening composition, keeping the overall tone of "
         << stem << " consistent from start to finish.";
    return json{{"text", text.str()}};
  }

  json answer(const ProviderSpec& spec, const json& request) {
    std::string question = request.value("question", "");
    std::string mode = request.value("mode", "yes_no");
    if (auto it = spec.params.find("answers"); it != spec.params.end() && it->contains(question))
      return json{{"answer", (*it)[question]}};
    if (auto it = spec.params.find("answers_contains"); it != spec.params.end() && it->is_array()) {
      for (const auto& rule : *it) {
        if (question.find(rule.value("contains", "")) != std::string::npos)
          return json{{"answer", rule.value("answer", "yes")}};
      }
    }
    if (spec.params.contains("default_answer"))
      return json{{"answer", spec.params["default_answer"]}};
    std::uint64_t seed = seed_of(request, "answer");
    if (mode == "yes_no_unclear") {
      const char* options[3] = {"yes", "no", "unclear"};
      return json{{"answer", options[seed % 3]}};
    }
    return json{{"answer", seed % 2 == 0 ? "Yes" : "No"}};
  }

  // Content-change detector: a cut is the first frame whose mean absolute
  // difference from its predecessor exceeds the threshold.
  json detect_scenes(const ProviderSpec& spec, const json& request) {
    VideoFile video(request.value("video_path", ""));
    double threshold = spec.params.value("threshold", 30.0);
    std::vector<long> cuts;
    Frame prev = video.frame(0);
    for (long t = 1; t < video.frame_count(); ++t) {
      Frame cur = video.frame(t);
      if (mean_abs_diff(prev, cur) > threshold) cuts.push_back(t);
      prev = std::move(cur);
    }
    return json{{"transitions", cuts}};
  }

  // Coarse block-matching flow: target(p) ~ source(p + u(p)).
  json estimate_flow(const ProviderSpec& spec, const json& request) {
    VideoFile video(request.value("video_path", ""));
    Frame target = video.frame(request.value("target_index", 0L));
    if (spec.params.value("mode", "block_match") == "zero") {
      std::vector<float> zero(std::size_t(target.width) * target.height * 2, 0.0f);
      return json{{"width", target.width}, {"height", target.height}, {"flow", zero}};
    }
    Frame source = video.frame(request.value("source_index", 0L));
    int block = std::max(2, spec.params.value("block", 8));
    int radius = std::max(1, spec.params.value("radius", 12));

    std::vector<float> flat(std::size_t(target.width) * target.height * 2, 0.0f);
    auto sad = [&](int bx, int by, int bw, int bh, int dx, int dy) {
      long long total = 0;
      for (int y = 0; y < bh; ++y) {
        for (int x = 0; x < bw; ++x) {
          int sx = std::clamp(bx + x + dx, 0, source.width - 1);
          int sy = std::clamp(by + y + dy, 0, source.height - 1);
          total += std::abs(int(target.at(bx + x, by + y)) - int(source.at(sx, sy)));
        }
      }
      return total;
    };
    for (int by = 0; by < target.height; by += block) {
      for (int bx = 0; bx < target.width; bx += block) {
        int bw = std::min(block, target.width - bx);
        int bh = std::min(block, target.height - by);
        long long best = -1;
        int best_dx = 0, best_dy = 0;
        for (int dy = -radius; dy <= radius; ++dy) {
          for (int dx = -radius; dx <= radius; ++dx) {
            long long s = sad(bx, by, bw, bh, dx, dy);
            bool better = best < 0 || s < best;
            if (!better && s == best) {
              int cand = std::abs(dx) + std::abs(dy);
              int cur = std::abs(best_dx) + std::abs(best_dy);
              better = cand < cur || (cand == cur && std::tie(dy, dx) < std::tie(best_dy, best_dx));
            }
            if (better) {
              best = s;
              best_dx = dx;
              best_dy = dy;
            }
          }
        }
        for (int y = by; y < by + bh; ++y) {
          for (int x = bx; x < bx + bw; ++x) {
            std::size_t i = std::size_t(y) * target.width + x;
            flat[2 * i] = float(best_dx);
            flat[2 * i + 1] = float(best_dy);
          }
        }
      }
    }
    return json{{"width", target.width}, {"height", target.height}, {"flow", flat}};
  }

  json interpolate(const ProviderSpec& spec, const json& request) {
    VideoFile video(request.value("video_path", ""));
    Frame a = video.frame(request.value("left_index", 0L));
    if (spec.params.value("mode", "average") == "constant") {
      std::vector<int> px(a.pixels.size(), spec.params.value("value", 0));
      return json{{"width", a.width}, {"height", a.height}, {"pixels", px}};
    }
    Frame b = video.frame(request.value("right_index", 0L));
    std::vector<int> px(a.pixels.size());
    for (std::size_t i = 0; i < px.size(); ++i)
      px[i] = int(std::lround((double(a.pixels[i]) + double(b.pixels[i])) / 2.0));
    return json{{"width", a.width}, {"height", a.height}, {"pixels", px}};
  }

  json segment(const ProviderSpec& spec, const json& request) {
    VideoFile video(request.value("video_path", ""));
    std::string subject = request.value("subject", "");
    long frame_index = request.value("frame_index", 0L);
    int w = video.width(), h = video.height();

    json region;
    if (auto it = spec.params.find("regions"); it != spec.params.end() && it->contains(subject))
      region = (*it)[subject];
    if (region.is_boolean() && !region.get<bool>()) return json{{"found", false}};
    if (region.is_object() && region.contains("frames")) {
      long lo = region["frames"][0].get<long>();
      long hi = region["frames"][1].get<long>();
      if (frame_index < lo || frame_index >= hi) return json{{"found", false}};
    }

    int x, y, rw, rh;
    if (region.is_object()) {
      x = region.value("x", 0);
      y = region.value("y", 0);
      rw = region.value("w", w / 3);
      rh = region.value("h", h / 3);
    } else {
      std::uint64_t hsub = digest_seed(subject);
      x = int(hsub % std::uint64_t(std::max(1, w / 2)));
      y = int((hsub >> 8) % std::uint64_t(std::max(1, h / 2)));
      rw = std::max(2, w / 3);
      rh = std::max(2, h / 3);
    }
    Frame mask(w, h, 0);
    for (int yy = std::max(0, y); yy < std::min(h, y + rh); ++yy) {
      for (int xx = std::max(0, x); xx < std::min(w, x + rw); ++xx) mask.at(xx, yy) = 1;
    }
    std::vector<int> px(mask.pixels.begin(), mask.pixels.end());
    return json{{"found", true},
                {"width", w},
                {"height", h},
                {"mask", px},
                {"coverage", mask_coverage(mask) /*0/1-valued mask: same ratio*/}};
  }

  json ground(const ProviderSpec& spec, const json& request) {
    std::string mode = spec.params.value("mode", "uniform");
    if (mode == "fail") return json{{"ok", false}};
    long n_frames = request.value("frame_count", 0L);
    long index = request.value("event_index", 0L);
    if (mode == "table") {
      const auto& spans = spec.params.at("spans");
      std::string key = std::to_string(index);
      if (!spans.contains(key)) return json{{"ok", false}};
      return json{{"ok", true},
                  {"start_frame", spans[key][0].get<long>()},
                  {"end_frame", spans[key][1].get<long>()}};
    }
    long total = std::max<long>(1, spec.params.value("event_total", 1L));
    if (request.contains("event_total")) total = std::max<long>(1, request["event_total"].get<long>());
    long start = index * n_frames / total;
    long end = (index + 1) * n_frames / total;
    return json{{"ok", true}, {"start_frame", start}, {"end_frame", end}};
  }

  json aesthetic(const ProviderSpec& spec, const json& request) {
    if (spec.params.contains("score")) return json{{"score", spec.params["score"]}};
    VideoFile video(request.value("video_path", ""));
    Frame f = video.frame(request.value("frame_index", 0L));
    double luma = mean(downsample(f, 1, 1));
    return json{{"score", 1.0 + 9.0 * luma / 255.0}};
  }

  json technical(const ProviderSpec& spec, const json& request) {
    if (spec.params.contains("score")) return json{{"score", spec.params["score"]}};
    VideoFile video(request.value("video_path", ""));
    long start = request.value("start_frame", 0L);
    long end = std::max(start + 1, request.value("end_frame", 0L));
    double total = 0.0;
    long count = 0;
    for (long t = start; t < end && t < video.frame_count(); ++t) {
      total += mean(downsample(video.frame(t), 1, 1));
      ++count;
    }
    double lo = spec.params.value("range_lo", 0.0);
    double hi = spec.params.value("range_hi", 1.0);
    double value = count > 0 ? total / (255.0 * count) : 0.0;
    return json{{"score", lo + value * (hi - lo)}};
  }

  // Text judge: recognizes each instruction template by a distinctive marker
  // and produces schema-valid output for it.
  json judge(const ProviderSpec& spec, const json& request) {
    std::string prompt = request.value("prompt", "");
    int trial = request.value("trial", 0);
    json preset = match_contains(spec.params, prompt);
    if (preset.is_string()) return json{{"text", preset}};

    if (prompt.find("semantic_complexity") != std::string::npos) {
      auto scores = spec.params.value("complexity_scores", std::vector<int>{});
      int s, t, c;
      if (scores.size() == 3) {
        s = scores[0];
        t = scores[1];
        c = scores[2];
      } else {
        std::uint64_t seed = seed_of(request, "complexity");
        s = 1 + int(seed % 10);
        t = 1 + int((seed >> 8) % 10);
        c = 1 + int((seed >> 16) % 10);
      }
      json out{{"semantic_complexity", {{"score", s}, {"explanation", "mock"}}},
               {"structural_complexity", {{"score", t}, {"explanation", "mock"}}},
               {"control_complexity", {{"score", c}, {"explanation", "mock"}}}};
      return json{{"text", out.dump(2)}};
    }

    if (std::string marker = "Here is the video description:";
        prompt.find(marker) != std::string::npos) {
      std::string text = prompt.substr(prompt.find(marker) + marker.size());
      json events = json::array();
      int max_events = spec.params.value("max_events", 4);
      std::stringstream ss(text);
      std::string piece;
      while (std::getline(ss, piece, '.') && int(events.size()) < max_events) {
        std::string trimmed;
        for (char ch : piece) {
          if (!trimmed.empty() || !std::isspace(static_cast<unsigned char>(ch))) trimmed += ch;
        }
        if (trimmed.size() < 8) continue;
        events.push_back(json{{"event", trimmed},
                              {"subject", ""},
                              {"setting", ""},
                              {"action", trimmed},
                              {"camera motion", "static"}});
      }
      return json{{"text", "```json\n" + events.dump(2) + "\n```"}};
    }

    if (prompt.find("*human action*") != std::string::npos) {
      json actions = spec.params.value("actions", json::array());
      return json{{"text", actions.dump()}};
    }

    if (prompt.find("generate one closed-ended question") != std::string::npos) {
      std::string marker = "## Input ##";
      json input = parse_json_block(prompt.substr(prompt.find(marker) + marker.size()));
      json out = json::object();
      for (auto it = input.begin(); it != input.end(); ++it) {
        out[it.key()] =
            "Did the video match the described " + it.key() + " (aspect " +
            std::to_string(trial + 1) + ")?";
      }
      return json{{"text", out.dump(2)}};
    }

    if (prompt.find("classify each question") != std::string::npos) {
      std::string marker = "Question:";
      std::string question = prompt.substr(prompt.find(marker) + marker.size());
      for (const char* cue : {"lack", "fail", "not ", "without", "miss", "unclear"}) {
        if (question.find(cue) != std::string::npos) return json{{"text", "negative"}};
      }
      return json{{"text", "positive"}};
    }

    if (prompt.find("one self-contained generation prompt per event") != std::string::npos) {
      std::string marker = "## Extracted Events ##";
      json events = parse_json_block(prompt.substr(prompt.find(marker) + marker.size()));
      json out = json::array();
      for (std::size_t i = 0; i < events.size(); ++i) {
        std::string event_text = events[i].value("event", "");
        std::string subject = events[i].value("subject", "");
        std::string line = "Scene " + std::to_string(i + 1) + ": " + event_text;
        if (!subject.empty()) line += ", featuring " + subject;
        out.push_back(line + ".");
      }
      return json{{"text", out.dump(2)}};
    }

    if (prompt.find("extract some key information") != std::string::npos) {
      json out = json::object();
      for (const char* key : {"Emotional Response", "Narrative Flow", "Character Development",
                              "Visual Style", "Themes", "Interpretive Depth",
                              "Overall Impression"}) {
        out[key] = std::string("mock ") + key + " assessment";
      }
      return json{{"text", out.dump(2)}};
    }

    return json{{"text", "{}"}};
  }
};

}  // namespace

std::unique_ptr<ProviderBackend> make_mock_backend() { return std::make_unique<MockBackend>(); }

}  // namespace lveval
