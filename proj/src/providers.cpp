#include "lveval/providers.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <thread>

#include "lveval/digest.hpp"

namespace lveval {

const char* kind_name(ProviderKind kind) {
  switch (kind) {
    case ProviderKind::text_embedder: return "text_embedder";
    case ProviderKind::frame_embedder: return "frame_embedder";
    case ProviderKind::describer: return "describer";
    case ProviderKind::question_answerer: return "question_answerer";
    case ProviderKind::scene_detector: return "scene_detector";
    case ProviderKind::flow_estimator: return "flow_estimator";
    case ProviderKind::frame_interpolator: return "frame_interpolator";
    case ProviderKind::segmenter: return "segmenter";
    case ProviderKind::grounder: return "grounder";
    case ProviderKind::aesthetic_scorer: return "aesthetic_scorer";
    case ProviderKind::technical_scorer: return "technical_scorer";
    case ProviderKind::llm_judge: return "llm_judge";
  }
  return "unknown";
}

const std::vector<ProviderKind>& all_provider_kinds() {
  static const std::vector<ProviderKind> kinds = {
      ProviderKind::text_embedder,   ProviderKind::frame_embedder,
      ProviderKind::describer,       ProviderKind::question_answerer,
      ProviderKind::scene_detector,  ProviderKind::flow_estimator,
      ProviderKind::frame_interpolator, ProviderKind::segmenter,
      ProviderKind::grounder,        ProviderKind::aesthetic_scorer,
      ProviderKind::technical_scorer, ProviderKind::llm_judge,
  };
  return kinds;
}

std::string cache_key(const ProviderSpec& spec, const json& request) {
  std::string canonical = std::string(kind_name(spec.kind)) + "\n" + spec.params.dump() + "\n" +
                          request.dump();
  return sha256_hex(canonical);
}

void validate_response(ProviderKind kind, const json& response) {
  auto fail = [&](const char* what) {
    throw ProviderError(std::string(kind_name(kind)) + ": invalid response, " + what);
  };
  if (!response.is_object()) fail("not an object");
  switch (kind) {
    case ProviderKind::text_embedder:
    case ProviderKind::frame_embedder:
      if (!response.contains("vector") || !response["vector"].is_array() ||
          response["vector"].empty())
        fail("missing nonempty 'vector'");
      break;
    case ProviderKind::describer:
    case ProviderKind::llm_judge:
      if (!response.contains("text") || !response["text"].is_string() ||
          response["text"].get<std::string>().empty())
        fail("missing nonempty 'text'");
      break;
    case ProviderKind::question_answerer:
      if (!response.contains("answer") || !response["answer"].is_string())
        fail("missing 'answer'");
      break;
    case ProviderKind::scene_detector:
      if (!response.contains("transitions") || !response["transitions"].is_array())
        fail("missing 'transitions'");
      break;
    case ProviderKind::flow_estimator:
      if (!response.contains("width") || !response.contains("height") ||
          !response.contains("flow") || !response["flow"].is_array())
        fail("missing flow field");
      break;
    case ProviderKind::frame_interpolator:
      if (!response.contains("width") || !response.contains("height") ||
          !response.contains("pixels") || !response["pixels"].is_array())
        fail("missing pixels");
      break;
    case ProviderKind::segmenter:
      if (!response.contains("found")) fail("missing 'found'");
      if (response.value("found", false) &&
          (!response.contains("mask") || !response["mask"].is_array()))
        fail("found without mask");
      break;
    case ProviderKind::grounder:
      if (!response.contains("ok")) fail("missing 'ok'");
      break;
    case ProviderKind::aesthetic_scorer:
    case ProviderKind::technical_scorer:
      if (!response.contains("score") || !response["score"].is_number())
        fail("missing numeric 'score'");
      break;
  }
}

// Counting semaphore with optional pacing between acquisitions.
struct ProviderHub::Gate {
  explicit Gate(int slots, int min_interval_ms = 0)
      : slots_(slots), min_interval_ms_(min_interval_ms) {}

  void acquire() {
    std::unique_lock lock(mu_);
    cv_.wait(lock, [&] { return slots_ > 0; });
    --slots_;
    if (min_interval_ms_ > 0) {
      auto now = std::chrono::steady_clock::now();
      auto next_allowed = last_call_ + std::chrono::milliseconds(min_interval_ms_);
      if (now < next_allowed) {
        lock.unlock();
        std::this_thread::sleep_until(next_allowed);
        lock.lock();
      }
      last_call_ = std::chrono::steady_clock::now();
    }
  }

  void release() {
    std::lock_guard lock(mu_);
    ++slots_;
    cv_.notify_one();
  }

  std::mutex mu_;
  std::condition_variable cv_;
  int slots_;
  int min_interval_ms_;
  std::chrono::steady_clock::time_point last_call_{};
};

namespace {

struct GateGuard {
  ProviderHub::Gate* gate;
  explicit GateGuard(ProviderHub::Gate* g) : gate(g) {
    if (gate) gate->acquire();
  }
  ~GateGuard() {
    if (gate) gate->release();
  }
};

}  // namespace

ProviderHub::ProviderHub(const Config& config) {
  for (ProviderKind kind : all_provider_kinds()) {
    std::string base = std::string("providers.") + kind_name(kind);
    ProviderSpec spec;
    spec.kind = kind;
    spec.backend = config.text(base + ".backend", "mock");
    spec.endpoint = config.text(base + ".endpoint", "");
    spec.api_key_env = config.text(base + ".api_key_env", "");
    json params = config.at(base + ".params");
    if (params.is_object()) spec.params = params;
    spec.cache = config.boolean(base + ".cache", true);
    spec.retries = config.integer(base + ".retries", 2);
    spec.max_concurrent = config.integer(base + ".max_concurrent", 4);
    spec.min_interval_ms = config.integer(base + ".min_interval_ms", 0);
    provider_gates_[kind] =
        std::make_unique<Gate>(std::max(1, spec.max_concurrent), spec.min_interval_ms);
    specs_[kind] = std::move(spec);
  }
  backends_["mock"] = make_mock_backend();
  backends_["http"] = make_http_backend();
  cache_enabled_ = config.boolean("cache.enabled", true);
  std::string dir = config.text("cache.dir", "");
  if (dir.empty()) {
    cache_enabled_ = cache_enabled_ && false;  // no directory, no cache
  } else {
    cache_dir_ = dir;
  }
  global_gate_ = std::make_unique<Gate>(std::max(1, config.integer("run.max_parallel_requests", 8)));
}

ProviderHub::~ProviderHub() = default;

const ProviderSpec& ProviderHub::spec(ProviderKind kind) const { return specs_.at(kind); }

json ProviderHub::cached_or_call(const ProviderSpec& spec, const json& request,
                                 const std::string& context) {
  std::string key;
  std::filesystem::path entry;
  bool use_cache = cache_enabled_ && spec.cache;
  if (use_cache) {
    key = cache_key(spec, request);
    entry = cache_dir_ / kind_name(spec.kind) / (key + ".json");
    std::ifstream in(entry);
    if (in) {
      json stored = json::parse(in, nullptr, false);
      if (!stored.is_discarded() && stored.contains("response")) {
        cache_hits_.fetch_add(1);
        return stored["response"];
      }
    }
  }

  auto backend_it = backends_.find(spec.backend);
  if (backend_it == backends_.end())
    throw ProviderError(std::string(kind_name(spec.kind)) + ": unknown backend '" + spec.backend +
                        "'" + (context.empty() ? "" : " [" + context + "]"));

  json response;
  std::string last_error;
  int attempts = spec.retries + 1;
  for (int attempt = 0; attempt < attempts; ++attempt) {
    try {
      GateGuard global(global_gate_.get());
      GateGuard local(provider_gates_.at(spec.kind).get());
      backend_calls_.fetch_add(1);
      response = backend_it->second->call(spec, request);
      validate_response(spec.kind, response);
      last_error.clear();
      break;
    } catch (const TransientError& e) {
      last_error = e.what();
    } catch (const ProviderError& e) {
      last_error = e.what();
    }
  }
  if (!last_error.empty()) {
    throw ProviderError(std::string(kind_name(spec.kind)) + ": failed after " +
                        std::to_string(attempts) + " attempts: " + last_error +
                        (context.empty() ? "" : " [" + context + "]"));
  }

  if (use_cache) {
    std::error_code ec;
    std::filesystem::create_directories(entry.parent_path(), ec);
    json stored{{"request_digest", key},
                {"response", response},
                {"provider_version", spec.params.value("version", "mock")},
                {"timestamp", std::chrono::duration_cast<std::chrono::seconds>(
                                  std::chrono::system_clock::now().time_since_epoch())
                                  .count()}};
    std::filesystem::path tmp = entry;
    tmp += ".tmp." + std::to_string(std::uintptr_t(&stored));
    {
      std::ofstream out(tmp);
      out << stored.dump();
    }
    std::filesystem::rename(tmp, entry, ec);
    if (ec) std::filesystem::remove(tmp, ec);
  }
  return response;
}

json ProviderHub::invoke(ProviderKind kind, const json& request, const std::string& context) {
  return cached_or_call(specs_.at(kind), request, context);
}

std::vector<double> ProviderHub::embed_text(const std::string& text, const std::string& context) {
  json resp = invoke(ProviderKind::text_embedder, json{{"text", text}}, context);
  std::vector<double> v = resp["vector"].get<std::vector<double>>();
  unit_normalize(v);
  return v;
}

std::vector<double> ProviderHub::embed_frame(const Frame& frame, long frame_index,
                                             const std::string& context) {
  json req{{"width", frame.width},
           {"height", frame.height},
           {"frame_index", frame_index},
           {"pixels", frame.pixels}};
  json resp = invoke(ProviderKind::frame_embedder, req, context);
  std::vector<double> v = resp["vector"].get<std::vector<double>>();
  unit_normalize(v);
  return v;
}

std::string ProviderHub::describe(const std::string& video_path, const std::string& prompt,
                                  const std::string& template_version, int trial,
                                  const std::string& context) {
  json req{{"video_path", video_path},
           {"prompt", prompt},
           {"template_version", template_version},
           {"trial", trial}};
  return invoke(ProviderKind::describer, req, context)["text"].get<std::string>();
}

std::string ProviderHub::answer(const std::string& video_path, const std::string& question,
                                const std::string& prompt, const std::string& template_version,
                                const std::string& mode, const std::string& context) {
  json req{{"video_path", video_path},
           {"question", question},
           {"prompt", prompt},
           {"template_version", template_version},
           {"mode", mode}};
  return invoke(ProviderKind::question_answerer, req, context)["answer"].get<std::string>();
}

std::vector<long> ProviderHub::scene_transitions(const std::string& video_path,
                                                 const std::string& context) {
  json resp = invoke(ProviderKind::scene_detector, json{{"video_path", video_path}}, context);
  return resp["transitions"].get<std::vector<long>>();
}

FlowField ProviderHub::flow(const std::string& video_path, long target_index, long source_index,
                            const std::string& context) {
  json req{{"video_path", video_path},
           {"target_index", target_index},
           {"source_index", source_index}};
  json resp = invoke(ProviderKind::flow_estimator, req, context);
  FlowField field;
  field.width = resp["width"].get<int>();
  field.height = resp["height"].get<int>();
  std::vector<float> flat = resp["flow"].get<std::vector<float>>();
  if (flat.size() != std::size_t(field.width) * field.height * 2)
    throw ProviderError("flow_estimator: flow array size mismatch" +
                        (context.empty() ? std::string() : " [" + context + "]"));
  field.dx.resize(flat.size() / 2);
  field.dy.resize(flat.size() / 2);
  for (std::size_t i = 0; i < field.dx.size(); ++i) {
    field.dx[i] = flat[2 * i];
    field.dy[i] = flat[2 * i + 1];
  }
  return field;
}

Frame ProviderHub::interpolate(const std::string& video_path, long left_index, long right_index,
                               const std::string& context) {
  json req{{"video_path", video_path}, {"left_index", left_index}, {"right_index", right_index}};
  json resp = invoke(ProviderKind::frame_interpolator, req, context);
  Frame f(resp["width"].get<int>(), resp["height"].get<int>());
  std::vector<int> px = resp["pixels"].get<std::vector<int>>();
  if (px.size() != f.pixels.size())
    throw ProviderError("frame_interpolator: pixel array size mismatch");
  for (std::size_t i = 0; i < px.size(); ++i)
    f.pixels[i] = std::uint8_t(std::clamp(px[i], 0, 255));
  return f;
}

SegmentResult ProviderHub::segment(const std::string& video_path, long frame_index,
                                   const std::string& subject, const std::string& context) {
  json req{{"video_path", video_path}, {"frame_index", frame_index}, {"subject", subject}};
  json resp = invoke(ProviderKind::segmenter, req, context);
  SegmentResult result;
  result.found = resp.value("found", false);
  if (!result.found) return result;
  result.mask = Frame(resp["width"].get<int>(), resp["height"].get<int>());
  std::vector<int> px = resp["mask"].get<std::vector<int>>();
  if (px.size() != result.mask.pixels.size())
    throw ProviderError("segmenter: mask array size mismatch");
  for (std::size_t i = 0; i < px.size(); ++i) result.mask.pixels[i] = px[i] ? 255 : 0;
  result.coverage = resp.value("coverage", mask_coverage(result.mask));
  return result;
}

GroundResult ProviderHub::ground(const std::string& video_path, const std::string& event_text,
                                 long event_index, long event_total, long frame_count, double fps,
                                 const std::string& context) {
  json req{{"video_path", video_path},
           {"event", event_text},
           {"event_index", event_index},
           {"event_total", event_total},
           {"frame_count", frame_count},
           {"fps", fps}};
  json resp = invoke(ProviderKind::grounder, req, context);
  GroundResult g;
  g.ok = resp.value("ok", false);
  if (g.ok) {
    g.start_frame = resp.value("start_frame", 0L);
    g.end_frame = resp.value("end_frame", 0L);
  }
  return g;
}

double ProviderHub::aesthetic_score(const std::string& video_path, long frame_index,
                                    const std::string& context) {
  json req{{"video_path", video_path}, {"frame_index", frame_index}};
  return invoke(ProviderKind::aesthetic_scorer, req, context)["score"].get<double>();
}

double ProviderHub::technical_score(const std::string& video_path, long start_frame,
                                    long end_frame, const std::string& context) {
  json req{{"video_path", video_path}, {"start_frame", start_frame}, {"end_frame", end_frame}};
  double raw = invoke(ProviderKind::technical_scorer, req, context)["score"].get<double>();
  const auto& params = specs_.at(ProviderKind::technical_scorer).params;
  double lo = params.value("range_lo", 0.0);
  double hi = params.value("range_hi", 1.0);
  if (hi <= lo) throw ProviderError("technical_scorer: declared range is empty");
  return clamp01((raw - lo) / (hi - lo));
}

std::string ProviderHub::judge_text(const std::string& prompt, const std::string& template_version,
                                    int trial, const std::string& context) {
  json req{{"prompt", prompt}, {"template_version", template_version}, {"trial", trial}};
  return invoke(ProviderKind::llm_judge, req, context)["text"].get<std::string>();
}

}  // namespace lveval
