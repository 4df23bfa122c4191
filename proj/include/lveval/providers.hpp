#pragma once

#include <atomic>
#include <condition_variable>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "lveval/config.hpp"
#include "lveval/frame_ops.hpp"
#include "lveval/json_util.hpp"
#include "lveval/video.hpp"

namespace lveval {

enum class ProviderKind {
  text_embedder,
  frame_embedder,
  describer,
  question_answerer,
  scene_detector,
  flow_estimator,
  frame_interpolator,
  segmenter,
  grounder,
  aesthetic_scorer,
  technical_scorer,
  llm_judge,
};

const char* kind_name(ProviderKind kind);
const std::vector<ProviderKind>& all_provider_kinds();

struct ProviderSpec {
  ProviderKind kind = ProviderKind::llm_judge;
  std::string backend = "mock";  // "mock" or "http"
  std::string endpoint;
  std::string api_key_env;  // credentials come from the environment, never config files
  json params = json::object();
  bool cache = true;
  int retries = 2;
  int max_concurrent = 4;
  int min_interval_ms = 0;
};

// Unrecoverable provider failure (schema violations after retries, 4xx, ...).
struct ProviderError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// Retryable failure (timeouts, connection loss, 5xx).
struct TransientError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class ProviderBackend {
 public:
  virtual ~ProviderBackend() = default;
  virtual json call(const ProviderSpec& spec, const json& request) = 0;
};

std::unique_ptr<ProviderBackend> make_mock_backend();
std::unique_ptr<ProviderBackend> make_http_backend();

// Digest identifying one logical request (inputs + params + template
// version); identical logical requests map to identical keys.
std::string cache_key(const ProviderSpec& spec, const json& request);

// Throws ProviderError when a response does not match its role schema.
void validate_response(ProviderKind kind, const json& response);

struct SegmentResult {
  bool found = false;
  Frame mask;
  double coverage = 0.0;
};

struct GroundResult {
  bool ok = false;
  long start_frame = 0;
  long end_frame = 0;
};

// Uniform front door for every external model. Thread-safe; enforces a global
// request-parallelism bound plus per-provider concurrency and pacing, caches
// responses on disk (atomic write-then-rename), and retries failures.
class ProviderHub {
 public:
  explicit ProviderHub(const Config& config);
  ~ProviderHub();

  const ProviderSpec& spec(ProviderKind kind) const;

  // Raw entry point: cached, validated, retried. `context` (usually the
  // sample id) is attached to error messages.
  json invoke(ProviderKind kind, const json& request, const std::string& context = "");

  // Typed helpers over invoke(). Embeddings are unit-normalized here, at the
  // hub boundary.
  std::vector<double> embed_text(const std::string& text, const std::string& context = "");
  std::vector<double> embed_frame(const Frame& frame, long frame_index,
                                  const std::string& context = "");
  std::string describe(const std::string& video_path, const std::string& prompt,
                       const std::string& template_version, int trial = 0,
                       const std::string& context = "");
  std::string answer(const std::string& video_path, const std::string& question,
                     const std::string& prompt, const std::string& template_version,
                     const std::string& mode, const std::string& context = "");
  std::vector<long> scene_transitions(const std::string& video_path,
                                      const std::string& context = "");
  FlowField flow(const std::string& video_path, long target_index, long source_index,
                 const std::string& context = "");
  Frame interpolate(const std::string& video_path, long left_index, long right_index,
                    const std::string& context = "");
  SegmentResult segment(const std::string& video_path, long frame_index,
                        const std::string& subject, const std::string& context = "");
  GroundResult ground(const std::string& video_path, const std::string& event_text,
                      long event_index, long event_total, long frame_count, double fps,
                      const std::string& context = "");
  double aesthetic_score(const std::string& video_path, long frame_index,
                         const std::string& context = "");
  // Mapped into [0,1] using the provider's declared output range.
  double technical_score(const std::string& video_path, long start_frame, long end_frame,
                         const std::string& context = "");
  std::string judge_text(const std::string& prompt, const std::string& template_version,
                         int trial = 0, const std::string& context = "");

  long cache_hits() const { return cache_hits_.load(); }
  long backend_calls() const { return backend_calls_.load(); }

  struct Gate;

 private:
  json cached_or_call(const ProviderSpec& spec, const json& request, const std::string& context);

  std::map<ProviderKind, ProviderSpec> specs_;
  std::map<std::string, std::unique_ptr<ProviderBackend>> backends_;  // by backend name
  std::filesystem::path cache_dir_;
  bool cache_enabled_ = true;
  std::unique_ptr<Gate> global_gate_;
  std::map<ProviderKind, std::unique_ptr<Gate>> provider_gates_;
  std::atomic<long> cache_hits_{0};
  std::atomic<long> backend_calls_{0};
};

}  // namespace lveval
