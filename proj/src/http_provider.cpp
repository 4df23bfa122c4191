#include <cstdlib>

#include "lveval/providers.hpp"

#include <httplib.h>

namespace lveval {

namespace {

// JSON-over-HTTP backend: POST {kind, params, request} to the configured
// endpoint, response body is the role-schema JSON. Credentials are read from
// the environment variable named in the provider config and sent as a bearer
// token.
class HttpBackend : public ProviderBackend {
 public:
  json call(const ProviderSpec& spec, const json& request) override {
    if (spec.endpoint.empty())
      throw ProviderError(std::string(kind_name(spec.kind)) + ": http backend needs an endpoint");

    auto scheme_end = spec.endpoint.find("://");
    std::size_t host_begin = scheme_end == std::string::npos ? 0 : scheme_end + 3;
    auto path_begin = spec.endpoint.find('/', host_begin);
    std::string base = path_begin == std::string::npos ? spec.endpoint
                                                       : spec.endpoint.substr(0, path_begin);
    std::string path = path_begin == std::string::npos ? "/" : spec.endpoint.substr(path_begin);

    httplib::Client client(base);
    client.set_connection_timeout(int(spec.params.value("connect_timeout_s", 5)));
    client.set_read_timeout(int(spec.params.value("timeout_s", 120)));
    httplib::Headers headers;
    if (!spec.api_key_env.empty()) {
      if (const char* key = std::getenv(spec.api_key_env.c_str()))
        headers.emplace("Authorization", std::string("Bearer ") + key);
    }

    json body{{"kind", kind_name(spec.kind)}, {"params", spec.params}, {"request", request}};
    auto result = client.Post(path, headers, body.dump(), "application/json");
    if (!result)
      throw TransientError(std::string(kind_name(spec.kind)) + ": connection failed to " +
                           spec.endpoint);
    if (result->status >= 500)
      throw TransientError(std::string(kind_name(spec.kind)) + ": server error " +
                           std::to_string(result->status));
    if (result->status != 200)
      throw ProviderError(std::string(kind_name(spec.kind)) + ": http status " +
                          std::to_string(result->status));
    json parsed = json::parse(result->body, nullptr, false);
    if (parsed.is_discarded())
      throw ProviderError(std::string(kind_name(spec.kind)) + ": response is not JSON");
    return parsed;
  }
};

}  // namespace

std::unique_ptr<ProviderBackend> make_http_backend() { return std::make_unique<HttpBackend>(); }

}  // namespace lveval
