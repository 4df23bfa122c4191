#include <doctest.h>

#include <atomic>
#include <cstdlib>
#include <thread>

#include <httplib.h>

#include "lveval/providers.hpp"
#include "support/fixtures.hpp"

using namespace lveval;
using lveval::testing::TempDir;

namespace {

// In-process provider service for wire-protocol checks.
struct TestServer {
  httplib::Server server;
  std::thread thread;
  int port = 0;
  std::atomic<int> hits{0};
  json last_body;
  std::string last_auth;
  std::atomic<int> fail_first{0};  // respond 500 to this many requests

  TestServer() {
    server.Post("/provider", [this](const httplib::Request& req, httplib::Response& res) {
      hits.fetch_add(1);
      last_body = json::parse(req.body, nullptr, false);
      last_auth = req.get_header_value("Authorization");
      if (fail_first.fetch_sub(1) > 0) {
        res.status = 500;
        return;
      }
      json request = last_body.value("request", json::object());
      json reply{{"vector", {1.0, 2.0, request.value("text", "").size() * 1.0}}};
      res.set_content(reply.dump(), "application/json");
    });
    port = server.bind_to_any_port("127.0.0.1");
    thread = std::thread([this] { server.listen_after_bind(); });
    server.wait_until_ready();
  }

  ~TestServer() {
    server.stop();
    thread.join();
  }
};

}  // namespace

TEST_CASE("http backend: envelope, bearer auth, retry on 5xx" * doctest::timeout(30)) {
  TestServer server;
  TempDir dir("http");
  Config config = lveval::testing::mock_config(dir.path());
  config.set("providers.text_embedder.backend=http");
  config.set("providers.text_embedder.endpoint=http://127.0.0.1:" + std::to_string(server.port) +
             "/provider");
  config.set("providers.text_embedder.api_key_env=LVEVAL_TEST_KEY");
  config.set("providers.text_embedder.retries=2");
  setenv("LVEVAL_TEST_KEY", "sekrit", 1);

  SUBCASE("request envelope and auth header reach the service") {
    ProviderHub hub(config);
    std::vector<double> v = hub.embed_text("abcd");
    CHECK(v.size() == 3);
    CHECK(norm(v) == doctest::Approx(1.0));
    CHECK(server.last_body["kind"] == "text_embedder");
    CHECK(server.last_body["request"]["text"] == "abcd");
    CHECK(server.last_auth == "Bearer sekrit");
  }

  SUBCASE("a transient 500 is retried until the service recovers") {
    server.fail_first = 1;
    ProviderHub hub(config);
    CHECK(hub.embed_text("retry me").size() == 3);
    CHECK(server.hits.load() == 2);
  }

  SUBCASE("responses are cached so the service is hit once") {
    ProviderHub hub(config);
    auto first = hub.embed_text("cached text");
    auto second = hub.embed_text("cached text");
    CHECK(first == second);
    CHECK(server.hits.load() == 1);
  }
  unsetenv("LVEVAL_TEST_KEY");
}
