#include <doctest.h>

#include "lveval/providers.hpp"
#include "support/fixtures.hpp"

using namespace lveval;

TEST_CASE("parse_json_block") {
  CHECK(parse_json_block("```json\n[{\"a\":1}]\n```").is_array());
  CHECK(parse_json_block("[]").is_array());
  json j = parse_json_block("Here is the result: {\"score\": 3}");
  CHECK(j["score"] == 3);
  CHECK(parse_json_block("prose { \"x\": [1,2,{\"y\":\"}\"}] } more").contains("x"));
  CHECK(parse_json_block("broken { then fine [1,2]").is_array());
  CHECK_THROWS_AS(parse_json_block("no json at all"), ParseError);
  CHECK_THROWS_AS(parse_json_block("{ unbalanced"), ParseError);
}

TEST_CASE("render_template substitutes known keys and keeps literal braces") {
  std::string out = render_template("a {x} b {\"k\": 1} {y}", {{"x", "X"}});
  CHECK(out == "a X b {\"k\": 1} {y}");
}

TEST_CASE("canonical_token") {
  CHECK(canonical_token("Yes.") == "yes");
  CHECK(canonical_token("  Positive\n") == "positive");
  CHECK(canonical_token("\"No\"") == "no");
  CHECK(canonical_token("42") == "");
}

TEST_CASE("text embedder: identical requests hit the cache byte-identically") {
  testing::TempDir dir("hub");
  Config config = testing::mock_config(dir.path());
  config.set("providers.text_embedder.cache=true");
  ProviderHub hub(config);
  auto v1 = hub.embed_text("abc");
  long calls_after_first = hub.backend_calls();
  auto v2 = hub.embed_text("abc");
  CHECK(v1 == v2);
  CHECK(hub.backend_calls() == calls_after_first);
  CHECK(hub.cache_hits() >= 1);
  CHECK(norm(v1) == doctest::Approx(1.0));  // unit-normalized at the hub
}

TEST_CASE("mock describer returns the pinned fixture paragraph") {
  testing::TempDir dir("hub");
  Config config = testing::mock_config(dir.path());
  config.merge(json{{"providers",
                     {{"describer",
                       {{"params",
                         {{"responses_by_contains",
                           json::array({{{"contains", "clip42"},
                                         {"response", "A fixture paragraph."}}})}}}}}}}});
  ProviderHub hub(config);
  Video v = testing::constant_video(16, 16, 4, 4.0);
  auto path = testing::write_video(v, dir.path(), "clip42");
  CHECK(hub.describe(path.string(), "prompt", "v1") == "A fixture paragraph.");
}

TEST_CASE("question answerer mock table") {
  testing::TempDir dir("hub");
  Config config = testing::mock_config(dir.path());
  config.merge(json{
      {"providers",
       {{"question_answerer",
         {{"params", {{"answers", {{"Did it work?", "yes"}}}, {"default_answer", "no"}}}}}}}});
  ProviderHub hub(config);
  CHECK(hub.answer("v", "Did it work?", "p", "v1", "yes_no") == "yes");
  CHECK(hub.answer("v", "Something else?", "p", "v1", "yes_no") == "no");
}

TEST_CASE("schema-invalid responses surface as provider errors with context") {
  testing::TempDir dir("hub");
  Config config = testing::mock_config(dir.path());
  // grounder table with no span entries -> ok:false is valid; break schema via
  // an http backend pointing nowhere instead
  config.set("providers.aesthetic_scorer.backend=http");
  config.set("providers.aesthetic_scorer.retries=0");
  config.set("providers.aesthetic_scorer.endpoint=http://127.0.0.1:9/void");
  ProviderHub hub(config);
  CHECK_THROWS_WITH_AS(hub.aesthetic_score("v", 0, "sample-7"),
                       doctest::Contains("sample-7"), ProviderError);
}

TEST_CASE("flow estimator recovers a pure translation") {
  testing::TempDir dir("hub");
  Config config = testing::mock_config(dir.path());
  ProviderHub hub(config);
  Video v = testing::translating_square_video(64, 64, 6, 8.0, 10);
  auto path = testing::write_video(v, dir.path(), "square");
  FlowField f = hub.flow(path.string(), 1, 0);
  auto mags = f.magnitudes();
  double peak = *std::max_element(mags.begin(), mags.end());
  CHECK(peak == doctest::Approx(10.0).epsilon(0.05));
}

TEST_CASE("replay: a warmed cache serves a full pass with zero backend calls") {
  testing::TempDir dir("hub");
  Config config = testing::mock_config(dir.path());
  config.set("providers.frame_embedder.cache=true");
  config.set("providers.flow_estimator.cache=true");
  Video v = testing::constant_video(16, 16, 4, 4.0);
  auto path = testing::write_video(v, dir.path(), "clip");

  auto pass = [&](ProviderHub& hub) {
    hub.embed_text("hello");
    hub.describe(path.string(), "describe it", "v1");
    hub.flow(path.string(), 1, 0);
    hub.aesthetic_score(path.string(), 0);
  };
  ProviderHub first(config);
  pass(first);
  CHECK(first.backend_calls() > 0);

  ProviderHub second(config);
  pass(second);
  CHECK(second.backend_calls() == 0);
  CHECK(second.cache_hits() == 4);
}
