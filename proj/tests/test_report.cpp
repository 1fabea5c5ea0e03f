#include <doctest.h>

#include "maxgenus/generators.hpp"
#include "maxgenus/report.hpp"

using namespace maxgenus;

namespace {

RunReport sample(bool with_embedding) {
  const auto g = gen_example_family(2);
  GreedyOptions opt;
  opt.policy = OrderPolicy::kLoopsFirst;
  const auto r = greedy_max_genus(g, opt);
  RunReport rep;
  rep.n = g.num_vertices();
  rep.m = g.num_edges();
  rep.beta = cycle_rank(g);
  rep.k = r.pairs.size();
  rep.bounds = r.bounds;
  rep.policy = "loops-first";
  rep.seed = 0xdeadbeefcafeULL;
  rep.backend = "dynamic";
  rep.counters = r.counters;
  rep.wall_time_ms = 0.125;
  rep.pairs = r.pairs;
  if (with_embedding) rep.embedding = RunReport::EmbeddingSummary{4, 1};
  return rep;
}

}  // namespace

TEST_CASE("json round trip") {
  for (bool emb : {false, true}) {
    const auto rep = sample(emb);
    const auto text = nlohmann::json(rep).dump();
    CHECK(text.find('\n') == std::string::npos);
    const auto back = nlohmann::json::parse(text).get<RunReport>();
    CHECK(back == rep);
    CHECK(nlohmann::json(back).dump() == text);
  }
}

TEST_CASE("json layout") {
  const auto j = nlohmann::json(sample(true));
  CHECK(j["schema_version"] == 1);
  CHECK(j["input"]["n"] == 5);
  CHECK(j["input"]["m"] == 12);
  CHECK(j["input"]["beta"] == 8);
  CHECK(j["k"] == 4);
  CHECK(j["bounds"]["lower"] == 4);
  CHECK(j["bounds"]["upper"] == 4);
  CHECK(j["pairs"].size() == 4);
  CHECK(j["pairs"][0].size() == 3);
  CHECK(j["counters"]["pair_tests"].get<std::uint64_t>() >= 4);
  CHECK(j["embedding"]["genus"] == 4);
  CHECK_FALSE(nlohmann::json(sample(false)).contains("embedding"));
}

TEST_CASE("schema version is checked") {
  auto j = nlohmann::json(sample(false));
  j["schema_version"] = 2;
  CHECK_THROWS(j.get<RunReport>());
  auto missing = nlohmann::json(sample(false));
  missing.erase("counters");
  CHECK_THROWS(missing.get<RunReport>());
}
