#include "maxgenus/report.hpp"

namespace maxgenus {

namespace {

bool same_counters(const GreedyCounters& a, const GreedyCounters& b) {
  return a.candidate_pairs == b.candidate_pairs && a.pair_tests == b.pair_tests &&
         a.pair_successes == b.pair_successes && a.pair_failures == b.pair_failures &&
         a.candidate_bound == b.candidate_bound && a.preprocessed_pairs == b.preprocessed_pairs &&
         a.backend.queries == b.backend.queries && a.backend.updates == b.backend.updates &&
         a.backend.promotions == b.backend.promotions;
}

}  // namespace

bool operator==(const RunReport& a, const RunReport& b) {
  return a.schema_version == b.schema_version && a.n == b.n && a.m == b.m && a.beta == b.beta && a.k == b.k &&
         a.bounds == b.bounds && a.policy == b.policy && a.seed == b.seed && a.backend == b.backend &&
         a.preprocess == b.preprocess && same_counters(a.counters, b.counters) &&
         a.wall_time_ms == b.wall_time_ms && a.pairs == b.pairs && a.embedding == b.embedding;
}

void to_json(nlohmann::json& j, const RunReport& r) {
  j = nlohmann::json{
      {"schema_version", r.schema_version},
      {"input", {{"n", r.n}, {"m", r.m}, {"beta", r.beta}}},
      {"k", r.k},
      {"bounds", {{"lower", r.bounds.lower}, {"upper", r.bounds.upper}}},
      {"policy", r.policy},
      {"seed", r.seed},
      {"backend", r.backend},
      {"preprocess", r.preprocess},
      {"counters",
       {{"candidate_pairs", r.counters.candidate_pairs},
        {"candidate_bound", r.counters.candidate_bound},
        {"pair_tests", r.counters.pair_tests},
        {"pair_successes", r.counters.pair_successes},
        {"pair_failures", r.counters.pair_failures},
        {"preprocessed_pairs", r.counters.preprocessed_pairs},
        {"backend_queries", r.counters.backend.queries},
        {"backend_updates", r.counters.backend.updates},
        {"promotions", r.counters.backend.promotions}}},
      {"wall_time_ms", r.wall_time_ms},
  };
  auto pairs = nlohmann::json::array();
  for (const auto& p : r.pairs) pairs.push_back({p.first, p.second, p.witness});
  j["pairs"] = std::move(pairs);
  if (r.embedding) j["embedding"] = {{"genus", r.embedding->genus}, {"faces", r.embedding->faces}};
}

void from_json(const nlohmann::json& j, RunReport& r) {
  j.at("schema_version").get_to(r.schema_version);
  if (r.schema_version != kReportSchemaVersion)
    throw std::runtime_error("unsupported report schema version " + std::to_string(r.schema_version));
  const auto& in = j.at("input");
  in.at("n").get_to(r.n);
  in.at("m").get_to(r.m);
  in.at("beta").get_to(r.beta);
  j.at("k").get_to(r.k);
  j.at("bounds").at("lower").get_to(r.bounds.lower);
  j.at("bounds").at("upper").get_to(r.bounds.upper);
  j.at("policy").get_to(r.policy);
  j.at("seed").get_to(r.seed);
  j.at("backend").get_to(r.backend);
  j.at("preprocess").get_to(r.preprocess);
  const auto& c = j.at("counters");
  c.at("candidate_pairs").get_to(r.counters.candidate_pairs);
  c.at("candidate_bound").get_to(r.counters.candidate_bound);
  c.at("pair_tests").get_to(r.counters.pair_tests);
  c.at("pair_successes").get_to(r.counters.pair_successes);
  c.at("pair_failures").get_to(r.counters.pair_failures);
  c.at("preprocessed_pairs").get_to(r.counters.preprocessed_pairs);
  c.at("backend_queries").get_to(r.counters.backend.queries);
  c.at("backend_updates").get_to(r.counters.backend.updates);
  c.at("promotions").get_to(r.counters.backend.promotions);
  j.at("wall_time_ms").get_to(r.wall_time_ms);
  r.pairs.clear();
  for (const auto& p : j.at("pairs")) r.pairs.push_back({p.at(0).get<EdgeId>(), p.at(1).get<EdgeId>(), p.at(2).get<VertexId>()});
  r.embedding.reset();
  if (j.contains("embedding"))
    r.embedding = RunReport::EmbeddingSummary{j["embedding"].at("genus").get<std::size_t>(),
                                              j["embedding"].at("faces").get<std::size_t>()};
}

}  // namespace maxgenus
