// Serial reference kernels against their parallel or dynamic counterparts.

#include <benchmark/benchmark.h>

#include <cstdint>

#include "maxgenus/generators.hpp"
#include "maxgenus/graph.hpp"
#include "maxgenus/greedy.hpp"
#include "maxgenus/oracle.hpp"

using namespace maxgenus;

namespace {

// c copies of K4 joined in a path by bridges between distinct vertices.
// Maximum genus c stays below beta/2, so the enumeration cannot stop early:
// 2304 rotation systems for c = 2, 331776 for c = 3.
MultiGraph rotation_workload(benchmark::State& state) {
  const auto c = static_cast<VertexId>(state.range(0));
  MultiGraph g(4 * c);
  for (VertexId b = 0; b < c; ++b) {
    for (VertexId i = 0; i < 4; ++i)
      for (VertexId j = i + 1; j < 4; ++j) g.add_edge(4 * b + i, 4 * b + j);
    if (b + 1 < c) g.add_edge(4 * b + 1, 4 * b + 4);
  }
  return g;
}

void BM_RotationsSerial(benchmark::State& state) {
  const auto g = rotation_workload(state);
  OracleLimits limits;
  limits.max_rotation_systems = 10'000'000;
  for (auto _ : state) benchmark::DoNotOptimize(exact_max_genus_rotations_serial(g, limits));
  state.counters["rotations"] = static_cast<double>(rotation_system_count(g));
}

void BM_RotationsParallel(benchmark::State& state) {
  const auto g = rotation_workload(state);
  OracleLimits limits;
  limits.max_rotation_systems = 10'000'000;
  for (auto _ : state) benchmark::DoNotOptimize(exact_max_genus_rotations(g, limits));
  state.counters["rotations"] = static_cast<double>(rotation_system_count(g));
}

void greedy_case(benchmark::State& state, BackendKind backend) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto g = gen_random_simple_graph(n, 4 * n, 1);
  GreedyOptions opt;
  opt.backend = backend;
  std::uint64_t tests = 0;
  for (auto _ : state) {
    const auto r = greedy_max_genus(g, opt);
    tests = r.counters.pair_tests;
    benchmark::DoNotOptimize(r.pairs.data());
  }
  state.counters["m"] = static_cast<double>(g.num_edges());
  state.counters["pair_tests"] = static_cast<double>(tests);
  state.SetComplexityN(static_cast<std::int64_t>(g.num_edges()));
}

void BM_GreedyDfs(benchmark::State& state) { greedy_case(state, BackendKind::kDfs); }
void BM_GreedyDynamic(benchmark::State& state) { greedy_case(state, BackendKind::kDynamic); }

}  // namespace

BENCHMARK(BM_RotationsSerial)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RotationsParallel)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_GreedyDfs)->RangeMultiplier(2)->Range(256, 2048)->Unit(benchmark::kMillisecond)->Complexity();
BENCHMARK(BM_GreedyDynamic)->RangeMultiplier(2)->Range(256, 8192)->Unit(benchmark::kMillisecond)->Complexity();

BENCHMARK_MAIN();
