#include <doctest.h>

#include <cmath>

#include "maxgenus/bench.hpp"
#include "maxgenus/generators.hpp"

using namespace maxgenus;

TEST_CASE("config parsing") {
  const auto c = parse_bench_config(
      "# grid\n"
      "family = simple\n"
      "sizes = 64 128   # vertices\n"
      "edge_factor = 3\n"
      "seeds = 1 2\n"
      "backends = dynamic\n"
      "policy = random\n"
      "jobs = 3\n");
  CHECK(c.family == "simple");
  CHECK(c.sizes == std::vector<std::size_t>{64, 128});
  CHECK(c.edge_factor == 3.0);
  CHECK(c.seeds == std::vector<std::uint64_t>{1, 2});
  CHECK(c.backends == std::vector<BackendKind>{BackendKind::kDynamic});
  CHECK(c.policy == OrderPolicy::kRandom);
  CHECK(c.jobs == 3);

  const auto d = parse_bench_config("sizes = 10\n");
  CHECK(d.family == "random");
  CHECK(d.backends.size() == 2);
}

TEST_CASE("malformed configs") {
  CHECK_THROWS_AS(parse_bench_config(""), ConfigError);
  CHECK_THROWS_AS(parse_bench_config("sizes 10\n"), ConfigError);
  CHECK_THROWS_AS(parse_bench_config("sizes = ten\n"), ConfigError);
  CHECK_THROWS_AS(parse_bench_config("sizes = 10\ncolour = red\n"), ConfigError);
  CHECK_THROWS_AS(parse_bench_config("sizes = 10\nbackends = bfs\n"), ConfigError);
  CHECK_THROWS_AS(parse_bench_config("sizes = 10\npolicy = best\n"), ConfigError);
  CHECK_THROWS_AS(parse_bench_config("sizes = 10\njobs = 0\n"), ConfigError);
  CHECK_THROWS_AS(parse_bench_config("sizes = 10\nfamily = lattice\n"), ConfigError);
  CHECK_THROWS_AS(parse_bench_config("sizes = 10\nfamily = a b\n"), ConfigError);
  CHECK_THROWS_AS(parse_bench_config("sizes = 10\nloop_prob = 2\n"), ConfigError);
  CHECK_THROWS_AS(parse_bench_config("sizes =\n"), ConfigError);
}

TEST_CASE("slope regression") {
  std::vector<std::pair<double, double>> quad;
  for (double x : {10.0, 20.0, 40.0, 80.0}) quad.emplace_back(x, 3 * x * x);
  CHECK(loglog_slope(quad) == doctest::Approx(2.0));
  std::vector<std::pair<double, double>> one{{5, 5}};
  CHECK(loglog_slope(one) == 0.0);
  std::vector<std::pair<double, double>> skipped{{0, 1}, {2, 4}, {4, 16}};
  CHECK(loglog_slope(skipped) == doctest::Approx(2.0));
}

TEST_CASE("degree square bound") {
  CHECK(simple_degree_square_bound(4, 6) == doctest::Approx(36.0));  // tight on K4
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto g = gen_random_simple_graph(30, 60 + seed * 5, seed);
    CHECK(static_cast<double>(degree_square_sum(g)) <= simple_degree_square_bound(30, g.num_edges()));
  }
}

TEST_CASE("small grid runs clean on both backends") {
  BenchConfig c;
  c.family = "random";
  c.sizes = {32, 64};
  c.edge_factor = 3;
  c.seeds = {1, 2};
  c.loop_prob = 0.05;
  c.parallel_prob = 0.1;
  c.jobs = 4;
  const auto r = run_bench(c);
  CHECK(r.cells.size() == 8);
  CHECK(r.violations.empty());
  for (std::size_t i = 0; i + 1 < r.cells.size(); i += 2) {
    CHECK(r.cells[i].k == r.cells[i + 1].k);
    CHECK(r.cells[i].counters.pair_tests == r.cells[i + 1].counters.pair_tests);
  }
  CHECK(r.slopes.size() == 2);
  const auto table = format_bench_table(r);
  CHECK(table.find("slope dfs") != std::string::npos);
  CHECK(table.find("violation") == std::string::npos);

  c.family = "simple";
  c.sizes = {40};
  const auto s = run_bench(c);
  CHECK(s.violations.empty());
}

TEST_CASE("generator failures become violations") {
  BenchConfig c;
  c.family = "simple";
  c.sizes = {4};
  c.edge_factor = 5;  // 20 edges on 4 vertices cannot be simple
  const auto r = run_bench(c);
  CHECK_FALSE(r.violations.empty());
}
