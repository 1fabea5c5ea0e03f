#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "maxgenus/connectivity.hpp"
#include "maxgenus/greedy.hpp"

namespace maxgenus {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Key-value bench grid, one `key = value` per line, `#` comments.
///
///   family = random          # random | simple | example | complete | ...
///   sizes = 256 512 1024     # vertex counts
///   edge_factor = 4          # m = edge_factor * n
///   seeds = 1 2 3
///   backends = dfs dynamic
///   policy = edge-id
///   loop_prob = 0.05
///   parallel_prob = 0.05
///   jobs = 4
struct BenchConfig {
  std::string family = "random";
  std::vector<std::size_t> sizes;
  double edge_factor = 4.0;
  std::vector<std::uint64_t> seeds{1};
  std::vector<BackendKind> backends{BackendKind::kDfs, BackendKind::kDynamic};
  OrderPolicy policy = OrderPolicy::kEdgeId;
  double loop_prob = 0.0;
  double parallel_prob = 0.0;
  int jobs = 1;
};

BenchConfig parse_bench_config(std::string_view text);

struct BenchCell {
  std::string family;
  std::size_t n = 0, m = 0;
  std::uint64_t seed = 0;
  BackendKind backend = BackendKind::kDfs;
  std::size_t k = 0;
  GreedyCounters counters;
  std::uint64_t degree_square_sum = 0;
  double wall_ms = 0.0;
};

struct BenchSlope {
  BackendKind backend;
  double slope = 0.0;  // least-squares exponent of wall time vs m
  std::size_t points = 0;
};

struct BenchResult {
  std::vector<BenchCell> cells;
  std::vector<BenchSlope> slopes;
  /// Failed checks, empty when every cell satisfied the accounting
  /// identities, the degree bound on simple graphs, and backend agreement.
  std::vector<std::string> violations;
};

/// Runs every (size, seed, backend) cell, up to config.jobs at a time.
BenchResult run_bench(const BenchConfig& config);

/// One row per cell followed by the slope lines and any violations.
std::string format_bench_table(const BenchResult& result);

/// Least-squares slope of log(y) against log(x); points with a
/// non-positive coordinate are skipped. Returns 0 for fewer than two points.
double loglog_slope(std::span<const std::pair<double, double>> points);

/// Upper bound on the degree square sum of a simple graph with n vertices
/// and m edges: m (2m / (n - 1) + n - 2).
double simple_degree_square_bound(std::size_t n, std::size_t m);

}  // namespace maxgenus
