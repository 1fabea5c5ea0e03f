#pragma once

#include <cstdint>
#include <string_view>

#include "maxgenus/connectivity.hpp"
#include "maxgenus/graph.hpp"
#include "maxgenus/pairs.hpp"

namespace maxgenus {

/// Vertex and candidate-pair scan order.
enum class OrderPolicy {
  kEdgeId,              // vertices ascending, pairs by (min id, max id)
  kRandom,              // seeded shuffle of vertices and of pairs per vertex
  kLoopsFirst,          // vertices carrying loops first; pairs containing a loop first
  kCentralVertexFirst,  // vertices by descending degree
};

std::string_view to_string(OrderPolicy policy);
OrderPolicy parse_order_policy(std::string_view name);

/// Certified interval for the maximum genus: k <= gamma_M <= min(2k, beta/2).
struct GenusBounds {
  std::size_t lower = 0;
  std::size_t upper = 0;
  friend bool operator==(const GenusBounds&, const GenusBounds&) = default;
};

GenusBounds bounds_from_pairs(std::size_t pairs, std::size_t beta);

struct GreedyOptions {
  BackendKind backend = BackendKind::kDynamic;
  OrderPolicy policy = OrderPolicy::kEdgeId;
  std::uint64_t seed = 0;
  /// Extract forced pairs from large parallel classes and loop bundles first.
  bool preprocess = false;
};

struct GreedyCounters {
  std::uint64_t candidate_pairs = 0;  // pairs enumerated at processed vertices
  std::uint64_t pair_tests = 0;       // pair_removal_keeps_connected calls
  std::uint64_t pair_successes = 0;
  std::uint64_t pair_failures = 0;
  std::uint64_t candidate_bound = 0;  // sum of C(deg, 2) at processing time
  std::uint64_t preprocessed_pairs = 0;
  ConnectivityCounters backend;
};

struct GreedyResult {
  PairSet pairs;
  GenusBounds bounds;
  MultiGraph residual;  // input minus all pair edges, same ids
  GreedyCounters counters;
};

/// Removes adjacent edge pairs while the graph stays connected, until no
/// removable pair is left. Each vertex is scanned once: a pair that
/// disconnects the graph keeps disconnecting it after further removals, so
/// a single pass leaves an inclusion-maximal pair set. Throws GraphError on
/// disconnected input.
GreedyResult greedy_max_genus(const MultiGraph& g, const GreedyOptions& options = {});

}  // namespace maxgenus
