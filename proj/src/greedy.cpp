#include "maxgenus/greedy.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

#include "maxgenus/preprocess.hpp"

namespace maxgenus {

std::string_view to_string(OrderPolicy policy) {
  switch (policy) {
    case OrderPolicy::kEdgeId: return "edge-id";
    case OrderPolicy::kRandom: return "random";
    case OrderPolicy::kLoopsFirst: return "loops-first";
    case OrderPolicy::kCentralVertexFirst: return "central-vertex-first";
  }
  return "?";
}

OrderPolicy parse_order_policy(std::string_view name) {
  if (name == "edge-id") return OrderPolicy::kEdgeId;
  if (name == "random") return OrderPolicy::kRandom;
  if (name == "loops-first") return OrderPolicy::kLoopsFirst;
  if (name == "central-vertex-first") return OrderPolicy::kCentralVertexFirst;
  throw std::invalid_argument("unknown order policy '" + std::string(name) + "'");
}

GenusBounds bounds_from_pairs(std::size_t pairs, std::size_t beta) {
  return {pairs, std::min(2 * pairs, beta / 2)};
}

namespace {

template <typename T>
void shuffle(std::vector<T>& items, std::mt19937_64& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % i;
    std::uint64_t x;
    do x = rng();
    while (x >= limit);
    std::swap(items[i - 1], items[x % i]);
  }
}

bool has_loop(const MultiGraph& g, VertexId v) {
  return std::any_of(g.darts(v).begin(), g.darts(v).end(), [&](Dart d) { return g.is_loop(d.edge); });
}

std::vector<VertexId> vertex_order(const MultiGraph& g, OrderPolicy policy, std::mt19937_64& rng) {
  std::vector<VertexId> order(g.num_vertices());
  std::iota(order.begin(), order.end(), 0);
  switch (policy) {
    case OrderPolicy::kEdgeId:
      break;
    case OrderPolicy::kRandom:
      shuffle(order, rng);
      break;
    case OrderPolicy::kLoopsFirst:
      std::stable_partition(order.begin(), order.end(), [&](VertexId v) { return has_loop(g, v); });
      break;
    case OrderPolicy::kCentralVertexFirst:
      std::stable_sort(order.begin(), order.end(),
                       [&](VertexId a, VertexId b) { return g.degree(a) > g.degree(b); });
      break;
  }
  return order;
}

void order_candidates(const MultiGraph& g, std::vector<AdjacentPair>& pairs, OrderPolicy policy,
                      std::mt19937_64& rng) {
  if (policy == OrderPolicy::kRandom) {
    shuffle(pairs, rng);
  } else if (policy == OrderPolicy::kLoopsFirst) {
    std::stable_partition(pairs.begin(), pairs.end(), [&](const AdjacentPair& p) {
      return g.is_loop(p.first) || g.is_loop(p.second);
    });
  }
}

}  // namespace

GreedyResult greedy_max_genus(const MultiGraph& g, const GreedyOptions& options) {
  if (!is_connected(g)) throw GraphError("greedy_max_genus: graph is disconnected");
  const std::size_t beta0 = cycle_rank(g);

  GreedyResult result;
  if (options.preprocess) {
    auto pre = reduce_multiedges(g);
    result.residual = std::move(pre.reduced);
    result.pairs = std::move(pre.extracted);
    result.counters.preprocessed_pairs = result.pairs.size();
  } else {
    result.residual = g;
  }
  MultiGraph& h = result.residual;
  auto& counters = result.counters;

  auto backend = make_backend(options.backend);
  backend->attach(h);
  std::size_t beta = cycle_rank(h);
  std::mt19937_64 rng(options.seed);

  // A connected graph with cycle rank below 2 has no removable pair: the
  // remainder would have m - 2 < n - 1 edges.
  for (VertexId v : vertex_order(h, options.policy, rng)) {
    if (beta < 2) break;
    auto candidates = candidate_pairs(h, v);
    counters.candidate_pairs += candidates.size();
    counters.candidate_bound += h.degree(v) * (h.degree(v) - (h.degree(v) ? 1 : 0)) / 2;
    order_candidates(h, candidates, options.policy, rng);
    for (const auto& p : candidates) {
      if (beta < 2) break;
      if (!h.has_edge(p.first) || !h.has_edge(p.second)) continue;
      ++counters.pair_tests;
      if (pair_removal_keeps_connected(*backend, p.first, p.second)) {
        const EdgeId ids[2] = {p.first, p.second};
        h.delete_edges(ids);
        result.pairs.push_back(p);
        beta -= 2;
        ++counters.pair_successes;
      } else {
        ++counters.pair_failures;
      }
    }
  }

  counters.backend = backend->counters();
  result.bounds = bounds_from_pairs(result.pairs.size(), beta0);
  return result;
}

}  // namespace maxgenus
