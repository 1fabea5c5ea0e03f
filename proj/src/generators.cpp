#include "maxgenus/generators.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

namespace maxgenus {

MultiGraph gen_example_family(int n) {
  if (n <= 0) throw std::invalid_argument("gen_example_family: n must be positive");
  const auto leaves = static_cast<VertexId>(2 * n);
  MultiGraph g(leaves + 1);
  for (VertexId i = 1; i <= leaves; ++i) {
    g.add_edge(0, i);
    g.add_edge(0, i);
    g.add_edge(i, i);
  }
  return g;
}

namespace {

// Uniform integer in [0, bound) from the raw engine output; avoids the
// implementation-defined behaviour of std::uniform_int_distribution so that
// seeds reproduce across standard libraries.
std::size_t draw(std::mt19937_64& rng, std::size_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do x = rng();
  while (x >= limit);
  return static_cast<std::size_t>(x % bound);
}

double draw_unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

void add_random_tree(MultiGraph& g, std::mt19937_64& rng) {
  const std::size_t n = g.num_vertices();
  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), 0);
  for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[draw(rng, i)]);
  for (std::size_t i = 1; i < n; ++i) g.add_edge(order[draw(rng, i)], order[i]);
}

}  // namespace

MultiGraph gen_random_connected_multigraph(std::size_t n, std::size_t m, double loop_prob,
                                           double parallel_prob, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("gen_random_connected_multigraph: n must be positive");
  if (m + 1 < n) throw std::invalid_argument("gen_random_connected_multigraph: m < n - 1");
  std::mt19937_64 rng(seed);
  MultiGraph g(n);
  add_random_tree(g, rng);
  std::vector<EdgeId> plain = g.edge_ids();
  while (g.num_edges() < m) {
    const double r = draw_unit(rng);
    if (n == 1 || r < loop_prob) {
      const auto v = static_cast<VertexId>(draw(rng, n));
      g.add_edge(v, v);
    } else if (!plain.empty() && draw_unit(rng) < parallel_prob) {
      const EdgeId src = plain[draw(rng, plain.size())];
      plain.push_back(g.add_edge(g.endpoint(src, 0), g.endpoint(src, 1)));
    } else {
      const auto u = static_cast<VertexId>(draw(rng, n));
      auto v = static_cast<VertexId>(draw(rng, n - 1));
      if (v >= u) ++v;
      plain.push_back(g.add_edge(u, v));
    }
  }
  return g;
}

MultiGraph gen_random_simple_graph(std::size_t n, std::size_t m, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("gen_random_simple_graph: n must be positive");
  if (m + 1 < n) throw std::invalid_argument("gen_random_simple_graph: m < n - 1");
  if (m > n * (n - 1) / 2) throw std::invalid_argument("gen_random_simple_graph: m exceeds n(n-1)/2");
  std::mt19937_64 rng(seed);
  MultiGraph g(n);
  add_random_tree(g, rng);
  std::set<std::pair<VertexId, VertexId>> used;
  for (EdgeId e : g.edge_ids()) used.insert(std::minmax(g.endpoint(e, 0), g.endpoint(e, 1)));
  while (g.num_edges() < m) {
    const auto u = static_cast<VertexId>(draw(rng, n));
    auto v = static_cast<VertexId>(draw(rng, n - 1));
    if (v >= u) ++v;
    if (used.insert(std::minmax(u, v)).second) g.add_edge(u, v);
  }
  return g;
}

MultiGraph gen_bouquet(std::size_t k) {
  MultiGraph g(1);
  for (std::size_t i = 0; i < k; ++i) g.add_edge(0, 0);
  return g;
}

MultiGraph gen_dipole(std::size_t k) {
  MultiGraph g(2);
  for (std::size_t i = 0; i < k; ++i) g.add_edge(0, 1);
  return g;
}

MultiGraph gen_complete(std::size_t n) {
  MultiGraph g(n);
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

MultiGraph gen_cycle(std::size_t n) {
  if (n == 0) throw std::invalid_argument("gen_cycle: n must be positive");
  MultiGraph g(n);
  for (VertexId v = 0; v < n; ++v) g.add_edge(v, static_cast<VertexId>((v + 1) % n));
  return g;
}

MultiGraph gen_path(std::size_t n) {
  if (n == 0) throw std::invalid_argument("gen_path: n must be positive");
  MultiGraph g(n);
  for (VertexId v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

MultiGraph generate(const GeneratorSpec& spec) {
  const auto& f = spec.family;
  if (f == "example") return gen_example_family(static_cast<int>(spec.n));
  if (f == "random")
    return gen_random_connected_multigraph(spec.n, spec.m, spec.loop_prob, spec.parallel_prob, spec.seed);
  if (f == "simple") return gen_random_simple_graph(spec.n, spec.m, spec.seed);
  if (f == "bouquet") return gen_bouquet(spec.k);
  if (f == "dipole") return gen_dipole(spec.k);
  if (f == "complete") return gen_complete(spec.n);
  if (f == "cycle") return gen_cycle(spec.n);
  if (f == "path") return gen_path(spec.n);
  throw std::invalid_argument("unknown graph family '" + f + "'");
}

}  // namespace maxgenus
