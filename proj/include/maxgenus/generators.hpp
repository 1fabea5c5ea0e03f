#pragma once

#include <cstdint>
#include <string>

#include "maxgenus/graph.hpp"

namespace maxgenus {

/// Star K_{1,2n} with every edge doubled and a loop on every leaf.
/// Vertex 0 is the centre; leaf i (1..2n) owns edges 3(i-1), 3(i-1)+1
/// (the parallel pair to the centre) and 3(i-1)+2 (its loop).
MultiGraph gen_example_family(int n);

/// Random spanning tree on n vertices followed by m - n + 1 extra edges.
/// Each extra edge is a loop with probability `loop_prob`, otherwise a copy
/// of an existing non-loop edge with probability `parallel_prob`, otherwise
/// a uniformly random pair of distinct vertices.
MultiGraph gen_random_connected_multigraph(std::size_t n, std::size_t m, double loop_prob,
                                           double parallel_prob, std::uint64_t seed);

/// Random connected simple graph (no loops, no parallel edges).
MultiGraph gen_random_simple_graph(std::size_t n, std::size_t m, std::uint64_t seed);

MultiGraph gen_bouquet(std::size_t k);
MultiGraph gen_dipole(std::size_t k);
MultiGraph gen_complete(std::size_t n);
MultiGraph gen_cycle(std::size_t n);
MultiGraph gen_path(std::size_t n);

/// Named family with integer/real parameters, as used by the CLI and the
/// bench harness. Families: example(n), random(n,m,loop_prob,parallel_prob,seed),
/// simple(n,m,seed), bouquet(k), dipole(k), complete(n), cycle(n), path(n).
struct GeneratorSpec {
  std::string family;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t k = 0;
  double loop_prob = 0.0;
  double parallel_prob = 0.0;
  std::uint64_t seed = 0;
};

MultiGraph generate(const GeneratorSpec& spec);

}  // namespace maxgenus
