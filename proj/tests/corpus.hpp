#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "maxgenus/graph.hpp"

namespace corpus {

/// Isomorphism-invariant key: the lexicographically smallest upper-triangle
/// multiplicity matrix over vertex orders compatible with colour refinement.
std::string canonical_form(const maxgenus::MultiGraph& g);

/// One representative per isomorphism class of connected multigraphs
/// (loops and parallel edges allowed, no isolated vertices besides the
/// single-vertex graph) with 0..max_edges edges. Edge ids follow the
/// canonical order, so the result is deterministic.
std::vector<maxgenus::MultiGraph> connected_multigraphs(std::size_t max_edges);

/// Seeded random connected multigraphs with n <= max_n and m <= max_m.
std::vector<maxgenus::MultiGraph> random_multigraphs(std::size_t count, std::size_t max_n, std::size_t max_m,
                                                     std::uint64_t seed);

struct Instance {
  std::string name;
  maxgenus::MultiGraph graph;
  bool exhaustive = false;
};

/// Exhaustive m <= 7 classes followed by 500 random instances (n <= 8, m <= 12).
const std::vector<Instance>& standard_corpus();

}  // namespace corpus
