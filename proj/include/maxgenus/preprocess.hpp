#pragma once

#include "maxgenus/graph.hpp"
#include "maxgenus/pairs.hpp"

namespace maxgenus {

/// Forced pairs taken out of large parallel classes and loop bundles.
///
/// `reduced` keeps the vertex set and edge ids of the input; extracted edges
/// are deleted from it, so ids in `extracted` and in any pair set computed on
/// `reduced` refer to the original graph directly.
struct PreprocessResult {
  MultiGraph reduced;
  PairSet extracted;
  std::size_t edge_visits = 0;  // work counter, linear in m
};

/// Removes pairs of parallel edges (ascending id) from every parallel class
/// until it has at most two edges, then pairs of loops from every vertex
/// until it has at most one loop. Throws GraphError on disconnected input.
PreprocessResult reduce_multiedges(const MultiGraph& g);

/// Concatenation of two pair sets. Throws std::logic_error if they share an
/// edge id.
PairSet merge_pairs(const PairSet& first, const PairSet& second);

}  // namespace maxgenus
