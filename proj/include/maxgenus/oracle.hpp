#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "maxgenus/graph.hpp"
#include "maxgenus/pairs.hpp"

namespace maxgenus {

/// Exact maximum-genus computations. All three are exponential and meant as
/// ground truth for small graphs; each refuses inputs above its limit.

class LimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OracleLimits {
  std::size_t max_pair_search_edges = 16;
  std::uint64_t max_spanning_trees = 1'000'000;
  std::uint64_t max_rotation_systems = 1'000'000;
};

struct PairsOracleResult {
  std::size_t gamma = 0;
  PairSet witness;  // ids refer to the input graph
};

/// Largest set of disjoint adjacent pairs whose removal keeps g connected,
/// by branch and bound on the smallest undecided edge (pair it with an
/// adjacent undecided edge, or keep it). Bound: found + min(beta/2, undecided/2).
PairsOracleResult exact_max_genus_pairs(const MultiGraph& g, const OracleLimits& limits = {});

/// A spanning tree minimising the number of odd cotree components.
struct XuongCertificate {
  std::vector<EdgeId> tree;  // ids refer to the input graph
  std::size_t odd = 0;
  std::size_t beta = 0;
  std::size_t gamma = 0;  // (beta - odd) / 2
};

/// Minimum over all spanning trees of odd(G - E(T)), by deletion/contraction
/// enumeration with bridges forced into the tree.
XuongCertificate xuong_max_genus(const MultiGraph& g, const OracleLimits& limits = {});

/// Components of g - E(tree) with an odd number of edges; vertices not
/// touched by any cotree edge form even (empty) components. Throws
/// GraphError if `tree` is not a spanning tree of g.
std::size_t odd_components(const MultiGraph& g, std::span<const EdgeId> tree);

/// Number of rotation systems of g, i.e. the product of (deg(v)-1)! over
/// vertices of positive degree. Saturates at UINT64_MAX.
std::uint64_t rotation_system_count(const MultiGraph& g);

/// Maximum genus over all rotation systems. The first dart (smallest id) of
/// each vertex is fixed; the rest are permuted. The enumeration is split
/// into index ranges evaluated in parallel with OpenMP.
std::size_t exact_max_genus_rotations(const MultiGraph& g, const OracleLimits& limits = {});

/// Single-threaded odometer enumeration; reference for the parallel kernel.
std::size_t exact_max_genus_rotations_serial(const MultiGraph& g, const OracleLimits& limits = {});

}  // namespace maxgenus
