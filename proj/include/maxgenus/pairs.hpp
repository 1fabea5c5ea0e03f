#pragma once

#include <string_view>
#include <vector>

#include "maxgenus/graph.hpp"

namespace maxgenus {

/// Two distinct edges sharing the witness vertex.
struct AdjacentPair {
  EdgeId first = 0;
  EdgeId second = 0;
  VertexId witness = 0;

  friend bool operator==(const AdjacentPair&, const AdjacentPair&) = default;
};

/// Edge-disjoint adjacent pairs, kept in removal order.
using PairSet = std::vector<AdjacentPair>;

enum class PairSetFault {
  kNone,
  kUnknownEdge,   // id out of range or not live in g
  kSameEdge,      // first == second
  kNotAdjacent,   // witness not an endpoint of both edges
  kOverlap,       // an edge id used by two pairs
  kDisconnects,   // g minus all pair edges is disconnected
};

std::string_view to_string(PairSetFault fault);

struct PairSetCheck {
  PairSetFault fault = PairSetFault::kNone;
  std::size_t pair_index = 0;  // offending pair, when applicable
  explicit operator bool() const { return fault == PairSetFault::kNone; }
};

/// Checks that every pair is a valid adjacent pair of live edges of g, that
/// the pairs are edge-disjoint, and that removing all of them leaves g
/// connected over all of its vertices.
PairSetCheck verify_pair_set(const MultiGraph& g, const PairSet& pairs);

bool shares_vertex(const MultiGraph& g, EdgeId e, EdgeId f, VertexId w);

/// All unordered pairs of distinct live edges meeting at v, sorted by
/// (smaller id, larger id). Two darts of the same loop never pair with each
/// other; a loop pairs once with each other edge at v.
std::vector<AdjacentPair> candidate_pairs(const MultiGraph& g, VertexId v);

}  // namespace maxgenus
