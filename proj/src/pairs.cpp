#include "maxgenus/pairs.hpp"

#include <algorithm>

namespace maxgenus {

std::string_view to_string(PairSetFault fault) {
  switch (fault) {
    case PairSetFault::kNone: return "ok";
    case PairSetFault::kUnknownEdge: return "unknown edge";
    case PairSetFault::kSameEdge: return "pair repeats an edge";
    case PairSetFault::kNotAdjacent: return "edges not adjacent at witness";
    case PairSetFault::kOverlap: return "pairs overlap";
    case PairSetFault::kDisconnects: return "removal disconnects the graph";
  }
  return "?";
}

bool shares_vertex(const MultiGraph& g, EdgeId e, EdgeId f, VertexId w) {
  auto touches = [&](EdgeId x) { return g.endpoint(x, 0) == w || g.endpoint(x, 1) == w; };
  return touches(e) && touches(f);
}

PairSetCheck verify_pair_set(const MultiGraph& g, const PairSet& pairs) {
  std::vector<std::uint8_t> used(g.edge_id_bound(), 0);
  std::vector<EdgeId> removal;
  removal.reserve(2 * pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& p = pairs[i];
    if (!g.has_edge(p.first) || !g.has_edge(p.second)) return {PairSetFault::kUnknownEdge, i};
    if (p.first == p.second) return {PairSetFault::kSameEdge, i};
    if (p.witness >= g.num_vertices() || !shares_vertex(g, p.first, p.second, p.witness))
      return {PairSetFault::kNotAdjacent, i};
    if (used[p.first] || used[p.second]) return {PairSetFault::kOverlap, i};
    used[p.first] = used[p.second] = 1;
    removal.push_back(p.first);
    removal.push_back(p.second);
  }
  MultiGraph rest = g;
  rest.delete_edges(removal);
  if (!is_connected(rest)) return {PairSetFault::kDisconnects, pairs.size()};
  return {};
}

std::vector<AdjacentPair> candidate_pairs(const MultiGraph& g, VertexId v) {
  std::vector<EdgeId> edges;
  for (Dart d : g.darts(v)) edges.push_back(d.edge);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  std::vector<AdjacentPair> out;
  out.reserve(edges.size() * (edges.size() - (edges.empty() ? 0 : 1)) / 2);
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j) out.push_back({edges[i], edges[j], v});
  return out;
}

}  // namespace maxgenus
