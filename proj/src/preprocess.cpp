#include "maxgenus/preprocess.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace maxgenus {

PreprocessResult reduce_multiedges(const MultiGraph& g) {
  if (!is_connected(g)) throw GraphError("reduce_multiedges: graph is disconnected");
  PreprocessResult out{g, {}, 0};

  // Edges are visited in ascending id order, so every bucket is sorted.
  std::unordered_map<std::uint64_t, std::vector<EdgeId>> parallel;
  std::vector<std::vector<EdgeId>> loops(g.num_vertices());
  for (EdgeId e : g.edge_ids()) {
    ++out.edge_visits;
    const VertexId u = g.endpoint(e, 0), v = g.endpoint(e, 1);
    if (u == v) {
      loops[u].push_back(e);
    } else {
      const auto [a, b] = std::minmax(u, v);
      parallel[(static_cast<std::uint64_t>(a) << 32) | b].push_back(e);
    }
  }

  std::vector<EdgeId> removed;
  auto take = [&](const std::vector<EdgeId>& bucket, std::size_t keep, VertexId witness) {
    std::size_t left = bucket.size();
    for (std::size_t i = 0; left > keep; i += 2, left -= 2) {
      ++out.edge_visits;
      out.extracted.push_back({bucket[i], bucket[i + 1], witness});
      removed.push_back(bucket[i]);
      removed.push_back(bucket[i + 1]);
    }
  };

  // unordered_map iteration order is unspecified; walk edges again so the
  // extraction order is by ascending first edge id.
  for (EdgeId e : g.edge_ids()) {
    const VertexId u = g.endpoint(e, 0), v = g.endpoint(e, 1);
    if (u == v) continue;
    const auto [a, b] = std::minmax(u, v);
    auto it = parallel.find((static_cast<std::uint64_t>(a) << 32) | b);
    if (it->second.front() != e) continue;
    take(it->second, 2, a);
  }
  for (VertexId v = 0; v < g.num_vertices(); ++v) take(loops[v], 1, v);

  out.reduced.delete_edges(removed);
  return out;
}

PairSet merge_pairs(const PairSet& first, const PairSet& second) {
  std::unordered_set<EdgeId> seen;
  PairSet out;
  out.reserve(first.size() + second.size());
  for (const PairSet* part : {&first, &second}) {
    for (const auto& p : *part) {
      if (!seen.insert(p.first).second || !seen.insert(p.second).second)
        throw std::logic_error("merge_pairs: pair sets overlap");
      out.push_back(p);
    }
  }
  return out;
}

}  // namespace maxgenus
