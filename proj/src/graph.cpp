#include "maxgenus/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace maxgenus {

MultiGraph::MultiGraph(std::size_t num_vertices) : incidence_(num_vertices), labels_(num_vertices) {
  for (std::size_t v = 0; v < num_vertices; ++v) labels_[v] = std::to_string(v);
}

VertexId MultiGraph::add_vertex(std::string label) {
  const auto v = static_cast<VertexId>(incidence_.size());
  incidence_.emplace_back();
  labels_.push_back(label.empty() ? std::to_string(v) : std::move(label));
  return v;
}

EdgeId MultiGraph::add_edge(VertexId u, VertexId v) {
  if (u >= num_vertices() || v >= num_vertices()) throw GraphError("add_edge: vertex out of range");
  const auto e = static_cast<EdgeId>(ends_.size());
  ends_.push_back({u, v});
  alive_.push_back(0);
  dart_pos_.resize(2 * ends_.size());
  relink(e);
  return e;
}

void MultiGraph::relink(EdgeId e) {
  for (std::uint8_t end = 0; end < 2; ++end) {
    auto& list = incidence_[ends_[e][end]];
    dart_pos_[2 * e + end] = static_cast<std::uint32_t>(list.size());
    list.push_back(Dart{e, end});
  }
  alive_[e] = 1;
  ++live_edges_;
}

void MultiGraph::unlink(EdgeId e) {
  // Remove end 1 first so that, for a loop, end 0's position stays valid.
  for (int end = 1; end >= 0; --end) {
    auto& list = incidence_[ends_[e][end]];
    const std::uint32_t pos = dart_pos_[2 * e + end];
    const Dart moved = list.back();
    list[pos] = moved;
    dart_pos_[moved.index()] = pos;
    list.pop_back();
  }
  alive_[e] = 0;
  --live_edges_;
}

std::vector<EdgeId> MultiGraph::edge_ids() const {
  std::vector<EdgeId> ids;
  ids.reserve(live_edges_);
  for (EdgeId e = 0; e < ends_.size(); ++e)
    if (alive_[e]) ids.push_back(e);
  return ids;
}

void MultiGraph::delete_edges(std::span<const EdgeId> ids) {
  for (std::size_t i = 0; i < ids.size(); ++i) {
    const EdgeId e = ids[i];
    bool ok = has_edge(e);
    for (std::size_t j = 0; ok && j < i; ++j) ok = ids[j] != e;
    if (!ok) throw GraphError("delete_edges: unknown or deleted edge " + std::to_string(e));
  }
  for (EdgeId e : ids) {
    unlink(e);
    deletion_stack_.push_back(e);
  }
}

void MultiGraph::restore_edges(std::span<const EdgeId> ids) {
  if (ids.size() > deletion_stack_.size())
    throw GraphError("restore_edges: more edges than were deleted");
  const std::size_t base = deletion_stack_.size() - ids.size();
  for (std::size_t i = 0; i < ids.size(); ++i)
    if (deletion_stack_[base + i] != ids[i])
      throw GraphError("restore_edges: out-of-order restore of edge " + std::to_string(ids[i]));
  for (std::size_t i = ids.size(); i-- > 0;) {
    relink(ids[i]);
    deletion_stack_.pop_back();
  }
}

MultiGraph MultiGraph::compacted(std::vector<EdgeId>* old_ids) const {
  MultiGraph out(num_vertices());
  out.labels_ = labels_;
  if (old_ids) old_ids->clear();
  for (EdgeId e = 0; e < ends_.size(); ++e) {
    if (!alive_[e]) continue;
    out.add_edge(ends_[e][0], ends_[e][1]);
    if (old_ids) old_ids->push_back(e);
  }
  return out;
}

bool operator==(const MultiGraph& a, const MultiGraph& b) {
  if (a.num_vertices() != b.num_vertices() || a.ends_ != b.ends_ || a.alive_ != b.alive_) return false;
  for (VertexId v = 0; v < a.num_vertices(); ++v) {
    auto x = a.incidence_[v];
    auto y = b.incidence_[v];
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    if (x != y) return false;
  }
  return true;
}

MultiGraph parse_edge_list(std::string_view text) {
  MultiGraph g;
  std::unordered_map<std::string, VertexId> ids;
  auto vertex = [&](const std::string& label) {
    auto [it, inserted] = ids.try_emplace(label, 0);
    if (inserted) it->second = g.add_vertex(label);
    return it->second;
  };

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    std::istringstream in{std::string(line)};
    std::string a, b, extra;
    if (!(in >> a)) continue;
    if (!(in >> b)) throw ParseError(line_no, "expected two vertex labels");
    if (in >> extra) throw ParseError(line_no, "unexpected token '" + extra + "'");
    const VertexId u = vertex(a);
    const VertexId v = vertex(b);
    g.add_edge(u, v);
  }
  if (g.num_vertices() == 0) throw ParseError(line_no, "graph has no vertices");
  return g;
}

std::string format_edge_list(const MultiGraph& g) {
  std::string out;
  for (EdgeId e : g.edge_ids()) {
    out += g.label(g.endpoint(e, 0));
    out += ' ';
    out += g.label(g.endpoint(e, 1));
    out += '\n';
  }
  return out;
}

std::vector<std::uint32_t> component_labels(const MultiGraph& g) {
  constexpr auto kUnset = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> comp(g.num_vertices(), kUnset);
  std::vector<VertexId> stack;
  std::uint32_t next = 0;
  for (VertexId s = 0; s < g.num_vertices(); ++s) {
    if (comp[s] != kUnset) continue;
    comp[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      for (Dart d : g.darts(v)) {
        const VertexId w = g.endpoint(d.twin());
        if (comp[w] == kUnset) {
          comp[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return comp;
}

std::size_t count_components(const MultiGraph& g) {
  const auto comp = component_labels(g);
  return comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
}

bool is_connected(const MultiGraph& g) { return count_components(g) <= 1; }

std::size_t cycle_rank(const MultiGraph& g) {
  return g.num_edges() + count_components(g) - g.num_vertices();
}

namespace {

// Biconnected blocks of the non-loop edges, each reported as its edge list.
template <typename OnBlock>
void for_each_block(const MultiGraph& g, OnBlock&& on_block) {
  const std::size_t n = g.num_vertices();
  constexpr auto kUnseen = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> disc(n, kUnseen), low(n, 0);
  std::vector<EdgeId> edge_stack;
  std::vector<std::uint8_t> seen_edge(g.edge_id_bound(), 0);

  struct Frame {
    VertexId v;
    EdgeId parent_edge;
    std::size_t next;
  };
  std::vector<Frame> frames;
  std::uint32_t clock = 0;

  for (VertexId root = 0; root < n; ++root) {
    if (disc[root] != kUnseen) continue;
    disc[root] = low[root] = clock++;
    frames.push_back({root, static_cast<EdgeId>(-1), 0});
    while (!frames.empty()) {
      Frame& f = frames.back();
      const auto& darts = g.darts(f.v);
      if (f.next < darts.size()) {
        const Dart d = darts[f.next++];
        const EdgeId e = d.edge;
        if (g.is_loop(e) || e == f.parent_edge || seen_edge[e]) continue;
        seen_edge[e] = 1;
        const VertexId w = g.endpoint(d.twin());
        edge_stack.push_back(e);
        if (disc[w] == kUnseen) {
          disc[w] = low[w] = clock++;
          frames.push_back({w, e, 0});
        } else {
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      const VertexId child = f.v;
      const EdgeId via = f.parent_edge;
      frames.pop_back();
      if (frames.empty()) break;
      const VertexId parent = frames.back().v;
      low[parent] = std::min(low[parent], low[child]);
      if (low[child] >= disc[parent]) {
        std::vector<EdgeId> block;
        while (true) {
          const EdgeId top = edge_stack.back();
          edge_stack.pop_back();
          block.push_back(top);
          if (top == via) break;
        }
        on_block(block);
      }
    }
  }
}

}  // namespace

bool is_cactus(const MultiGraph& g) {
  if (!is_connected(g)) throw GraphError("is_cactus: graph is disconnected");
  // Number of cycles through each vertex, counted per cyclic block.
  std::vector<std::uint32_t> cycles_at(g.num_vertices(), 0);
  for (EdgeId e : g.edge_ids())
    if (g.is_loop(e)) ++cycles_at[g.endpoint(e, 0)];

  bool ok = true;
  std::vector<VertexId> verts;
  for_each_block(g, [&](const std::vector<EdgeId>& block) {
    if (!ok || block.size() == 1) return;
    verts.clear();
    for (EdgeId e : block) {
      verts.push_back(g.endpoint(e, 0));
      verts.push_back(g.endpoint(e, 1));
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    // A 2-connected block is a single cycle iff it has as many edges as vertices.
    if (block.size() != verts.size()) {
      ok = false;
      return;
    }
    for (VertexId v : verts) ++cycles_at[v];
  });
  if (!ok) return false;
  return std::all_of(cycles_at.begin(), cycles_at.end(), [](std::uint32_t c) { return c <= 1; });
}

std::vector<EdgeId> bridges(const MultiGraph& g) {
  std::vector<EdgeId> out;
  for_each_block(g, [&](const std::vector<EdgeId>& block) {
    if (block.size() == 1) out.push_back(block.front());
  });
  std::sort(out.begin(), out.end());
  return out;
}

bool is_simple(const MultiGraph& g) {
  std::vector<std::pair<VertexId, VertexId>> keys;
  for (EdgeId e : g.edge_ids()) {
    if (g.is_loop(e)) return false;
    const VertexId a = g.endpoint(e, 0), b = g.endpoint(e, 1);
    keys.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(keys.begin(), keys.end());
  return std::adjacent_find(keys.begin(), keys.end()) == keys.end();
}

std::size_t degree_square_sum(const MultiGraph& g) {
  std::size_t sum = 0;
  for (VertexId v = 0; v < g.num_vertices(); ++v) sum += g.degree(v) * g.degree(v);
  return sum;
}

}  // namespace maxgenus
