#include "maxgenus/dynamic_connectivity.hpp"

#include <bit>
#include <stdexcept>

namespace maxgenus {

DynamicConnectivity::DynamicConnectivity(std::size_t num_vertices)
    : n_(num_vertices),
      levels_(num_vertices > 1 ? static_cast<std::size_t>(std::bit_width(num_vertices)) : 1),
      nontree_(levels_ * num_vertices),
      components_(num_vertices) {
  // bit_width(n) = floor(log2 n) + 1 levels: 0..floor(log2 n).
  nodes_.reserve(levels_ * n_ * 2);
  for (std::size_t l = 0; l < levels_; ++l)
    for (VertexId v = 0; v < n_; ++v) new_node(v, kVertexNode);
}

// ------------------------------------------------------------------ treap

std::int32_t DynamicConnectivity::new_node(std::uint32_t owner, std::uint8_t flags) {
  // splitmix64
  rng_state_ += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = rng_state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  z ^= z >> 31;

  Node node;
  node.priority = static_cast<std::uint32_t>(z);
  node.owner = owner;
  node.flags = flags;
  node.agg = flags;
  node.vertices = (flags & kVertexNode) ? 1 : 0;
  if (!free_.empty()) {
    const std::int32_t x = free_.back();
    free_.pop_back();
    nodes_[x] = node;
    return x;
  }
  nodes_.push_back(node);
  return static_cast<std::int32_t>(nodes_.size() - 1);
}

void DynamicConnectivity::free_node(std::int32_t x) { free_.push_back(x); }

void DynamicConnectivity::pull(std::int32_t x) {
  Node& t = nodes_[x];
  t.size = 1;
  t.vertices = (t.flags & kVertexNode) ? 1 : 0;
  t.agg = t.flags;
  for (std::int32_t c : {t.left, t.right}) {
    if (c == kNil) continue;
    t.size += nodes_[c].size;
    t.vertices += nodes_[c].vertices;
    t.agg |= nodes_[c].agg;
    nodes_[c].parent = x;
  }
}

void DynamicConnectivity::refresh_up(std::int32_t x) {
  for (; x != kNil; x = nodes_[x].parent) pull(x);
}

std::int32_t DynamicConnectivity::merge(std::int32_t a, std::int32_t b) {
  if (a == kNil) return b;
  if (b == kNil) return a;
  if (nodes_[a].priority > nodes_[b].priority) {
    nodes_[a].right = merge(nodes_[a].right, b);
    pull(a);
    nodes_[a].parent = kNil;
    return a;
  }
  nodes_[b].left = merge(a, nodes_[b].left);
  pull(b);
  nodes_[b].parent = kNil;
  return b;
}

void DynamicConnectivity::split(std::int32_t t, std::uint32_t k, std::int32_t& a, std::int32_t& b) {
  if (t == kNil) {
    a = b = kNil;
    return;
  }
  const std::int32_t l = nodes_[t].left;
  const std::uint32_t left_size = l == kNil ? 0 : nodes_[l].size;
  if (k <= left_size) {
    std::int32_t rest;
    split(l, k, a, rest);
    nodes_[t].left = rest;
    pull(t);
    b = t;
  } else {
    std::int32_t rest;
    split(nodes_[t].right, k - left_size - 1, rest, b);
    nodes_[t].right = rest;
    pull(t);
    a = t;
  }
  if (a != kNil) nodes_[a].parent = kNil;
  if (b != kNil) nodes_[b].parent = kNil;
}

std::int32_t DynamicConnectivity::root_of(std::int32_t x) const {
  while (nodes_[x].parent != kNil) x = nodes_[x].parent;
  return x;
}

std::uint32_t DynamicConnectivity::position(std::int32_t x) const {
  auto size_of = [&](std::int32_t c) { return c == kNil ? 0U : nodes_[c].size; };
  std::uint32_t pos = size_of(nodes_[x].left);
  for (std::int32_t p = nodes_[x].parent; p != kNil; x = p, p = nodes_[p].parent)
    if (nodes_[p].right == x) pos += size_of(nodes_[p].left) + 1;
  return pos;
}

std::int32_t DynamicConnectivity::reroot(std::int32_t vertex_node) {
  const std::int32_t r = root_of(vertex_node);
  std::int32_t a, b;
  split(r, position(vertex_node), a, b);
  return merge(b, a);
}

std::int32_t DynamicConnectivity::find_flag(std::int32_t root, std::uint8_t flag) const {
  if (root == kNil || !(nodes_[root].agg & flag)) return kNil;
  std::int32_t x = root;
  while (true) {
    const Node& t = nodes_[x];
    if (t.flags & flag) return x;
    if (t.left != kNil && (nodes_[t.left].agg & flag))
      x = t.left;
    else
      x = t.right;
  }
}

void DynamicConnectivity::set_flag(std::int32_t x, std::uint8_t flag, bool on) {
  const std::uint8_t before = nodes_[x].flags;
  nodes_[x].flags = on ? (before | flag) : (before & ~flag);
  if (nodes_[x].flags != before) refresh_up(x);
}

// ------------------------------------------------------------------ forests

void DynamicConnectivity::link(std::size_t level, EdgeId e) {
  EdgeState& s = edges_[e];
  const std::int32_t ru = reroot(vertex_node(level, s.ends[0]));
  const std::int32_t rv = reroot(vertex_node(level, s.ends[1]));
  const std::uint8_t mark = static_cast<std::size_t>(s.level) == level ? kTreeMark : 0;
  const std::int32_t forward = new_node(e, mark);
  const std::int32_t backward = new_node(e, 0);
  if (edges_[e].arcs.size() <= level) edges_[e].arcs.resize(level + 1, {kNil, kNil});
  edges_[e].arcs[level] = {forward, backward};
  merge(merge(merge(ru, forward), rv), backward);
}

void DynamicConnectivity::cut(std::size_t level, EdgeId e) {
  auto [x, y] = edges_[e].arcs[level];
  std::uint32_t px = position(x), py = position(y);
  if (px > py) {
    std::swap(x, y);
    std::swap(px, py);
  }
  const std::int32_t r = root_of(x);
  std::int32_t before, rest, arc1, mid_and_rest, middle, arc2_and_after, arc2, after;
  split(r, px, before, rest);
  split(rest, 1, arc1, mid_and_rest);
  split(mid_and_rest, py - px - 1, middle, arc2_and_after);
  split(arc2_and_after, 1, arc2, after);
  merge(before, after);
  free_node(arc1);
  free_node(arc2);
  edges_[e].arcs[level] = {kNil, kNil};
}

void DynamicConnectivity::add_nontree(EdgeId e) {
  EdgeState& s = edges_[e];
  for (unsigned end = 0; end < 2; ++end) {
    const std::size_t key = static_cast<std::size_t>(s.level) * n_ + s.ends[end];
    auto& list = nontree_[key];
    s.slot[end] = static_cast<std::uint32_t>(list.size());
    list.push_back(e);
    if (list.size() == 1) set_flag(vertex_node(s.level, s.ends[end]), kNonTreeMark, true);
  }
}

void DynamicConnectivity::drop_nontree(EdgeId e) {
  EdgeState& s = edges_[e];
  for (unsigned end = 0; end < 2; ++end) {
    const std::size_t key = static_cast<std::size_t>(s.level) * n_ + s.ends[end];
    auto& list = nontree_[key];
    const EdgeId moved = list.back();
    const std::uint32_t slot = s.slot[end];
    list[slot] = moved;
    // A non-loop edge has exactly one end at this vertex.
    auto& ms = edges_[moved];
    ms.slot[ms.ends[0] == s.ends[end] ? 0 : 1] = slot;
    list.pop_back();
    if (list.empty()) set_flag(vertex_node(s.level, s.ends[end]), kNonTreeMark, false);
  }
}

void DynamicConnectivity::insert(EdgeId e, VertexId u, VertexId v) {
  if (u >= n_ || v >= n_) throw std::out_of_range("DynamicConnectivity::insert: vertex out of range");
  if (e >= edges_.size()) edges_.resize(static_cast<std::size_t>(e) + 1);
  EdgeState& s = edges_[e];
  if (s.present) throw std::invalid_argument("DynamicConnectivity::insert: edge already present");
  s.ends[0] = u;
  s.ends[1] = v;
  s.level = 0;
  s.present = true;
  s.tree = false;
  if (u == v) return;
  if (!connected(u, v)) {
    s.tree = true;
    link(0, e);
    --components_;
  } else {
    add_nontree(e);
  }
}

void DynamicConnectivity::remove(EdgeId e) {
  if (!contains(e)) throw std::invalid_argument("DynamicConnectivity::remove: edge not present");
  EdgeState& s = edges_[e];
  s.present = false;
  if (s.ends[0] == s.ends[1]) return;
  if (!s.tree) {
    drop_nontree(e);
    return;
  }
  const int level = s.level;
  for (int i = 0; i <= level; ++i) cut(static_cast<std::size_t>(i), e);
  edges_[e].tree = false;
  edges_[e].arcs.clear();
  if (!replace(edges_[e].ends[0], edges_[e].ends[1], level)) ++components_;
}

bool DynamicConnectivity::replace(VertexId u, VertexId v, int level) {
  for (int i = level; i >= 0; --i) {
    const auto li = static_cast<std::size_t>(i);
    const std::int32_t ru = root_of(vertex_node(li, u));
    const std::int32_t rv = root_of(vertex_node(li, v));
    const std::int32_t small = nodes_[ru].vertices <= nodes_[rv].vertices ? ru : rv;

    // Push the smaller tree's level-i tree edges up one level. Only flags in
    // forest i change, so `small` stays the root.
    for (std::int32_t x = find_flag(small, kTreeMark); x != kNil; x = find_flag(small, kTreeMark)) {
      const EdgeId t = nodes_[x].owner;
      set_flag(x, kTreeMark, false);
      edges_[t].level = i + 1;
      link(li + 1, t);
      ++promotions_;
    }

    for (std::int32_t x = find_flag(small, kNonTreeMark); x != kNil; x = find_flag(small, kNonTreeMark)) {
      const VertexId w = nodes_[x].owner;
      auto& list = nontree_[li * n_ + w];
      while (!list.empty()) {
        const EdgeId f = list.back();
        ++scans_;
        const EdgeState& fs = edges_[f];
        const VertexId other = fs.ends[0] == w ? fs.ends[1] : fs.ends[0];
        drop_nontree(f);
        if (root_of(vertex_node(li, other)) != small) {
          edges_[f].tree = true;
          for (std::size_t j = 0; j <= li; ++j) link(j, f);
          return true;
        }
        edges_[f].level = i + 1;
        add_nontree(f);
        ++promotions_;
      }
    }
  }
  return false;
}

bool DynamicConnectivity::connected(VertexId u, VertexId v) const {
  return u == v || root_of(vertex_node(0, u)) == root_of(vertex_node(0, v));
}

std::size_t DynamicConnectivity::component_size(VertexId v) const {
  return nodes_[root_of(vertex_node(0, v))].vertices;
}

std::string DynamicConnectivity::check_invariants() const {
  for (std::size_t l = 0; l < levels_; ++l) {
    const std::size_t cap = n_ >> l;
    for (VertexId v = 0; v < n_; ++v) {
      const std::int32_t r = root_of(vertex_node(l, v));
      if (nodes_[r].vertices > cap)
        return "level " + std::to_string(l) + " tree exceeds n/2^l vertices";
    }
  }
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    const EdgeState& s = edges_[e];
    if (!s.present || s.ends[0] == s.ends[1]) continue;
    if (s.level < 0 || static_cast<std::size_t>(s.level) >= levels_)
      return "edge " + std::to_string(e) + " has level out of range";
    const std::size_t l = static_cast<std::size_t>(s.level);
    if (s.tree) {
      for (std::size_t i = 0; i <= l; ++i) {
        if (i >= s.arcs.size() || s.arcs[i][0] == kNil)
          return "tree edge " + std::to_string(e) + " missing from forest " + std::to_string(i);
        const bool marked = nodes_[s.arcs[i][0]].flags & kTreeMark;
        if (marked != (i == l)) return "tree edge " + std::to_string(e) + " has a wrong level mark";
      }
    } else {
      if (root_of(vertex_node(l, s.ends[0])) != root_of(vertex_node(l, s.ends[1])))
        return "nontree edge " + std::to_string(e) + " spans two trees of its level";
      for (unsigned end = 0; end < 2; ++end) {
        const auto& list = nontree_[l * n_ + s.ends[end]];
        if (s.slot[end] >= list.size() || list[s.slot[end]] != e)
          return "nontree edge " + std::to_string(e) + " has a stale slot";
      }
    }
  }
  return {};
}

}  // namespace maxgenus
