#include "maxgenus/embedding.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace maxgenus {

namespace {
constexpr FaceId kNoFace = static_cast<FaceId>(-1);
}  // namespace

// ------------------------------------------------------------------ static

FaceSet trace_faces(const MultiGraph& g, const RotationSystem& rot) {
  if (rot.rotation.size() != g.num_vertices()) throw EmbeddingError("rotation system has wrong vertex count");
  const std::size_t slots = 2 * g.edge_id_bound();
  std::vector<std::uint32_t> succ(slots);
  std::vector<std::uint8_t> listed(slots, 0);
  std::size_t total = 0;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    const auto& cyc = rot.rotation[v];
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      const Dart d = cyc[i];
      if (!g.has_edge(d.edge) || d.end > 1 || g.endpoint(d) != v)
        throw EmbeddingError("rotation at vertex " + g.label(v) + " lists a foreign dart");
      if (listed[d.index()]) throw EmbeddingError("dart listed twice");
      listed[d.index()] = 1;
      succ[d.index()] = static_cast<std::uint32_t>(cyc[(i + 1) % cyc.size()].index());
    }
    total += cyc.size();
  }
  if (total != 2 * g.num_edges()) throw EmbeddingError("rotation system misses darts");

  FaceSet out;
  if (total == 0) {
    out.faces.emplace_back();
    return out;
  }
  std::vector<std::uint8_t> seen(slots, 0);
  for (std::size_t s = 0; s < slots; ++s) {
    if (!listed[s] || seen[s]) continue;
    auto& face = out.faces.emplace_back();
    for (std::size_t d = s; !seen[d]; d = succ[d ^ 1U]) {
      seen[d] = 1;
      face.push_back(Dart::from_index(d));
    }
  }
  return out;
}

std::size_t genus_of(const MultiGraph& g, const RotationSystem& rot) {
  if (!is_connected(g)) throw EmbeddingError("genus_of: graph is disconnected");
  const std::size_t f = trace_faces(g, rot).size();
  const std::size_t lhs = 2 + g.num_edges();
  const std::size_t rhs = g.num_vertices() + f;
  if (lhs < rhs || (lhs - rhs) % 2 != 0) throw std::logic_error("genus_of: Euler characteristic is not even");
  return (lhs - rhs) / 2;
}

std::string format_rotation_system(const MultiGraph& g, const RotationSystem& rot) {
  std::string out;
  for (VertexId v = 0; v < rot.rotation.size(); ++v) {
    out += g.label(v);
    out += ':';
    for (Dart d : rot.rotation[v]) {
      out += ' ';
      out += std::to_string(d.edge);
      out += '.';
      out += std::to_string(d.end);
    }
    out += '\n';
  }
  return out;
}

RotationSystem parse_rotation_system(const MultiGraph& g, std::string_view text) {
  std::unordered_map<std::string, VertexId> by_label;
  for (VertexId v = 0; v < g.num_vertices(); ++v) by_label.emplace(g.label(v), v);
  RotationSystem rot;
  rot.rotation.resize(g.num_vertices());
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto colon = line.rfind(':', line.find(' ') == std::string::npos ? line.size() : line.find(' '));
    if (colon == std::string::npos) throw ParseError(line_no, "missing ':'");
    const auto it = by_label.find(line.substr(0, colon));
    if (it == by_label.end()) throw ParseError(line_no, "unknown vertex '" + line.substr(0, colon) + "'");
    std::istringstream darts(line.substr(colon + 1));
    std::string tok;
    while (darts >> tok) {
      const auto dot = tok.find('.');
      if (dot == std::string::npos) throw ParseError(line_no, "malformed dart '" + tok + "'");
      try {
        const auto e = static_cast<EdgeId>(std::stoul(tok.substr(0, dot)));
        const auto end = std::stoul(tok.substr(dot + 1));
        if (end > 1) throw ParseError(line_no, "dart end must be 0 or 1");
        rot.rotation[it->second].push_back(Dart{e, static_cast<std::uint8_t>(end)});
      } catch (const std::logic_error&) {
        throw ParseError(line_no, "malformed dart '" + tok + "'");
      }
    }
  }
  return rot;
}

// ------------------------------------------------------------------ incremental

IncrementalEmbedding::IncrementalEmbedding(const MultiGraph& g)
    : g_(g),
      succ_(2 * g.edge_id_bound()),
      pred_(2 * g.edge_id_bound()),
      face_(2 * g.edge_id_bound(), 0),
      anchor_(g.num_vertices(), -1),
      embedded_(g.edge_id_bound(), 0) {}

std::size_t IncrementalEmbedding::num_faces() const { return live_faces_ + (embedded_edges_ == 0 ? 1 : 0); }

std::size_t IncrementalEmbedding::genus_for(std::size_t faces) const {
  const std::size_t lhs = 2 + embedded_edges_;
  const std::size_t rhs = active_vertices() + faces;
  if (lhs < rhs || (lhs - rhs) % 2 != 0) throw std::logic_error("embedding violates the Euler formula");
  return (lhs - rhs) / 2;
}

std::size_t IncrementalEmbedding::genus() const { return genus_for(num_faces()); }

FaceId IncrementalEmbedding::new_face(Dart start) {
  FaceId id;
  if (!free_faces_.empty()) {
    id = free_faces_.back();
    free_faces_.pop_back();
  } else {
    id = static_cast<FaceId>(face_rep_.size());
    face_rep_.push_back(-1);
  }
  face_rep_[id] = static_cast<std::int64_t>(start.index());
  ++live_faces_;
  Dart d = start;
  do {
    face_[d.index()] = id;
    d = next_in_face(d);
  } while (d != start);
  return id;
}

void IncrementalEmbedding::embed_tree(std::span<const EdgeId> tree) {
  if (embedded_edges_ != 0) throw EmbeddingError("embed_tree: embedding is not empty");
  if (tree.size() + 1 != g_.num_vertices()) throw EmbeddingError("embed_tree: not a spanning tree");
  std::vector<VertexId> parent(g_.num_vertices());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](VertexId x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<std::vector<Dart>> at(g_.num_vertices());
  for (EdgeId e : tree) {
    if (!g_.has_edge(e) || embedded_[e]) throw EmbeddingError("embed_tree: bad edge");
    const VertexId a = find(g_.endpoint(e, 0)), b = find(g_.endpoint(e, 1));
    if (a == b) throw EmbeddingError("embed_tree: edge set has a cycle");
    parent[a] = b;
    embedded_[e] = 1;
    ++embedded_edges_;
    at[g_.endpoint(e, 0)].push_back(Dart{e, 0});
    at[g_.endpoint(e, 1)].push_back(Dart{e, 1});
  }
  for (VertexId v = 0; v < g_.num_vertices(); ++v) {
    auto& ds = at[v];
    if (ds.empty()) continue;
    std::sort(ds.begin(), ds.end());
    for (std::size_t i = 0; i < ds.size(); ++i) {
      const std::size_t next = ds[(i + 1) % ds.size()].index();
      succ_[ds[i].index()] = static_cast<std::uint32_t>(next);
      pred_[next] = static_cast<std::uint32_t>(ds[i].index());
    }
    anchor_[v] = static_cast<std::int64_t>(ds.front().index());
    ++active_vertices_;
  }
  if (!tree.empty()) new_face(Dart{tree.front(), 0});
  if (live_faces_ != 1 && !tree.empty()) throw std::logic_error("embed_tree: tree embedding has several faces");
}

void IncrementalEmbedding::splice(Dart d, const Corner& c) {
  const std::size_t x = d.index();
  if (!c.after) {
    succ_[x] = pred_[x] = static_cast<std::uint32_t>(x);
    anchor_[c.vertex] = static_cast<std::int64_t>(x);
    ++active_vertices_;
    return;
  }
  const std::size_t a = c.after->index();
  const std::uint32_t s = succ_[a];
  succ_[a] = static_cast<std::uint32_t>(x);
  pred_[x] = static_cast<std::uint32_t>(a);
  succ_[x] = s;
  pred_[s] = static_cast<std::uint32_t>(x);
}

std::optional<FaceId> IncrementalEmbedding::face_of_corner(const Corner& c) const {
  if (!c.after) return std::nullopt;
  return face_[succ_[c.after->index()]];
}

std::optional<Corner> IncrementalEmbedding::corner_in_face(VertexId v, FaceId f) const {
  if (f >= face_rep_.size() || face_rep_[f] < 0) return std::nullopt;
  const Dart start = Dart::from_index(static_cast<std::size_t>(face_rep_[f]));
  Dart d = start;
  do {
    if (g_.endpoint(d) == v) return Corner{v, Dart::from_index(pred_[d.index()])};
    d = next_in_face(d);
  } while (d != start);
  return std::nullopt;
}

std::vector<Corner> IncrementalEmbedding::corners(VertexId v) const {
  std::vector<Corner> out;
  if (anchor_[v] < 0) return out;
  const auto start = static_cast<std::size_t>(anchor_[v]);
  std::size_t d = start;
  do {
    out.push_back(Corner{v, Dart::from_index(d)});
    d = succ_[d];
  } while (d != start);
  return out;
}

InsertOutcome IncrementalEmbedding::insert_edge(EdgeId e, const Corner& c0, const Corner& c1) {
  if (!g_.has_edge(e) || embedded_[e]) throw EmbeddingError("insert_edge: edge missing or already embedded");
  const Corner* cs[2] = {&c0, &c1};
  for (unsigned end = 0; end < 2; ++end) {
    const Corner& c = *cs[end];
    if (c.vertex != g_.endpoint(e, end)) throw EmbeddingError("insert_edge: corner at the wrong vertex");
    if (c.after) {
      if (!g_.has_edge(c.after->edge) || !embedded_[c.after->edge] || g_.endpoint(*c.after) != c.vertex)
        throw EmbeddingError("insert_edge: invalid corner");
    } else if (anchor_[c.vertex] >= 0) {
      throw EmbeddingError("insert_edge: empty corner at a vertex with darts");
    }
  }
  if (!c0.after && !c1.after && embedded_edges_ != 0)
    throw EmbeddingError("insert_edge: edge would not touch the embedding");

  InsertOutcome out;
  out.faces_before = num_faces();
  out.genus_before = genus();
  const auto f0 = face_of_corner(c0);
  const auto f1 = face_of_corner(c1);
  out.same_face = !(f0 && f1) || *f0 == *f1;

  const Dart d0{e, 0}, d1{e, 1};
  splice(d0, c0);
  Corner second = c1;
  if (!second.after && anchor_[c1.vertex] >= 0) second.after = Dart::from_index(static_cast<std::size_t>(anchor_[c1.vertex]));
  splice(d1, second);
  embedded_[e] = 1;
  ++embedded_edges_;

  for (const auto& f : {f0, f1}) {
    if (f && face_rep_[*f] >= 0) {
      face_rep_[*f] = -1;
      free_faces_.push_back(*f);
      --live_faces_;
    }
  }
  face_[d1.index()] = kNoFace;
  const FaceId first = new_face(d0);
  if (face_[d1.index()] != first) new_face(d1);

  out.faces_after = num_faces();
  out.genus_after = genus();
  if (f0 && f1) {
    const bool split_ok = out.same_face && out.faces_after == out.faces_before + 1 && out.genus_after == out.genus_before;
    const bool merge_ok = !out.same_face && out.faces_after + 1 == out.faces_before && out.genus_after == out.genus_before + 1;
    if (!split_ok && !merge_ok) throw std::logic_error("insert_edge: face update breaks the split/merge dichotomy");
  }
  return out;
}

InsertOutcome IncrementalEmbedding::insert_adjacent_pair(const AdjacentPair& pair) {
  if (num_faces() != 1) throw EmbeddingError("insert_adjacent_pair: embedding has more than one face");
  const EdgeId e = pair.first, f = pair.second;
  const VertexId w = pair.witness;
  if (e == f || !shares_vertex(g_, e, f, w)) throw EmbeddingError("insert_adjacent_pair: not an adjacent pair");
  if (!g_.has_edge(f) || embedded_[f]) throw EmbeddingError("insert_adjacent_pair: edge missing or already embedded");

  const std::size_t genus_before = genus();
  std::optional<FaceId> only;
  for (FaceId id = 0; id < face_rep_.size(); ++id)
    if (face_rep_[id] >= 0) only = id;

  Corner ce[2];
  for (unsigned end = 0; end < 2; ++end) {
    const VertexId x = g_.endpoint(e, end);
    if (anchor_[x] < 0) {
      ce[end] = Corner{x, std::nullopt};
    } else {
      auto c = corner_in_face(x, *only);
      if (!c) throw std::logic_error("insert_adjacent_pair: vertex missing from the only face");
      ce[end] = *c;
    }
  }
  insert_edge(e, ce[0], ce[1]);

  // The two corners beside e's dart at w lie in the two halves of the split face.
  const Dart dw{e, static_cast<std::uint8_t>(g_.endpoint(e, 0) == w ? 0 : 1)};
  const Corner before_e{w, Dart::from_index(pred_[dw.index()])};
  const Corner after_e{w, dw};
  const FaceId face_a = *face_of_corner(before_e);
  const FaceId face_b = *face_of_corner(after_e);
  if (face_a == face_b) throw std::logic_error("insert_adjacent_pair: first edge did not split the face");

  const unsigned wend = g_.endpoint(f, 0) == w ? 0 : 1;
  Corner cf[2];
  if (g_.is_loop(f)) {
    cf[0] = before_e;
    cf[1] = after_e;
  } else {
    const VertexId u = g_.endpoint(f, 1 - wend);
    if (auto cu = corner_in_face(u, face_a)) {
      cf[1 - wend] = *cu;
      cf[wend] = after_e;
    } else if (auto cu2 = corner_in_face(u, face_b)) {
      cf[1 - wend] = *cu2;
      cf[wend] = before_e;
    } else {
      throw std::logic_error("insert_adjacent_pair: endpoint on neither face");
    }
  }
  InsertOutcome out = insert_edge(f, cf[0], cf[1]);
  out.faces_before = 1;
  out.genus_before = genus_before;
  if (out.faces_after != 1 || out.genus_after != genus_before + 1)
    throw std::logic_error("insert_adjacent_pair: result is not a one-face embedding of higher genus");
  return out;
}

InsertOutcome IncrementalEmbedding::insert_edge_auto(EdgeId e) {
  const VertexId x = g_.endpoint(e, 0), y = g_.endpoint(e, 1);
  const auto cx = corners(x);
  const auto cy = corners(y);
  if (cx.empty() || cy.empty()) {
    return insert_edge(e, cx.empty() ? Corner{x, std::nullopt} : cx.front(),
                       cy.empty() ? Corner{y, std::nullopt} : cy.front());
  }
  if (x == y) return insert_edge(e, cx.front(), cx.front());
  for (const Corner& a : cx) {
    const FaceId fa = *face_of_corner(a);
    for (const Corner& b : cy)
      if (*face_of_corner(b) == fa) return insert_edge(e, a, b);
  }
  return insert_edge(e, cx.front(), cy.front());
}

RotationSystem IncrementalEmbedding::rotation() const {
  RotationSystem rot;
  rot.rotation.resize(g_.num_vertices());
  for (VertexId v = 0; v < g_.num_vertices(); ++v) {
    auto cs = corners(v);
    if (cs.empty()) continue;
    auto& out = rot.rotation[v];
    for (const auto& c : cs) out.push_back(*c.after);
    std::rotate(out.begin(), std::min_element(out.begin(), out.end()), out.end());
  }
  return rot;
}

bool IncrementalEmbedding::matches_full_trace() const {
  const std::size_t slots = succ_.size();
  std::vector<std::uint8_t> seen(slots, 0);
  std::vector<std::uint8_t> id_used(face_rep_.size(), 0);
  std::size_t orbits = 0;
  for (std::size_t s = 0; s < slots; ++s) {
    if (!embedded_[s / 2] || seen[s]) continue;
    ++orbits;
    const FaceId id = face_[s];
    if (id >= face_rep_.size() || face_rep_[id] < 0 || id_used[id]) return false;
    id_used[id] = 1;
    Dart d = Dart::from_index(s);
    do {
      if (face_[d.index()] != id) return false;
      seen[d.index()] = 1;
      d = next_in_face(d);
    } while (d.index() != s);
  }
  return orbits == live_faces_;
}

// ------------------------------------------------------------------ builder

EmbeddingResult build_embedding(const MultiGraph& g, const PairSet& pairs, const EmbeddingOptions& options) {
  if (auto check = verify_pair_set(g, pairs); !check)
    throw EmbeddingError("build_embedding: invalid pair set (" + std::string(to_string(check.fault)) + ")");

  std::vector<std::uint8_t> in_pair(g.edge_id_bound(), 0);
  for (const auto& p : pairs) in_pair[p.first] = in_pair[p.second] = 1;

  // BFS spanning tree of the residual, scanning edges by ascending id.
  std::vector<std::vector<EdgeId>> adj(g.num_vertices());
  for (EdgeId e : g.edge_ids()) {
    if (in_pair[e] || g.is_loop(e)) continue;
    adj[g.endpoint(e, 0)].push_back(e);
    adj[g.endpoint(e, 1)].push_back(e);
  }
  std::vector<EdgeId> tree;
  std::vector<std::uint8_t> in_tree(g.edge_id_bound(), 0);
  std::vector<std::uint8_t> reached(g.num_vertices(), 0);
  std::vector<VertexId> queue{0};
  reached[0] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const VertexId v = queue[head];
    for (EdgeId e : adj[v]) {
      const VertexId w = g.opposite(e, v);
      if (reached[w]) continue;
      reached[w] = 1;
      queue.push_back(w);
      tree.push_back(e);
      in_tree[e] = 1;
    }
  }

  IncrementalEmbedding emb(g);
  emb.embed_tree(tree);
  EmbeddingResult result;
  auto verify = [&] {
    if (!options.verify_each_step) return;
    if (!emb.matches_full_trace()) throw std::logic_error("build_embedding: incremental faces diverged from re-trace");
    ++result.verified_steps;
  };
  verify();

  for (const auto& p : pairs) {
    emb.insert_adjacent_pair(p);
    verify();
  }
  result.pairs_used = pairs.size();
  result.genus_after_pairs = emb.genus();

  std::size_t last_genus = result.genus_after_pairs;
  for (EdgeId e : g.edge_ids()) {
    if (in_pair[e] || in_tree[e]) continue;
    const auto step = emb.insert_edge_auto(e);
    if (step.genus_after < last_genus) throw std::logic_error("build_embedding: genus decreased");
    last_genus = step.genus_after;
    verify();
  }

  result.rotation = emb.rotation();
  result.genus = emb.genus();
  result.faces = emb.num_faces();
  return result;
}

}  // namespace maxgenus
