#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace maxgenus {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

inline constexpr VertexId kNoVertex = static_cast<VertexId>(-1);

/// One end of an edge. A loop has two distinct darts at the same vertex.
struct Dart {
  EdgeId edge = 0;
  std::uint8_t end = 0;

  constexpr Dart twin() const { return Dart{edge, static_cast<std::uint8_t>(end ^ 1U)}; }
  /// Dense index 2*edge + end, used to address per-dart arrays.
  constexpr std::size_t index() const { return 2 * static_cast<std::size_t>(edge) + end; }
  static constexpr Dart from_index(std::size_t i) {
    return Dart{static_cast<EdgeId>(i / 2), static_cast<std::uint8_t>(i % 2)};
  }

  friend constexpr auto operator<=>(const Dart&, const Dart&) = default;
};

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Undirected multigraph with loops and parallel edges.
///
/// Edge ids are assigned in insertion order and never reused. Deleting an
/// edge hides it from the incidence lists but keeps its endpoints, so that
/// certificates referring to ids stay checkable against the original graph.
/// Vertices are never removed.
class MultiGraph {
 public:
  MultiGraph() = default;
  explicit MultiGraph(std::size_t num_vertices);

  VertexId add_vertex(std::string label = {});
  EdgeId add_edge(VertexId u, VertexId v);

  std::size_t num_vertices() const { return incidence_.size(); }
  /// Number of live (not deleted) edges.
  std::size_t num_edges() const { return live_edges_; }
  /// One past the largest edge id ever assigned.
  std::size_t edge_id_bound() const { return ends_.size(); }

  bool has_edge(EdgeId e) const { return e < ends_.size() && alive_[e]; }
  bool is_loop(EdgeId e) const { return ends_[e][0] == ends_[e][1]; }
  VertexId endpoint(EdgeId e, unsigned end) const { return ends_[e][end]; }
  VertexId endpoint(Dart d) const { return ends_[d.edge][d.end]; }
  VertexId opposite(EdgeId e, VertexId v) const { return ends_[e][0] == v ? ends_[e][1] : ends_[e][0]; }

  /// Live darts at v; order is unspecified and changes under delete/restore.
  const std::vector<Dart>& darts(VertexId v) const { return incidence_[v]; }
  /// Degree with loops counted twice.
  std::size_t degree(VertexId v) const { return incidence_[v].size(); }

  /// Live edge ids in ascending order.
  std::vector<EdgeId> edge_ids() const;

  /// Deletes the given edges in order. Throws GraphError on an unknown or
  /// already deleted id (the graph is left unchanged in that case).
  void delete_edges(std::span<const EdgeId> ids);
  /// Undoes the most recent deletions: `ids` must be the last deleted edges,
  /// listed in the same order they were passed to delete_edges.
  void restore_edges(std::span<const EdgeId> ids);

  const std::string& label(VertexId v) const { return labels_[v]; }
  void set_label(VertexId v, std::string label) { labels_[v] = std::move(label); }

  /// Copy holding only the live edges, renumbered 0..m-1 in ascending order
  /// of their old ids. `old_ids`, when given, receives new id -> old id.
  MultiGraph compacted(std::vector<EdgeId>* old_ids = nullptr) const;

  /// Equality of vertex count, edge endpoints, live flags and per-vertex
  /// incidence multisets. Deletion history is not compared.
  friend bool operator==(const MultiGraph& a, const MultiGraph& b);

 private:
  void unlink(EdgeId e);
  void relink(EdgeId e);

  std::vector<std::vector<Dart>> incidence_;
  std::vector<std::string> labels_;
  std::vector<std::array<VertexId, 2>> ends_;
  std::vector<std::uint8_t> alive_;
  // Position of each dart inside its vertex's incidence list.
  std::vector<std::uint32_t> dart_pos_;
  std::vector<EdgeId> deletion_stack_;
  std::size_t live_edges_ = 0;
};

/// Parses the edge-list format: one edge per line as two whitespace
/// separated labels, `#` comments, blank lines ignored. Vertices are numbered
/// by first appearance.
MultiGraph parse_edge_list(std::string_view text);
std::string format_edge_list(const MultiGraph& g);

/// Number of connected components over all vertices (isolated ones count).
std::size_t count_components(const MultiGraph& g);
/// Component id per vertex, numbered from 0 in order of smallest vertex.
std::vector<std::uint32_t> component_labels(const MultiGraph& g);

bool is_connected(const MultiGraph& g);

/// m - n + c.
std::size_t cycle_rank(const MultiGraph& g);

/// True iff no two cycles of g share a vertex. Loops and 2-cycles of
/// parallel edges count as cycles. Throws GraphError if g is disconnected.
bool is_cactus(const MultiGraph& g);

/// Live non-loop edges whose removal disconnects their endpoints.
std::vector<EdgeId> bridges(const MultiGraph& g);

/// True when g has no loops and no parallel edges.
bool is_simple(const MultiGraph& g);

std::size_t degree_square_sum(const MultiGraph& g);

}  // namespace maxgenus
