#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "maxgenus/graph.hpp"

namespace maxgenus {

/// Fully dynamic connectivity with polylogarithmic amortized updates.
///
/// Hierarchical spanning forests: every non-loop edge carries a level in
/// [0, floor(log2 n)]. Forest i holds the tree edges of level >= i as Euler
/// tours in treaps (one node per vertex plus two arc nodes per tree edge).
/// Deleting a tree edge of level l searches levels l..0 for a replacement,
/// always scanning the smaller side and pushing the scanned edges one level
/// up, so a tree at level i never exceeds n / 2^i vertices.
///
/// Loops are accepted but never enter the forests.
class DynamicConnectivity {
 public:
  explicit DynamicConnectivity(std::size_t num_vertices);

  void insert(EdgeId e, VertexId u, VertexId v);
  void remove(EdgeId e);
  bool contains(EdgeId e) const { return e < edges_.size() && edges_[e].present; }

  bool connected(VertexId u, VertexId v) const;
  std::size_t components() const { return components_; }
  /// Vertices in the component of v.
  std::size_t component_size(VertexId v) const;

  std::size_t num_levels() const { return levels_; }
  int level(EdgeId e) const { return edges_[e].level; }
  bool is_tree_edge(EdgeId e) const { return edges_[e].tree; }

  std::uint64_t promotions() const { return promotions_; }
  std::uint64_t replacement_scans() const { return scans_; }

  /// Structural self-check for tests; returns an empty string when all
  /// invariants hold, else a description of the first violation.
  std::string check_invariants() const;

 private:
  static constexpr std::int32_t kNil = -1;
  enum : std::uint8_t { kVertexNode = 1, kTreeMark = 2, kNonTreeMark = 4 };

  struct Node {
    std::int32_t left = kNil, right = kNil, parent = kNil;
    std::uint32_t priority = 0;
    std::uint32_t size = 1;
    std::uint32_t vertices = 0;
    std::uint32_t owner = 0;  // vertex id for vertex nodes, edge id for arcs
    std::uint8_t flags = 0;
    std::uint8_t agg = 0;
  };

  struct EdgeState {
    VertexId ends[2] = {0, 0};
    int level = 0;
    bool present = false;
    bool tree = false;
    std::uint32_t slot[2] = {0, 0};                 // positions in nontree lists
    std::vector<std::array<std::int32_t, 2>> arcs;  // per level <= level
  };

  // treap primitives
  std::int32_t new_node(std::uint32_t owner, std::uint8_t flags);
  void free_node(std::int32_t x);
  void pull(std::int32_t x);
  void refresh_up(std::int32_t x);
  std::int32_t merge(std::int32_t a, std::int32_t b);
  void split(std::int32_t t, std::uint32_t k, std::int32_t& a, std::int32_t& b);
  std::int32_t root_of(std::int32_t x) const;
  std::uint32_t position(std::int32_t x) const;
  std::int32_t reroot(std::int32_t vertex_node);
  std::int32_t find_flag(std::int32_t root, std::uint8_t flag) const;
  void set_flag(std::int32_t x, std::uint8_t flag, bool on);

  std::int32_t vertex_node(std::size_t level, VertexId v) const {
    return static_cast<std::int32_t>(level * n_ + v);
  }

  // forest operations
  void link(std::size_t level, EdgeId e);
  void cut(std::size_t level, EdgeId e);
  void add_nontree(EdgeId e);
  void drop_nontree(EdgeId e);
  bool replace(VertexId u, VertexId v, int level);

  std::size_t n_;
  std::size_t levels_;
  std::vector<Node> nodes_;
  std::vector<std::int32_t> free_;
  std::vector<EdgeState> edges_;
  // nontree_[level * n + v] lists nontree edges of that level at v.
  std::vector<std::vector<EdgeId>> nontree_;
  std::size_t components_;
  std::uint64_t rng_state_ = 0x9e3779b97f4a7c15ULL;
  std::uint64_t promotions_ = 0;
  std::uint64_t scans_ = 0;
};

}  // namespace maxgenus
