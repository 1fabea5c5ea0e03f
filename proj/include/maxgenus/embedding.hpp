#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "maxgenus/graph.hpp"
#include "maxgenus/pairs.hpp"

namespace maxgenus {

class EmbeddingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Cyclic order of darts around each vertex.
struct RotationSystem {
  std::vector<std::vector<Dart>> rotation;
  friend bool operator==(const RotationSystem&, const RotationSystem&) = default;
};

/// Faces as cyclic dart sequences. A dart d is followed by the rotation
/// successor of twin(d). A graph without edges has one empty face.
struct FaceSet {
  std::vector<std::vector<Dart>> faces;
  std::size_t size() const { return faces.size(); }
};

/// Throws EmbeddingError if `rot` does not list every live dart of g
/// exactly once at its own vertex.
FaceSet trace_faces(const MultiGraph& g, const RotationSystem& rot);

/// (2 - n + m - f) / 2 for a connected g.
std::size_t genus_of(const MultiGraph& g, const RotationSystem& rot);

/// One line per vertex, `label: e.end e.end ...`, each rotation starting at
/// its smallest dart.
std::string format_rotation_system(const MultiGraph& g, const RotationSystem& rot);
/// Inverse of format_rotation_system; vertices without a line get an empty
/// rotation. Throws ParseError on malformed text. The result is not
/// validated against g, trace_faces does that.
RotationSystem parse_rotation_system(const MultiGraph& g, std::string_view text);

/// A position in a vertex's rotation: a new dart goes right after `after`.
/// `after` is empty only for a vertex that has no darts yet.
struct Corner {
  VertexId vertex = 0;
  std::optional<Dart> after;
};

struct InsertOutcome {
  bool same_face = false;
  std::size_t faces_before = 0, faces_after = 0;
  std::size_t genus_before = 0, genus_after = 0;
};

using FaceId = std::uint32_t;

/// Rotation system under edge insertion with incrementally maintained faces.
///
/// Darts live in per-vertex doubly linked cycles; every embedded dart maps to
/// a face id. Inserting an edge re-traces only the faces through its new
/// darts, which by the face-splitting / merging dichotomy are exactly the
/// faces that changed.
class IncrementalEmbedding {
 public:
  explicit IncrementalEmbedding(const MultiGraph& g);

  /// Embeds a forest with the darts at each vertex in ascending edge id order.
  /// Must be called before any insertion.
  void embed_tree(std::span<const EdgeId> tree);

  /// Splices e's end 0 after c0 and end 1 after c1 (in that order).
  InsertOutcome insert_edge(EdgeId e, const Corner& c0, const Corner& c1);

  /// Adds an adjacent pair to a one-face embedding, producing a one-face
  /// embedding of genus one higher: the first edge splits the face, the
  /// second joins the two halves through the witness vertex.
  InsertOutcome insert_adjacent_pair(const AdjacentPair& pair);

  /// Inserts e in a face shared by both endpoints when one exists, otherwise
  /// joining two faces.
  InsertOutcome insert_edge_auto(EdgeId e);

  std::size_t num_faces() const;
  std::size_t genus() const;
  std::size_t num_embedded_edges() const { return embedded_edges_; }
  bool is_embedded(EdgeId e) const { return embedded_[e] != 0; }

  FaceId face_of(Dart d) const { return face_[d.index()]; }
  /// Face a new dart inserted at this corner would border.
  std::optional<FaceId> face_of_corner(const Corner& c) const;
  /// First corner at v met while walking face f from its representative.
  std::optional<Corner> corner_in_face(VertexId v, FaceId f) const;
  /// Corners of v in rotation order.
  std::vector<Corner> corners(VertexId v) const;

  RotationSystem rotation() const;
  /// Re-traces every face from scratch and compares with the maintained ids.
  bool matches_full_trace() const;

 private:
  void splice(Dart d, const Corner& c);
  Dart next_in_face(Dart d) const { return Dart::from_index(succ_[d.twin().index()]); }
  FaceId new_face(Dart start);
  std::size_t active_vertices() const { return active_vertices_ == 0 ? 1 : active_vertices_; }
  std::size_t genus_for(std::size_t faces) const;

  const MultiGraph& g_;
  std::vector<std::uint32_t> succ_, pred_;
  std::vector<FaceId> face_;
  std::vector<std::int64_t> anchor_;  // some dart index at each vertex, -1 if none
  std::vector<std::uint8_t> embedded_;
  std::vector<std::int64_t> face_rep_;  // dart index per face id, -1 when free
  std::vector<FaceId> free_faces_;
  std::size_t live_faces_ = 0;
  std::size_t embedded_edges_ = 0;
  std::size_t active_vertices_ = 0;
};

struct EmbeddingOptions {
  /// Compare incremental faces with a full re-trace after every insertion.
  bool verify_each_step = false;
};

struct EmbeddingResult {
  RotationSystem rotation;
  std::size_t genus = 0;
  std::size_t faces = 0;
  std::size_t pairs_used = 0;
  std::size_t genus_after_pairs = 0;
  std::size_t verified_steps = 0;
};

/// Embeds a spanning tree of g minus the pair edges, inserts every pair
/// (raising the genus by one each), then inserts the remaining edges, which
/// never lowers the genus. The result has genus >= |pairs|. Throws
/// EmbeddingError if `pairs` does not pass verify_pair_set.
EmbeddingResult build_embedding(const MultiGraph& g, const PairSet& pairs, const EmbeddingOptions& options = {});

}  // namespace maxgenus
