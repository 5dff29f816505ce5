#pragma once

// Rotation-system embeddings of digraphs, face tracing, face two-coloured
// triangulations and the correspondence between them (Tutte's construction
// and its reverse).

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "trinity/digraph.hpp"

namespace trinity {

struct ArcEnd {
  int arc = 0;
  bool outgoing = false;

  friend bool operator==(const ArcEnd&, const ArcEnd&) = default;
};

/// A digraph together with a cyclic order of arc-ends at every vertex.
/// Rotations are read counterclockwise.
class EmbeddedDigraph {
 public:
  EmbeddedDigraph() = default;
  /// Throws MalformedRotation unless every arc contributes exactly one
  /// outgoing end at its tail and one incoming end at its head.
  EmbeddedDigraph(MultiDigraph digraph, std::vector<std::vector<ArcEnd>> rotation);

  const MultiDigraph& digraph() const noexcept { return digraph_; }
  const std::vector<std::vector<ArcEnd>>& rotation() const noexcept { return rotation_; }
  const std::vector<ArcEnd>& rotation_at(std::size_t v) const { return rotation_.at(v); }

  /// Every rotation alternates between incoming and outgoing ends.
  bool alternates() const;

 private:
  MultiDigraph digraph_;
  std::vector<std::vector<ArcEnd>> rotation_;
};

struct FaceReport {
  /// Arc ids in traversal order.
  std::vector<std::vector<int>> faces;
  /// For each face: true if every arc is traversed tail-to-head, false if
  /// every arc is traversed head-to-tail, nullopt if mixed.
  std::vector<std::optional<bool>> orientation;
  long genus = 0;
  long euler_characteristic = 0;
  bool all_directed = false;
};

/// Traces faces by "arrive on an end, leave on the next end of the rotation".
FaceReport trace_faces(const EmbeddedDigraph& e);

/// True when the embedding is spherical with every face a directed cycle.
bool is_directed_eulerian_spherical(const EmbeddedDigraph& e);

/// Default bound on the arc count for find_spherical_rotation; overridden by
/// the TRINITY_MAX_ARCS environment variable.
std::size_t spherical_search_arc_bound();

/// Exhaustive search for a directed Eulerian spherical embedding.
/// Requires a connected Eulerian digraph; throws BoundExceeded when the arc
/// count exceeds `max_arcs` (0 = spherical_search_arc_bound()).
std::optional<EmbeddedDigraph> find_spherical_rotation(const MultiDigraph& d,
                                                      std::size_t max_arcs = 0);

// ------------------------------------------------------------ triangulations

enum class VertexClass : int { R = 0, C = 1, S = 2 };

char class_letter(VertexClass c);
VertexClass class_from_letter(char c);

struct FaceRef {
  bool black = false;
  std::size_t index = 0;

  friend bool operator==(const FaceRef&, const FaceRef&) = default;
};

/// Face two-coloured triangulation with vertex classes R, C, S. Every face
/// holds one vertex per class, stored in (R, C, S) order.
struct Triangulation {
  std::array<std::vector<std::string>, 3> labels;  // per class
  std::vector<std::array<std::size_t, 3>> white;   // per-class vertex indices
  std::vector<std::array<std::size_t, 3>> black;
  /// across[b][k]: the white face sharing the side of black face b opposite
  /// its class-k corner.
  std::vector<std::array<std::size_t, 3>> across;
  /// Counterclockwise cyclic face order around each vertex, per class.
  std::array<std::vector<std::vector<FaceRef>>, 3> rotation;

  std::size_t vertex_count() const {
    return labels[0].size() + labels[1].size() + labels[2].size();
  }
  long euler_characteristic() const {
    // V - E + F with E = 3|W| and F = 2|W|.
    return static_cast<long>(vertex_count()) - static_cast<long>(white.size());
  }
  long genus() const { return (2 - euler_characteristic()) / 2; }
  /// No repeated vertex pair between faces of the same colour.
  bool underlying_graph_simple() const;

  /// Labelled (r, c, s) triples of the white / black faces.
  std::vector<std::array<std::string, 3>> white_triples() const;
  std::vector<std::array<std::string, 3>> black_triples() const;
};

/// Tutte's digraph D_I on class I: one arc per black face, from its I-vertex
/// to the I-vertex of the white face across the opposite side.
EmbeddedDigraph tutte_digraph(const Triangulation& t, VertexClass cls);

/// Reverse of tutte_digraph. Vertices of `e` become class R; faces traversed
/// head-to-tail become class C and faces traversed tail-to-head class S.
/// For each arc a: black (tail, back(a), forward(a)), white (head, back(a), forward(a)).
/// Throws NonSpherical / NotDirectedEulerian.
Triangulation triangulation_from_embedding(const EmbeddedDigraph& e);

}  // namespace trinity
