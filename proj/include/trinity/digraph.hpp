#pragma once

// Directed multigraphs, asymmetric Laplacians and abelian sandpile groups.

#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "trinity/zlinalg.hpp"

namespace trinity {

struct Arc {
  int id = 0;
  std::size_t tail = 0;  // vertex index
  std::size_t head = 0;  // vertex index
};

/// Arc given by vertex labels, used when assembling a digraph from a document.
struct ArcSpec {
  int id = 0;
  std::string tail;
  std::string head;
};

class MultiDigraph {
 public:
  MultiDigraph() = default;
  /// Validates unique labels, unique arc ids and endpoint membership.
  MultiDigraph(std::vector<std::string> vertices, const std::vector<ArcSpec>& arcs);

  /// Appends a vertex; returns its index. Labels must be unique.
  std::size_t add_vertex(std::string label);
  /// Appends an arc with the next free id; returns the id.
  int add_arc(std::size_t tail, std::size_t head);
  int add_arc(std::string_view tail, std::string_view head);
  /// Adds `count` parallel arcs.
  void add_arcs(std::size_t tail, std::size_t head, int count);

  std::size_t vertex_count() const noexcept { return labels_.size(); }
  std::size_t arc_count() const noexcept { return arcs_.size(); }
  const std::vector<std::string>& vertices() const noexcept { return labels_; }
  const std::string& label(std::size_t v) const { return labels_.at(v); }
  const std::vector<Arc>& arcs() const noexcept { return arcs_; }

  /// Throws UnknownLabel.
  std::size_t vertex_index(std::string_view label) const;
  bool has_vertex(std::string_view label) const;
  /// Position of the arc with this id in `arcs()`; throws UnknownLabel.
  std::size_t arc_index(int id) const;
  const Arc& arc_by_id(int id) const { return arcs_[arc_index(id)]; }

  std::size_t out_degree(std::size_t v) const;
  std::size_t in_degree(std::size_t v) const;
  bool is_eulerian() const;
  /// Connectivity of the underlying undirected multigraph.
  bool is_connected() const;

  friend bool operator==(const MultiDigraph& a, const MultiDigraph& b) {
    if (a.labels_ != b.labels_ || a.arcs_.size() != b.arcs_.size()) return false;
    for (std::size_t i = 0; i < a.arcs_.size(); ++i)
      if (a.arcs_[i].id != b.arcs_[i].id || a.arcs_[i].tail != b.arcs_[i].tail ||
          a.arcs_[i].head != b.arcs_[i].head)
        return false;
    return true;
  }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<Arc> arcs_;
  std::unordered_map<int, std::size_t> arc_pos_;
  int next_id_ = 0;
};

/// L = diag(out-degree) - adjacency, rows/cols in vertex order.
IntMatrix laplacian(const MultiDigraph& d);
IntMatrix reduced_laplacian(const MultiDigraph& d, std::string_view removed);
IntMatrix reduced_laplacian(const MultiDigraph& d, std::size_t removed);

/// Requires a connected Eulerian digraph (NotConnected / NotEulerian).
AbelianGroup sandpile_group(const MultiDigraph& d);
/// Same, computed with an explicit removed vertex.
AbelianGroup sandpile_group(const MultiDigraph& d, std::size_t removed);

struct ConnectivityReport {
  bool connected = false;
  bool eulerian = false;
  bool has_loops = false;
  std::set<std::string> cut_vertices;
  /// Pairs of arc ids whose underlying edges jointly disconnect the graph.
  std::set<std::pair<int, int>> two_edge_cuts;
  bool prop_simple_ok = false;
};

/// Connectivity audit on the underlying multigraph (one undirected edge per arc).
ConnectivityReport audit(const MultiDigraph& d);

}  // namespace trinity
