#pragma once

// Partial latin squares and latin bitrades: validation, separation,
// canonical groups, embeddings into abelian groups, the bitrade <->
// triangulation correspondence and desk-scale enumeration.

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "trinity/surface.hpp"
#include "trinity/zlinalg.hpp"

namespace trinity {

/// (row, column, symbol). Labels live in three separate namespaces.
using Triple = std::array<std::string, 3>;

class PartialLatinSquare {
 public:
  PartialLatinSquare() = default;
  /// Sorts and checks the latin property; throws InvalidArgument.
  explicit PartialLatinSquare(std::vector<Triple> triples);

  const std::vector<Triple>& triples() const noexcept { return triples_; }
  std::size_t size() const noexcept { return triples_.size(); }
  bool empty() const noexcept { return triples_.empty(); }
  bool contains(const Triple& t) const;
  /// Sorted distinct labels of class k (0 rows, 1 columns, 2 symbols).
  std::vector<std::string> labels(int k) const;

  friend bool operator==(const PartialLatinSquare&, const PartialLatinSquare&) = default;

 private:
  std::vector<Triple> triples_;
};

/// Two distinct triples agree in at most one coordinate.
bool is_latin(const std::vector<Triple>& triples);

struct BitradeDiagnostics {
  bool valid = false;
  std::vector<std::string> problems;
};

/// Latin property of both halves, disjointness, equal size and the
/// unique-swap trade condition in both directions.
BitradeDiagnostics validate_bitrade(const std::vector<Triple>& w, const std::vector<Triple>& b);

class LatinBitrade {
 public:
  LatinBitrade() = default;
  /// Throws NotABitrade carrying the first diagnostic.
  LatinBitrade(std::vector<Triple> w, std::vector<Triple> b);

  const PartialLatinSquare& W() const noexcept { return w_; }
  const PartialLatinSquare& B() const noexcept { return b_; }
  std::size_t size() const noexcept { return w_.size(); }
  std::vector<std::string> labels(int k) const { return w_.labels(k); }
  std::size_t vertex_count() const;

  friend bool operator==(const LatinBitrade&, const LatinBitrade&) = default;
  friend bool operator<(const LatinBitrade& a, const LatinBitrade& b) {
    if (a.w_.triples() != b.w_.triples()) return a.w_.triples() < b.w_.triples();
    return a.b_.triples() < b.b_.triples();
  }

 private:
  PartialLatinSquare w_, b_;
};

struct SeparationReport {
  /// Cycles of the line permutation for every label, per class. Each cycle
  /// lists the W-triples of the line in the order the permutation visits them.
  std::array<std::map<std::string, std::vector<std::vector<Triple>>>, 3> cycles;
  bool separated = false;
};

SeparationReport separation(const LatinBitrade& x);
/// Splits every line whose permutation has several cycles. The cycle holding
/// the smallest W-triple keeps the label; the others get "label~2", "label~3", ...
LatinBitrade separate(const LatinBitrade& x);

/// No proper sub-bitrade.
bool connectedness(const LatinBitrade& x);

/// Genus of the surface triangulated by W and B. Throws NotSeparated /
/// NotConnected.
long bitrade_genus(const LatinBitrade& x);

struct GroupPresentation {
  /// "R:label", "C:label", "S:label" in that order, each class sorted.
  std::vector<std::string> generators;
  IntMatrix relation_matrix;
  AbelianGroup group;
};

/// Abelian group on R, C, S with relations r + c + s = 0 per triple.
GroupPresentation canonical_group(const PartialLatinSquare& p);

/// Relabels each class then permutes roles: output coordinate k takes the
/// (relabelled) input coordinate roles[k]. An empty map means identity.
/// Throws InvalidArgument for non-bijective maps.
PartialLatinSquare apply_main_class(const PartialLatinSquare& p, std::array<int, 3> roles,
                                    const std::array<std::map<std::string, std::string>, 3>& relabel = {});

/// Group element as coordinates modulo the invariant factors.
using GroupElement = std::vector<long>;

struct Embedding {
  AbelianGroup group;
  /// phi[0] rows, phi[1] columns, phi[2] symbols.
  std::array<std::map<std::string, GroupElement>, 3> phi;
};

/// phi1(r) + phi2(c) = phi3(s) on every triple, each phi injective.
bool check_embedding(const PartialLatinSquare& p, const Embedding& e);

/// Exhaustive backtracking with the first row and column sent to 0.
/// Throws InfiniteGroup for groups of positive free rank and BoundExceeded
/// beyond 2^20 elements.
std::optional<Embedding> embed_search(const PartialLatinSquare& p, const AbelianGroup& g);

// ------------------------------------------------------------ triangulation

/// White faces W, black faces B, rotations from the line cycles.
/// Throws NotConnected / NotSeparated.
Triangulation triangulation_from_bitrade(const LatinBitrade& x);

struct EmbeddingBitrade {
  Triangulation triangulation;
  /// Present when the triangulation is simple and its faces form a bitrade.
  std::optional<LatinBitrade> bitrade;
};

/// Reverse of Tutte's construction. Throws NonSpherical / NotDirectedEulerian.
EmbeddingBitrade bitrade_from_embedding(const EmbeddedDigraph& e);

// -------------------------------------------------------------- enumeration

/// Isotopy-normalized form: labels r0.., c0.., s0.. in first-use order along
/// a breadth-first walk of the W/B swap graph, minimised over start triples.
LatinBitrade normalized_form(const LatinBitrade& x);

struct EnumerationOptions {
  std::size_t threads = 1;
  /// Largest accepted max_size.
  std::size_t bound = 9;
};

struct EnumerationResult {
  /// Sorted by size, then by (W, B).
  std::vector<LatinBitrade> bitrades;
  /// Canonical group (torsion) -> number of normalized forms.
  std::map<AbelianGroup, std::size_t> group_tally;
  std::map<std::size_t, std::size_t> size_tally;
};

/// All connected separated spherical bitrades with |W| <= max_size, one per
/// normalized form. Throws BoundExceeded.
EnumerationResult enumerate_spherical_bitrades(std::size_t max_size, const EnumerationOptions& options = {});

}  // namespace trinity
