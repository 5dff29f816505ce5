#pragma once

// Exact integer linear algebra: dense matrices over Z, Smith Normal Form,
// cokernels and canonical forms of finitely generated abelian groups.

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace trinity {

using Integer = mpz_class;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix diagonal(const std::vector<Integer>& diag);
  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  IntMatrix transposed() const;
  /// Copy with row `r` and column `c` removed.
  IntMatrix minor_matrix(std::size_t r, std::size_t c) const;
  IntMatrix submatrix(const std::vector<std::size_t>& rows,
                      const std::vector<std::size_t>& cols) const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += k * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& k);
  /// col[dst] += k * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& k);
  void negate_col(std::size_t c);

  std::string to_string() const;

  friend bool operator==(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

/// Exact determinant (fraction-free Bareiss elimination). Requires a square matrix.
Integer determinant(const IntMatrix& a);

/// Canonical form of a finitely generated abelian group:
/// Z^free_rank + Z/d1 + ... + Z/dk with 2 <= d1 | d2 | ... | dk.
class AbelianGroup {
 public:
  AbelianGroup() = default;
  /// Validates the invariant-factor chain; throws InvalidArgument otherwise.
  AbelianGroup(std::size_t free_rank, std::vector<Integer> invariant_factors);

  static AbelianGroup trivial() { return {}; }

  std::size_t free_rank() const noexcept { return free_rank_; }
  const std::vector<Integer>& invariant_factors() const noexcept { return factors_; }

  bool is_finite() const noexcept { return free_rank_ == 0; }
  bool is_trivial() const noexcept { return free_rank_ == 0 && factors_.empty(); }
  /// Minimal number of generators of the torsion part.
  std::size_t torsion_rank() const noexcept { return factors_.size(); }
  /// Order of the torsion subgroup.
  Integer torsion_order() const;
  AbelianGroup torsion() const { return AbelianGroup(0, factors_); }

  /// "Z^2 + Z/2", "Z/4 + Z/4", "0" for the trivial group.
  std::string to_string() const;

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
  friend auto operator<=>(const AbelianGroup& a, const AbelianGroup& b) {
    if (a.free_rank_ != b.free_rank_) return a.free_rank_ <=> b.free_rank_;
    if (a.factors_.size() != b.factors_.size()) return a.factors_.size() <=> b.factors_.size();
    for (std::size_t i = 0; i < a.factors_.size(); ++i) {
      int c = cmp(a.factors_[i], b.factors_[i]);
      if (c != 0) return c <=> 0;
    }
    return 0 <=> 0;
  }

 private:
  std::size_t free_rank_ = 0;
  std::vector<Integer> factors_;
};

struct SnfResult {
  IntMatrix S;
  IntMatrix U;
  IntMatrix V;
};

/// Smith Normal Form with unimodular transforms: U * A * V == S.
SnfResult snf(const IntMatrix& a);

/// Diagonal of the Smith Normal Form (length min(rows, cols)), transforms skipped.
std::vector<Integer> smith_diagonal(const IntMatrix& a);

/// Z^cols / (integer row span of A).
AbelianGroup cokernel(const IntMatrix& a);

/// Canonical form of the direct sum of Z/order_i. Orders of 1 are dropped.
AbelianGroup group_from_cyclic_orders(const std::vector<Integer>& orders);
AbelianGroup group_from_cyclic_orders(std::initializer_list<long> orders);

AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b);

inline bool groups_isomorphic(const AbelianGroup& g, const AbelianGroup& h) { return g == h; }

}  // namespace trinity
