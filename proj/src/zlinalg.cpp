#include "trinity/zlinalg.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "trinity/error.hpp"

namespace trinity {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::UnknownLabel: return "UnknownLabel";
    case ErrorKind::NotEulerian: return "NotEulerian";
    case ErrorKind::NotConnected: return "NotConnected";
    case ErrorKind::MalformedRotation: return "MalformedRotation";
    case ErrorKind::BoundExceeded: return "BoundExceeded";
    case ErrorKind::NotABitrade: return "NotABitrade";
    case ErrorKind::NotSeparated: return "NotSeparated";
    case ErrorKind::NonSpherical: return "NonSpherical";
    case ErrorKind::NotDirectedEulerian: return "NotDirectedEulerian";
    case ErrorKind::InfiniteGroup: return "InfiniteGroup";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

// ---------------------------------------------------------------- IntMatrix

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Integer(0)) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw Error(ErrorKind::InvalidArgument, "ragged matrix literal");
    for (long v : row) entries_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::diagonal(const std::vector<Integer>& diag) {
  IntMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw Error(ErrorKind::InvalidArgument, "ragged rows");
    for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::minor_matrix(std::size_t r, std::size_t c) const {
  IntMatrix m(rows_ - 1, cols_ - 1);
  for (std::size_t i = 0, mi = 0; i < rows_; ++i) {
    if (i == r) continue;
    for (std::size_t j = 0, mj = 0; j < cols_; ++j) {
      if (j == c) continue;
      m(mi, mj++) = (*this)(i, j);
    }
    ++mi;
  }
  return m;
}

IntMatrix IntMatrix::submatrix(const std::vector<std::size_t>& rows,
                               const std::vector<std::size_t>& cols) const {
  IntMatrix m(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) m(i, j) = (*this)(rows[i], cols[j]);
  return m;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& k) {
  if (k == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) {
    const Integer& s = (*this)(src, j);
    if (s != 0) (*this)(dst, j) += k * s;
  }
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& k) {
  if (k == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) {
    const Integer& s = (*this)(i, src);
    if (s != 0) (*this)(i, dst) += k * s;
  }
}

void IntMatrix::negate_col(std::size_t c) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, c) = -(*this)(i, c);
}

std::string IntMatrix::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    out << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) out << (j ? ", " : "") << (*this)(i, j).get_str();
    out << ']';
  }
  out << ']';
  return out.str();
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorKind::InvalidArgument, "dimension mismatch in product");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

Integer determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw Error(ErrorKind::InvalidArgument, "determinant of non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = v;
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

// ------------------------------------------------------------- AbelianGroup

AbelianGroup::AbelianGroup(std::size_t free_rank, std::vector<Integer> invariant_factors)
    : free_rank_(free_rank), factors_(std::move(invariant_factors)) {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i] < 2)
      throw Error(ErrorKind::InvalidArgument, "invariant factor below 2: " + factors_[i].get_str());
    if (i > 0 && !mpz_divisible_p(factors_[i].get_mpz_t(), factors_[i - 1].get_mpz_t()))
      throw Error(ErrorKind::InvalidArgument, "invariant factors do not form a divisibility chain");
  }
}

Integer AbelianGroup::torsion_order() const {
  Integer n = 1;
  for (const auto& d : factors_) n *= d;
  return n;
}

std::string AbelianGroup::to_string() const {
  if (is_trivial()) return "0";
  std::string s;
  if (free_rank_ == 1) s = "Z";
  else if (free_rank_ > 1) s = "Z^" + std::to_string(free_rank_);
  for (const auto& d : factors_) {
    if (!s.empty()) s += " + ";
    s += "Z/" + d.get_str();
  }
  return s;
}

// ---------------------------------------------------------------------- SNF

namespace {

int cmpabs(const Integer& a, const Integer& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

// Smallest-magnitude pivot elimination. Transforms are tracked only when
// `u`/`v` are non-null.
void smith_reduce(IntMatrix& s, IntMatrix* u, IntMatrix* v) {
  const std::size_t rows = s.rows();
  const std::size_t cols = s.cols();
  const std::size_t n = std::min(rows, cols);

  auto swap_rows = [&](std::size_t a, std::size_t b) {
    s.swap_rows(a, b);
    if (u) u->swap_rows(a, b);
  };
  auto swap_cols = [&](std::size_t a, std::size_t b) {
    s.swap_cols(a, b);
    if (v) v->swap_cols(a, b);
  };
  auto add_row = [&](std::size_t dst, std::size_t src, const Integer& k) {
    s.add_row_multiple(dst, src, k);
    if (u) u->add_row_multiple(dst, src, k);
  };
  auto add_col = [&](std::size_t dst, std::size_t src, const Integer& k) {
    s.add_col_multiple(dst, src, k);
    if (v) v->add_col_multiple(dst, src, k);
  };

  Integer q;
  for (std::size_t t = 0; t < n; ++t) {
    // Global smallest nonzero entry of the trailing block becomes the pivot.
    std::size_t pi = rows, pj = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j) {
        const Integer& x = s(i, j);
        if (x != 0 && (pi == rows || cmpabs(x, s(pi, pj)) < 0)) {
          pi = i;
          pj = j;
        }
      }
    if (pi == rows) break;
    swap_rows(t, pi);
    swap_cols(t, pj);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (s(i, t) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), s(i, t).get_mpz_t(), s(t, t).get_mpz_t());
        add_row(i, t, -q);
        if (s(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (s(t, j) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), s(t, j).get_mpz_t(), s(t, t).get_mpz_t());
        add_col(j, t, -q);
        if (s(t, j) != 0) clean = false;
      }
      if (!clean) {
        // A remainder is now smaller than the pivot; promote the smallest one.
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < rows; ++i)
          if (s(i, t) != 0 && cmpabs(s(i, t), s(bi, bj)) < 0) bi = i, bj = t;
        for (std::size_t j = t + 1; j < cols; ++j)
          if (s(t, j) != 0 && cmpabs(s(t, j), s(bi, bj)) < 0) bi = t, bj = j;
        swap_rows(t, bi);
        swap_cols(t, bj);
        continue;
      }
      // Pivot must divide the whole trailing block.
      std::size_t bad_row = rows;
      for (std::size_t i = t + 1; i < rows && bad_row == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!mpz_divisible_p(s(i, j).get_mpz_t(), s(t, t).get_mpz_t())) {
            bad_row = i;
            break;
          }
      if (bad_row == rows) break;
      add_row(t, bad_row, Integer(1));
    }
    if (s(t, t) < 0) {
      s.negate_col(t);
      if (v) v->negate_col(t);
    }
  }
}

}  // namespace

SnfResult snf(const IntMatrix& a) {
  SnfResult r{a, IntMatrix::identity(a.rows()), IntMatrix::identity(a.cols())};
  smith_reduce(r.S, &r.U, &r.V);
  return r;
}

std::vector<Integer> smith_diagonal(const IntMatrix& a) {
  IntMatrix s = a;
  smith_reduce(s, nullptr, nullptr);
  std::vector<Integer> diag;
  const std::size_t n = std::min(s.rows(), s.cols());
  diag.reserve(n);
  for (std::size_t i = 0; i < n; ++i) diag.push_back(s(i, i));
  return diag;
}

AbelianGroup cokernel(const IntMatrix& a) {
  std::size_t rank = 0;
  std::vector<Integer> factors;
  for (auto& d : smith_diagonal(a)) {
    if (d == 0) continue;
    ++rank;
    if (d > 1) factors.push_back(std::move(d));
  }
  return AbelianGroup(a.cols() - rank, std::move(factors));
}

AbelianGroup group_from_cyclic_orders(const std::vector<Integer>& orders) {
  std::vector<Integer> d;
  for (const auto& o : orders) {
    if (o <= 0) throw Error(ErrorKind::InvalidArgument, "cyclic order must be positive: " + o.get_str());
    if (o > 1) d.push_back(o);
  }
  // Pairwise (gcd, lcm) replacement settles into a divisibility chain.
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      Integer g = gcd(d[i], d[j]);
      Integer l = d[i] / g * d[j];
      d[i] = g;
      d[j] = l;
    }
  std::erase_if(d, [](const Integer& x) { return x == 1; });
  return AbelianGroup(0, std::move(d));
}

AbelianGroup group_from_cyclic_orders(std::initializer_list<long> orders) {
  std::vector<Integer> v;
  for (long o : orders) v.emplace_back(o);
  return group_from_cyclic_orders(v);
}

AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b) {
  std::vector<Integer> orders = a.invariant_factors();
  orders.insert(orders.end(), b.invariant_factors().begin(), b.invariant_factors().end());
  AbelianGroup t = group_from_cyclic_orders(orders);
  return AbelianGroup(a.free_rank() + b.free_rank(), t.invariant_factors());
}

}  // namespace trinity
