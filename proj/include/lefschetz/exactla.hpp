#pragma once

// Exact rational linear algebra: sparse matrices, reduced row echelon form,
// rank, kernel and fraction-free determinants. Scalars are GMP rationals.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "lefschetz/error.hpp"

namespace lefschetz {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Builds num/den in canonical form (reduced, positive denominator).
inline Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error(Errc::InvalidArgument, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

using SparseEntry = std::pair<std::size_t, Rational>;
/// Entries sorted by column, no explicit zeros.
using SparseRow = std::vector<SparseEntry>;
using DenseVector = std::vector<Rational>;

namespace detail {

// Returns head[0..pos) followed by (head[pos..] + factor * src), dropping zeros.
inline SparseRow axpy_tail(const SparseRow& head, std::size_t pos, const Rational& factor,
                           const SparseRow& src) {
  SparseRow out;
  out.reserve(head.size() + src.size());
  for (std::size_t i = 0; i < pos; ++i) out.push_back(head[i]);
  std::size_t i = pos, j = 0;
  while (i < head.size() || j < src.size()) {
    if (j == src.size() || (i < head.size() && head[i].first < src[j].first)) {
      out.push_back(head[i++]);
    } else if (i == head.size() || src[j].first < head[i].first) {
      out.emplace_back(src[j].first, factor * src[j].second);
      ++j;
    } else {
      Rational v = head[i].second + factor * src[j].second;
      if (sgn(v) != 0) out.emplace_back(head[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

inline void scale_row(SparseRow& row, const Rational& factor) {
  for (auto& e : row) e.second *= factor;
}

}  // namespace detail

/// Sparse rational matrix stored row-wise. Never holds explicit zeros.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows) {}

  static RatMatrix from_dense(const std::vector<DenseVector>& dense, std::size_t cols) {
    RatMatrix m(dense.size(), cols);
    for (std::size_t r = 0; r < dense.size(); ++r) {
      if (dense[r].size() != cols) throw Error(Errc::DimensionMismatch, "ragged dense rows");
      for (std::size_t c = 0; c < cols; ++c)
        if (sgn(dense[r][c]) != 0) m.data_[r].emplace_back(c, dense[r][c]).second.canonicalize();
    }
    return m;
  }

  /// Convenience for tests and small literals: {{1, 2}, {3, 4}}.
  static RatMatrix from_ints(std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<DenseVector> dense;
    std::size_t cols = rows.size() == 0 ? 0 : rows.begin()->size();
    for (const auto& r : rows) {
      DenseVector v;
      for (long x : r) v.emplace_back(x);
      dense.push_back(std::move(v));
    }
    return from_dense(dense, cols);
  }

  static RatMatrix identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.data_[i].emplace_back(i, Rational(1));
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  std::size_t nnz() const noexcept {
    std::size_t n = 0;
    for (const auto& r : data_) n += r.size();
    return n;
  }

  const SparseRow& row(std::size_t r) const { return data_.at(r); }

  Rational at(std::size_t r, std::size_t c) const {
    check_index(r, c);
    const auto& row = data_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const SparseEntry& e, std::size_t col) { return e.first < col; });
    if (it != row.end() && it->first == c) return it->second;
    return Rational(0);
  }

  void set(std::size_t r, std::size_t c, const Rational& v) {
    check_index(r, c);
    auto& row = data_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const SparseEntry& e, std::size_t col) { return e.first < col; });
    bool present = it != row.end() && it->first == c;
    if (sgn(v) == 0) {
      if (present) row.erase(it);
    } else if (present) {
      it->second = v;
      it->second.canonicalize();
    } else {
      it = row.insert(it, SparseEntry(c, v));
      it->second.canonicalize();
    }
  }

  /// Appends a row; entries must be sorted, in range and nonzero.
  void append_row(SparseRow row) {
    validate_row(row);
    data_.push_back(std::move(row));
    ++rows_;
  }

  void set_row(std::size_t r, SparseRow row) {
    if (r >= rows_) throw Error(Errc::DimensionMismatch, "row index out of range");
    validate_row(row);
    data_[r] = std::move(row);
  }

  RatMatrix transpose() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (const auto& [c, v] : data_[r]) t.data_[c].emplace_back(r, v);
    return t;
  }

  std::vector<DenseVector> to_dense() const {
    std::vector<DenseVector> out(rows_, DenseVector(cols_));
    for (std::size_t r = 0; r < rows_; ++r)
      for (const auto& [c, v] : data_[r]) out[r][c] = v;
    return out;
  }

  DenseVector apply(const DenseVector& x) const {
    if (x.size() != cols_) throw Error(Errc::DimensionMismatch, "vector length != cols");
    DenseVector y(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (const auto& [c, v] : data_[r]) y[r] += v * x[c];
    return y;
  }

  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols_ != b.rows_) throw Error(Errc::DimensionMismatch, "inner dimensions differ");
    RatMatrix out(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r) {
      SparseRow acc;
      for (const auto& [k, v] : a.data_[r]) acc = detail::axpy_tail(acc, 0, v, b.data_[k]);
      out.data_[r] = std::move(acc);
    }
    return out;
  }

  friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  void check_index(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw Error(Errc::DimensionMismatch, "index out of range");
  }

  // Also canonicalizes entries, which callers may have built by hand.
  void validate_row(SparseRow& row) const {
    for (std::size_t i = 0; i < row.size(); ++i) {
      row[i].second.canonicalize();
      if (row[i].first >= cols_) throw Error(Errc::DimensionMismatch, "column out of range");
      if (sgn(row[i].second) == 0) throw Error(Errc::InvalidArgument, "explicit zero entry");
      if (i > 0 && row[i - 1].first >= row[i].first)
        throw Error(Errc::InvalidArgument, "row entries not strictly sorted");
    }
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<SparseRow> data_;
};

/// Reduced row echelon form: `matrix` holds only the `rank` nonzero rows,
/// row i has a leading 1 at pivot_columns[i] and zeros in every other pivot column.
struct EchelonForm {
  RatMatrix matrix;
  std::vector<std::size_t> pivot_columns;
  std::size_t rank = 0;
};

/// Incremental sparse Gauss-Jordan elimination. Rows are kept in
/// semi-reduced form while inserting; `finish` back-substitutes.
class EchelonBuilder {
 public:
  explicit EchelonBuilder(std::size_t cols) : cols_(cols), pivot_row_(cols, npos) {}

  std::size_t cols() const noexcept { return cols_; }
  std::size_t rank() const noexcept { return rows_.size(); }

  std::size_t stored_nnz() const noexcept {
    std::size_t n = 0;
    for (const auto& r : rows_) n += r.size();
    return n;
  }

  /// Reduces `row` against the current pivots; returns true if it grew the rank.
  bool insert(SparseRow row) {
    reduce_skipping(row, npos);
    if (row.empty()) return false;
    Rational inv = 1 / row.front().second;
    if (inv != 1) detail::scale_row(row, inv);
    pivot_row_[row.front().first] = rows_.size();
    rows_.push_back(std::move(row));
    return true;
  }

  /// True if `row` lies in the current row space.
  bool contains(SparseRow row) const {
    reduce_skipping(row, npos);
    return row.empty();
  }

  const std::vector<SparseRow>& raw_rows() const noexcept { return rows_; }

  EchelonForm finish() && {
    std::vector<std::size_t> order(rows_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
      return rows_[x].front().first > rows_[y].front().first;
    });
    // Rows with larger pivots are fully reduced before they are used.
    for (std::size_t idx : order) reduce_skipping(rows_[idx], rows_[idx].front().first);

    EchelonForm out;
    out.rank = rows_.size();
    out.matrix = RatMatrix(0, cols_);
    std::reverse(order.begin(), order.end());
    for (std::size_t idx : order) {
      out.pivot_columns.push_back(rows_[idx].front().first);
      out.matrix.append_row(std::move(rows_[idx]));
    }
    return out;
  }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  void reduce_skipping(SparseRow& row, std::size_t own_pivot) const {
    std::size_t pos = 0;
    while (pos < row.size()) {
      std::size_t col = row[pos].first;
      std::size_t pr = pivot_row_[col];
      if (pr == npos || col == own_pivot) {
        ++pos;
        continue;
      }
      Rational factor = -row[pos].second;
      row = detail::axpy_tail(row, pos, factor, rows_[pr]);
    }
  }

  std::size_t cols_;
  std::vector<std::size_t> pivot_row_;
  std::vector<SparseRow> rows_;
};

namespace detail {

inline EchelonForm rref_sparse(const std::vector<SparseRow>& rows, std::size_t cols) {
  EchelonBuilder builder(cols);
  for (const auto& r : rows) builder.insert(r);
  return std::move(builder).finish();
}

/// Dense Gauss-Jordan: leftmost pivot column, smallest row index among candidates.
inline EchelonForm rref_dense(std::vector<DenseVector> a, std::size_t cols) {
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
    std::size_t p = rank;
    while (p < a.size() && sgn(a[p][c]) == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[rank], a[p]);
    Rational inv = 1 / a[rank][c];
    for (std::size_t j = c; j < cols; ++j) a[rank][j] *= inv;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == rank || sgn(a[r][c]) == 0) continue;
      Rational f = a[r][c];
      for (std::size_t j = c; j < cols; ++j)
        if (sgn(a[rank][j]) != 0) a[r][j] -= f * a[rank][j];
    }
    pivots.push_back(c);
    ++rank;
  }
  a.resize(rank);
  EchelonForm out;
  out.matrix = RatMatrix::from_dense(a, cols);
  out.pivot_columns = std::move(pivots);
  out.rank = rank;
  return out;
}

inline DenseVector densify(const SparseRow& row, std::size_t cols) {
  DenseVector v(cols);
  for (const auto& [c, x] : row) v[c] = x;
  return v;
}

}  // namespace detail

/// Reduced row echelon form. Sparse elimination, switching to dense rows
/// once the stored fill passes one half.
inline EchelonForm rref(const RatMatrix& m) {
  const std::size_t cols = m.cols();
  const std::size_t cells = m.rows() * cols;
  auto dense_all = [&](const std::vector<SparseRow>& head, std::size_t from) {
    std::vector<DenseVector> rows;
    for (const auto& r : head) rows.push_back(detail::densify(r, cols));
    for (std::size_t r = from; r < m.rows(); ++r) rows.push_back(detail::densify(m.row(r), cols));
    return detail::rref_dense(std::move(rows), cols);
  };
  if (cells > 0 && 2 * m.nnz() > cells) return dense_all({}, 0);

  EchelonBuilder builder(cols);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (builder.insert(m.row(r)) && 2 * builder.stored_nnz() > builder.rank() * cols)
      return dense_all(builder.raw_rows(), r + 1);
  }
  return std::move(builder).finish();
}

inline std::size_t rank(const RatMatrix& m) { return rref(m).rank; }

/// Basis of the right kernel {v : m v = 0}, one vector per free column.
inline std::vector<DenseVector> kernel_basis(const RatMatrix& m) {
  EchelonForm e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivot_columns) is_pivot[c] = true;
  std::vector<DenseVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    DenseVector v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < e.rank; ++i) {
      Rational x = e.matrix.at(i, f);
      if (sgn(x) != 0) v[e.pivot_columns[i]] = -x;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Determinant by Bareiss fraction-free elimination over the integers,
/// after clearing denominators row by row.
inline Rational determinant(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw Error(Errc::NotSquare, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Rational(1);

  std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
  BigInt scale = 1;
  for (std::size_t r = 0; r < n; ++r) {
    BigInt l = 1;
    for (const auto& [c, v] : m.row(r)) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    scale *= l;
    for (const auto& [c, v] : m.row(r)) a[r][c] = v.get_num() * (l / v.get_den());
  }

  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return Rational(0);
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a[k][k];
  }
  BigInt det = a[n - 1][n - 1];
  if (sign < 0) det = -det;
  return make_rational(det, scale);
}

}  // namespace lefschetz
