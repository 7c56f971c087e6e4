#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "eulercat/rational.hpp"

namespace eulercat {

/// Dense row-major matrix over the rationals. Shapes with zero rows or
/// columns are allowed; the empty category has a 0x0 adjacency matrix.
class RatMatrix {
 public:
  RatMatrix() = default;
  /// Zero matrix.
  RatMatrix(std::size_t rows, std::size_t cols);
  /// Throws DimensionMismatch unless entries.size() == rows * cols.
  RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

  /// Throws DimensionMismatch on ragged input.
  static RatMatrix from_rows(
      std::initializer_list<std::initializer_list<Rational>> rows);
  static RatMatrix from_rows(const std::vector<std::vector<Rational>>& rows);
  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  const Rational& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  Rational& operator()(std::size_t i, std::size_t j) {
    return entries_[i * cols_ + j];
  }

  std::span<const Rational> entries() const { return entries_; }
  std::span<const Rational> row_span(std::size_t i) const {
    return std::span<const Rational>(entries_).subspan(i * cols_, cols_);
  }

  RatMatrix row(std::size_t i) const;
  RatMatrix column(std::size_t j) const;
  bool is_zero() const;

  friend bool operator==(const RatMatrix& a, const RatMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

/// Linearly independent vectors of a common height, each stored as a
/// height x 1 column.
class BasisSet {
 public:
  BasisSet() = default;
  BasisSet(std::size_t dimension, std::vector<RatMatrix> vectors);

  std::size_t dimension() const { return dimension_; }
  std::size_t size() const { return vectors_.size(); }
  bool empty() const { return vectors_.empty(); }
  const std::vector<RatMatrix>& vectors() const { return vectors_; }
  const RatMatrix& operator[](std::size_t i) const { return vectors_[i]; }

  /// dimension x size matrix whose columns are the basis vectors.
  RatMatrix as_columns() const;

 private:
  std::size_t dimension_ = 0;
  std::vector<RatMatrix> vectors_;
};

struct RrefResult {
  RatMatrix reduced;
  std::vector<std::size_t> pivots;  // ascending
};

RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b);
RatMatrix add(const RatMatrix& a, const RatMatrix& b);
RatMatrix subtract(const RatMatrix& a, const RatMatrix& b);
RatMatrix scale(const Rational& s, const RatMatrix& m);
RatMatrix transpose(const RatMatrix& m);

inline RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  return mat_mul(a, b);
}
inline RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
  return add(a, b);
}
inline RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
  return subtract(a, b);
}

RrefResult rref(const RatMatrix& m);
std::size_t rank(const RatMatrix& m);

/// Nonzero rows of rref(m), transposed to columns (the r_i^T of a row basis).
BasisSet row_space_basis(const RatMatrix& m);

/// One vector per free column of rref(m), with that free variable set to 1.
BasisSet null_space_basis(const RatMatrix& m);

/// Exact inverse by Gauss-Jordan on [m | I]. Throws DimensionMismatch for
/// non-square input and std::domain_error when m is singular.
RatMatrix inverse(const RatMatrix& m);

/// Moore-Penrose inverse of a square matrix.
///
/// With r_1..r_k a basis of Row(m) and s_1..s_{n-k} a basis of
/// im(m)^perp = Null(m^T), the matrix B = [m r_1^T .. m r_k^T s_1 .. s_{n-k}]
/// is invertible and m^+ = [r_1^T .. r_k^T 0] B^{-1}. Throws DimensionMismatch
/// for non-square input.
RatMatrix pinv(const RatMatrix& m);

RatMatrix kronecker(const RatMatrix& a, const RatMatrix& b);

/// Throws NonSquareBlock if any block is not square.
RatMatrix block_diag(std::span<const RatMatrix> blocks);

/// Vertical concatenation of column vectors. Throws WidthMismatch unless
/// every input has exactly one column.
RatMatrix stack_columns(std::span<const RatMatrix> vectors);

/// Horizontal concatenation. Throws DimensionMismatch on differing heights.
RatMatrix hconcat(std::span<const RatMatrix> blocks, std::size_t rows);

/// m x 1 all-ones column.
RatMatrix ones(std::size_t m);

/// Matrix P with P(perm[i], i) = 1, so (P^T m P)(i, j) = m(perm[i], perm[j]).
RatMatrix permutation_matrix(std::span<const std::size_t> perm);

/// Sum of all entries.
Rational entry_sum(const RatMatrix& m);

}  // namespace eulercat
