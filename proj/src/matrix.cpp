#include "eulercat/matrix.hpp"

#include <stdexcept>
#include <utility>

#include "eulercat/errors.hpp"

namespace eulercat {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  const auto slash = s.find('/');
  auto valid_int = [](const std::string& part) {
    std::size_t i = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i) {
      if (part[i] < '0' || part[i] > '9') return false;
    }
    return true;
  };
  const std::string num = s.substr(0, slash);
  const std::string den =
      slash == std::string::npos ? std::string("1") : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den)) {
    throw ParseError("not a rational number: \"" + s + "\"");
  }
  mpz_class n(num[0] == '+' ? num.substr(1) : num, 10);
  mpz_class d(den[0] == '+' ? den.substr(1) : den, 10);
  if (d == 0) throw ParseError("zero denominator in \"" + s + "\"");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

// ---------------------------------------------------------------------------

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols,
                     std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw DimensionMismatch("entry count " + std::to_string(entries_.size()) +
                            " does not match shape " + std::to_string(rows_) +
                            "x" + std::to_string(cols_));
  }
}

RatMatrix RatMatrix::from_rows(
    std::initializer_list<std::initializer_list<Rational>> rows) {
  std::vector<std::vector<Rational>> v;
  for (const auto& r : rows) v.emplace_back(r);
  return from_rows(v);
}

RatMatrix RatMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  std::vector<Rational> entries;
  entries.reserve(rows.size() * cols);
  for (const auto& r : rows) {
    if (r.size() != cols) throw DimensionMismatch("ragged rows");
    entries.insert(entries.end(), r.begin(), r.end());
  }
  return RatMatrix(rows.size(), cols, std::move(entries));
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::row(std::size_t i) const {
  auto r = row_span(i);
  return RatMatrix(1, cols_, std::vector<Rational>(r.begin(), r.end()));
}

RatMatrix RatMatrix::column(std::size_t j) const {
  RatMatrix c(rows_, 1);
  for (std::size_t i = 0; i < rows_; ++i) c(i, 0) = (*this)(i, j);
  return c;
}

bool RatMatrix::is_zero() const {
  for (const auto& e : entries_) {
    if (sgn(e) != 0) return false;
  }
  return true;
}

BasisSet::BasisSet(std::size_t dimension, std::vector<RatMatrix> vectors)
    : dimension_(dimension), vectors_(std::move(vectors)) {
  for (const auto& v : vectors_) {
    if (v.rows() != dimension_ || v.cols() != 1) {
      throw DimensionMismatch("basis vector is not a " +
                              std::to_string(dimension_) + "x1 column");
    }
  }
}

RatMatrix BasisSet::as_columns() const { return hconcat(vectors_, dimension_); }

// ---------------------------------------------------------------------------

RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionMismatch("cannot multiply " + std::to_string(a.rows()) +
                            "x" + std::to_string(a.cols()) + " by " +
                            std::to_string(b.rows()) + "x" +
                            std::to_string(b.cols()));
  }
  RatMatrix out(a.rows(), b.cols());
  Rational term;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (sgn(b(k, j)) == 0) continue;
        term = aik * b(k, j);
        out(i, j) += term;
      }
    }
  }
  return out;
}

RatMatrix add(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch("cannot add matrices of different shapes");
  }
  RatMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) += b(i, j);
  return out;
}

RatMatrix subtract(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch("cannot subtract matrices of different shapes");
  }
  RatMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) -= b(i, j);
  return out;
}

RatMatrix scale(const Rational& s, const RatMatrix& m) {
  RatMatrix out = m;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) *= s;
  return out;
}

RatMatrix transpose(const RatMatrix& m) {
  RatMatrix out(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(j, i) = m(i, j);
  return out;
}

namespace {

// r_target -= factor * r_source, restricted to columns [from, cols).
void eliminate_row(RatMatrix& m, std::size_t target, std::size_t source,
                   const Rational& factor, std::size_t from) {
  Rational term;
  for (std::size_t j = from; j < m.cols(); ++j) {
    if (sgn(m(source, j)) == 0) continue;
    term = factor * m(source, j);
    m(target, j) -= term;
  }
}

void swap_rows(RatMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) swap(m(a, j), m(b, j));
}

}  // namespace

RrefResult rref(const RatMatrix& input) {
  RatMatrix m = input;
  std::vector<std::size_t> pivots;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
    std::size_t found = pivot_row;
    while (found < m.rows() && sgn(m(found, col)) == 0) ++found;
    if (found == m.rows()) continue;
    swap_rows(m, pivot_row, found);

    const Rational inv = 1 / m(pivot_row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(pivot_row, j) *= inv;

    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == pivot_row || sgn(m(i, col)) == 0) continue;
      const Rational factor = m(i, col);
      eliminate_row(m, i, pivot_row, factor, col);
    }
    pivots.push_back(col);
    ++pivot_row;
  }
  return {std::move(m), std::move(pivots)};
}

std::size_t rank(const RatMatrix& m) { return rref(m).pivots.size(); }

BasisSet row_space_basis(const RatMatrix& m) {
  const RrefResult r = rref(m);
  std::vector<RatMatrix> vectors;
  vectors.reserve(r.pivots.size());
  for (std::size_t i = 0; i < r.pivots.size(); ++i) {
    vectors.push_back(transpose(r.reduced.row(i)));
  }
  return BasisSet(m.cols(), std::move(vectors));
}

BasisSet null_space_basis(const RatMatrix& m) {
  const RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : r.pivots) is_pivot[p] = true;

  std::vector<RatMatrix> vectors;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RatMatrix x(m.cols(), 1);
    x(free, 0) = 1;
    for (std::size_t i = 0; i < r.pivots.size(); ++i) {
      x(r.pivots[i], 0) = -r.reduced(i, free);
    }
    vectors.push_back(std::move(x));
  }
  return BasisSet(m.cols(), std::move(vectors));
}

RatMatrix inverse(const RatMatrix& m) {
  if (!m.is_square()) throw DimensionMismatch("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t found = col;
    while (found < n && sgn(aug(found, col)) == 0) ++found;
    if (found == n) throw std::domain_error("matrix is singular");
    swap_rows(aug, col, found);
    const Rational inv = 1 / aug(col, col);
    for (std::size_t j = col; j < 2 * n; ++j) aug(col, j) *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || sgn(aug(i, col)) == 0) continue;
      const Rational factor = aug(i, col);
      eliminate_row(aug, i, col, factor, col);
    }
  }
  RatMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
  return out;
}

RatMatrix pinv(const RatMatrix& m) {
  if (!m.is_square()) {
    throw DimensionMismatch("pinv expects a square matrix, got " +
                            std::to_string(m.rows()) + "x" +
                            std::to_string(m.cols()));
  }
  const std::size_t n = m.rows();
  if (n == 0) return RatMatrix();

  const BasisSet row_basis = row_space_basis(m);
  const BasisSet image_complement = null_space_basis(transpose(m));
  const std::size_t k = row_basis.size();
  if (k + image_complement.size() != n) {
    throw std::logic_error("rank and co-rank do not add up");
  }

  // A = [r_1^T .. r_k^T 0],  B = [m r_1^T .. m r_k^T s_1 .. s_{n-k}]
  RatMatrix a(n, n);
  RatMatrix b(n, n);
  for (std::size_t c = 0; c < k; ++c) {
    const RatMatrix& r = row_basis[c];
    const RatMatrix image = mat_mul(m, r);
    for (std::size_t i = 0; i < n; ++i) {
      a(i, c) = r(i, 0);
      b(i, c) = image(i, 0);
    }
  }
  for (std::size_t c = 0; c < image_complement.size(); ++c) {
    const RatMatrix& s = image_complement[c];
    for (std::size_t i = 0; i < n; ++i) b(i, k + c) = s(i, 0);
  }

  RatMatrix b_inverse;
  try {
    b_inverse = inverse(b);
  } catch (const std::domain_error&) {
    throw std::logic_error(
        "pinv: [M r^T | s] came out singular; basis extraction is broken");
  }
  return mat_mul(a, b_inverse);
}

RatMatrix kronecker(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Rational& aij = a(i, j);
      if (sgn(aij) == 0) continue;
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q)
          out(i * b.rows() + p, j * b.cols() + q) = aij * b(p, q);
    }
  }
  return out;
}

RatMatrix block_diag(std::span<const RatMatrix> blocks) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (!blocks[i].is_square()) {
      throw NonSquareBlock("block " + std::to_string(i) + " is " +
                           std::to_string(blocks[i].rows()) + "x" +
                           std::to_string(blocks[i].cols()));
    }
    n += blocks[i].rows();
  }
  RatMatrix out(n, n);
  std::size_t offset = 0;
  for (const auto& blk : blocks) {
    for (std::size_t i = 0; i < blk.rows(); ++i)
      for (std::size_t j = 0; j < blk.cols(); ++j)
        out(offset + i, offset + j) = blk(i, j);
    offset += blk.rows();
  }
  return out;
}

RatMatrix stack_columns(std::span<const RatMatrix> vectors) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].cols() != 1) {
      throw WidthMismatch("entry " + std::to_string(i) + " has " +
                          std::to_string(vectors[i].cols()) +
                          " columns, expected 1");
    }
    n += vectors[i].rows();
  }
  std::vector<Rational> entries;
  entries.reserve(n);
  for (const auto& v : vectors) {
    entries.insert(entries.end(), v.entries().begin(), v.entries().end());
  }
  return RatMatrix(n, 1, std::move(entries));
}

RatMatrix hconcat(std::span<const RatMatrix> blocks, std::size_t rows) {
  std::size_t cols = 0;
  for (const auto& blk : blocks) {
    if (blk.rows() != rows) {
      throw DimensionMismatch("hconcat: block height " +
                              std::to_string(blk.rows()) + " != " +
                              std::to_string(rows));
    }
    cols += blk.cols();
  }
  RatMatrix out(rows, cols);
  std::size_t offset = 0;
  for (const auto& blk : blocks) {
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < blk.cols(); ++j)
        out(i, offset + j) = blk(i, j);
    offset += blk.cols();
  }
  return out;
}

RatMatrix ones(std::size_t m) {
  return RatMatrix(m, 1, std::vector<Rational>(m, Rational(1)));
}

RatMatrix permutation_matrix(std::span<const std::size_t> perm) {
  RatMatrix p(perm.size(), perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (perm[i] >= perm.size()) {
      throw DimensionMismatch("permutation index out of range");
    }
    p(perm[i], i) = 1;
  }
  return p;
}

Rational entry_sum(const RatMatrix& m) {
  Rational s = 0;
  for (const auto& e : m.entries()) s += e;
  return s;
}

}  // namespace eulercat
