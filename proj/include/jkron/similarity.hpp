#pragma once

// Constructive reduction of block upper triangular Toeplitz matrices with
// upper triangular Toeplitz blocks to I (x) A0 + N^r (x) I, with explicit
// similarity matrices.
//
// Elements of the block ring are n x n upper triangular Toeplitz matrices,
// stored by their first row (a truncated power series in the shift).

#include <cstddef>
#include <string>
#include <vector>

#include "jkron/exactmat.hpp"

namespace jkron {

/// n x n upper triangular Toeplitz matrix, stored by its first row.
class UTToeplitz {
public:
  UTToeplitz() = default;
  explicit UTToeplitz(std::size_t n) : c_(n, Rational(0)) {}
  explicit UTToeplitz(std::vector<Rational> first_row) : c_(std::move(first_row)) {}
  static UTToeplitz identity(std::size_t n) {
    UTToeplitz t(n);
    if (n)
      t.c_[0] = 1;
    return t;
  }

  std::size_t size() const { return c_.size(); }
  const std::vector<Rational>& first_row() const { return c_; }
  const Rational& operator[](std::size_t i) const { return c_[i]; }
  Rational& operator[](std::size_t i) { return c_[i]; }

  bool is_zero() const {
    for (const auto& x : c_)
      if (sgn(x) != 0)
        return false;
    return true;
  }
  /// Invertible over Q iff the diagonal entry is nonzero.
  bool is_unit() const { return !c_.empty() && sgn(c_[0]) != 0; }

  friend UTToeplitz operator+(const UTToeplitz& a, const UTToeplitz& b) {
    UTToeplitz r = a;
    for (std::size_t i = 0; i < r.size(); ++i)
      r.c_[i] += b.c_[i];
    return r;
  }
  friend UTToeplitz operator-(const UTToeplitz& a, const UTToeplitz& b) {
    UTToeplitz r = a;
    for (std::size_t i = 0; i < r.size(); ++i)
      r.c_[i] -= b.c_[i];
    return r;
  }
  friend UTToeplitz operator*(const UTToeplitz& a, const UTToeplitz& b) {
    const std::size_t n = a.size();
    UTToeplitz r(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (sgn(a.c_[i]) == 0)
        continue;
      for (std::size_t j = 0; i + j < n; ++j)
        r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return r;
  }

  /// Inverse within the ring; requires is_unit().
  UTToeplitz inverse() const {
    if (!is_unit())
      throw Error("UTToeplitz::inverse: not a unit");
    const std::size_t n = size();
    UTToeplitz r(n);
    r.c_[0] = 1 / c_[0];
    for (std::size_t k = 1; k < n; ++k) {
      Rational acc = 0;
      for (std::size_t i = 1; i <= k; ++i)
        acc += c_[i] * r.c_[k - i];
      r.c_[k] = -acc * r.c_[0];
    }
    return r;
  }
  UTToeplitz pow(std::size_t e) const {
    UTToeplitz r = identity(size());
    for (std::size_t i = 0; i < e; ++i)
      r = r * *this;
    return r;
  }

  RationalMatrix matrix() const {
    const std::size_t n = size();
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j)
        m(i, j) = c_[j - i];
    return m;
  }

  friend bool operator==(const UTToeplitz&, const UTToeplitz&) = default;

private:
  std::vector<Rational> c_;
};

/// m x m block matrix with entries in the UT Toeplitz ring.
class RingBlockMatrix {
public:
  RingBlockMatrix(std::size_t m, std::size_t n) : m_(m), n_(n), b_(m * m, UTToeplitz(n)) {}

  std::size_t blocks() const { return m_; }
  std::size_t block_size() const { return n_; }
  UTToeplitz& operator()(std::size_t i, std::size_t j) { return b_[i * m_ + j]; }
  const UTToeplitz& operator()(std::size_t i, std::size_t j) const { return b_[i * m_ + j]; }

  RationalMatrix matrix() const {
    RationalMatrix out(m_ * n_, m_ * n_);
    for (std::size_t bi = 0; bi < m_; ++bi)
      for (std::size_t bj = 0; bj < m_; ++bj) {
        const auto& blk = (*this)(bi, bj);
        for (std::size_t i = 0; i < n_; ++i)
          for (std::size_t j = i; j < n_; ++j)
            out(bi * n_ + i, bj * n_ + j) = blk[j - i];
      }
    return out;
  }

private:
  std::size_t m_, n_;
  std::vector<UTToeplitz> b_;
};

/// Block upper triangular Toeplitz matrix with first block row A_0..A_(m-1).
struct BlockToeplitzUT {
  std::size_t m = 0;
  std::vector<UTToeplitz> blocks;

  std::size_t block_size() const { return blocks.empty() ? 0 : blocks.front().size(); }

  RingBlockMatrix ring_matrix() const {
    RingBlockMatrix r(m, block_size());
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i; j < m; ++j)
        r(i, j) = blocks.at(j - i);
    return r;
  }
  RationalMatrix matrix() const { return ring_matrix().matrix(); }
};

class SingularAr : public Error {
public:
  explicit SingularAr(std::size_t r)
      : Error("block A_" + std::to_string(r) + " is not invertible (zero diagonal)"), order(r) {}
  std::size_t order;
};

/// The bidiagonal reduction's hypothesis failure (A_1 singular).
class SingularA1 : public SingularAr {
public:
  SingularA1() : SingularAr(1) {}
};

class NonzeroLowOrder : public Error {
public:
  explicit NonzeroLowOrder(std::size_t i) : Error("block A_" + std::to_string(i) + " must be zero"), index(i) {}
  std::size_t index;
};

/// Z X = X Z_r with Z_r = I (x) A_0 + N^r (x) A_r, and D Z_r = W D with
/// W = I (x) A_0 + N^r (x) I. S = X D^-1 gives Z S = S W directly.
struct SimilarityResult {
  std::size_t r = 1;
  RationalMatrix z, x, target, d, w, s;

  RationalMatrix residual() const { return z * x - x * target; }
  RationalMatrix scaling_residual() const { return d * target - w * d; }
  RationalMatrix full_residual() const { return z * s - s * w; }
};

namespace detail {
inline RationalMatrix shifted_form(std::size_t m, std::size_t r, const UTToeplitz& a0, const UTToeplitz& ar) {
  RingBlockMatrix t(m, a0.size());
  for (std::size_t i = 0; i < m; ++i) {
    t(i, i) = a0;
    if (i + r < m)
      t(i, i + r) = ar;
  }
  return t.matrix();
}
} // namespace detail

/// Reduction when A_1..A_(r-1) vanish and A_r is a unit. Superdiagonals of
/// X are filled in increasing offset, rows in increasing order.
inline SimilarityResult reduce_shifted(const BlockToeplitzUT& z, std::size_t r) {
  const std::size_t m = z.m, n = z.block_size();
  if (r == 0)
    throw InvalidSpec("reduce_shifted: r must be positive");
  if (z.blocks.size() != m || m == 0)
    throw InvalidSpec("reduce_shifted: expected m blocks");
  const auto& A = z.blocks;
  for (std::size_t i = 1; i < std::min(r, m); ++i)
    if (!A[i].is_zero())
      throw NonzeroLowOrder(i);
  const UTToeplitz unit_ar = r < m ? A[r] : UTToeplitz::identity(n);
  if (r < m && !unit_ar.is_unit()) {
    if (r == 1)
      throw SingularA1();
    throw SingularAr(r);
  }

  RingBlockMatrix x(m, n);
  for (std::size_t i = 0; i < m; ++i)
    x(i, i) = UTToeplitz::identity(n);
  if (r < m) {
    const UTToeplitz ar_inv = unit_ar.inverse();
    // Unknowns of block offset s - r come from the equations of offset s.
    for (std::size_t s = r + 1; s < m; ++s)
      for (std::size_t i = 0; i + s < m; ++i) {
        const std::size_t j = i + s;
        UTToeplitz acc = A[s];
        for (std::size_t l = r + 1; l < s; ++l)
          acc = acc + A[l] * x(i + l, j);
        x(i + r, j) = x(i, j - r) - ar_inv * acc;
      }
  }

  RingBlockMatrix dmat(m, n), dinv(m, n);
  for (std::size_t i = 0; i < m; ++i) {
    dmat(i, i) = unit_ar.pow(i / r + 1);
    dinv(i, i) = dmat(i, i).inverse();
  }

  SimilarityResult res;
  res.r = r;
  res.z = z.matrix();
  res.x = x.matrix();
  res.target = detail::shifted_form(m, r, A[0], unit_ar);
  res.d = dmat.matrix();
  res.w = detail::shifted_form(m, r, A[0], UTToeplitz::identity(n));
  res.s = res.x * dinv.matrix();
  return res;
}

/// Reduction of Z to I (x) A_0 + N (x) A_1 (and then to W) for unit A_1.
inline SimilarityResult reduce_bidiagonal(const BlockToeplitzUT& z) { return reduce_shifted(z, 1); }

} // namespace jkron
