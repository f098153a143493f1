#pragma once

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "jkron/rational.hpp"

namespace jkron {

/// Dense row-major matrix over an exact scalar type.
template <typename T>
class Matrix {
public:
  using value_type = T;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols, T(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      m(i, i) = 1;
    return m;
  }
  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t i = 0; i < m.rows_; ++i)
      for (std::size_t j = 0; j < m.cols_; ++j)
        m(i, j) = rows[i].at(j);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
  std::span<const T> row(std::size_t i) const { return {e_.data() + i * cols_, cols_}; }

  bool is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](const T& x) { return sgn(x) == 0; });
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        t(j, i) = (*this)(i, j);
    return t;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    check_same(a, b);
    Matrix r = a;
    for (std::size_t i = 0; i < r.e_.size(); ++i)
      r.e_[i] += b.e_[i];
    return r;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    check_same(a, b);
    Matrix r = a;
    for (std::size_t i = 0; i < r.e_.size(); ++i)
      r.e_[i] -= b.e_[i];
    return r;
  }
  friend Matrix operator*(const Matrix& a, const T& s) {
    Matrix r = a;
    for (auto& x : r.e_)
      x *= s;
    return r;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_)
      throw Error("matrix product: inner dimensions differ");
    Matrix r(a.rows_, b.cols_);
    T tmp;
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (sgn(aik) == 0)
          continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          if (sgn(b(k, j)) == 0)
            continue;
          tmp = aik * b(k, j);
          r(i, j) += tmp;
        }
      }
    return r;
  }
  friend bool operator==(const Matrix&, const Matrix&) = default;

private:
  static void check_same(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw Error("matrix sum: shapes differ");
  }

  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> e_;
};

using RationalMatrix = Matrix<Rational>;
using IntegerMatrix = Matrix<Integer>;

/// lam on the diagonal, 1 on the superdiagonal.
inline RationalMatrix jordan_block(const Rational& lam, std::size_t size) {
  if (size == 0)
    throw InvalidSpec("Jordan block size must be positive");
  RationalMatrix j(size, size);
  for (std::size_t i = 0; i < size; ++i) {
    j(i, i) = lam;
    if (i + 1 < size)
      j(i, i + 1) = 1;
  }
  return j;
}

/// Nilpotent Jordan block N_k.
inline RationalMatrix nilpotent_block(std::size_t size) { return jordan_block(Rational(0), size); }

template <typename T>
Matrix<T> kron(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> r(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (sgn(a(i, j)) == 0)
        continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return r;
}

template <typename T>
Matrix<T> matrix_power(const Matrix<T>& a, std::size_t e) {
  if (!a.square())
    throw NotSquare();
  Matrix<T> result = Matrix<T>::identity(a.rows());
  Matrix<T> base = a;
  while (e) {
    if (e & 1)
      result = result * base;
    e >>= 1;
    if (e)
      base = base * base;
  }
  return result;
}

template <typename T>
Matrix<T> direct_sum(std::span<const Matrix<T>> blocks) {
  std::size_t n = 0;
  for (const auto& b : blocks) {
    if (!b.square())
      throw NotSquare();
    n += b.rows();
  }
  Matrix<T> r(n, n);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j)
        r(off + i, off + j) = b(i, j);
    off += b.rows();
  }
  return r;
}

template <typename T>
Matrix<T> direct_sum(const std::vector<Matrix<T>>& blocks) {
  return direct_sum(std::span<const Matrix<T>>(blocks));
}

/// Permutation Pi with Pi^T (A (x) B) Pi = B (x) A for A m x m and B n x n:
/// column c = j*m + i of Pi is e_(i*n + j).
inline RationalMatrix commutation_permutation(std::size_t m, std::size_t n) {
  RationalMatrix pi(m * n, m * n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < m; ++i)
      pi(i * n + j, j * m + i) = 1;
  return pi;
}

// ---------------------------------------------------------------------------
// Rank
// ---------------------------------------------------------------------------

/// Bareiss fraction-free elimination over the integers. Works on a copy.
inline std::size_t rank(IntegerMatrix a) {
  const std::size_t R = a.rows(), C = a.cols();
  std::size_t r = 0;
  Integer prev = 1;
  Integer t1, t2;
  for (std::size_t c = 0; c < C && r < R; ++c) {
    std::size_t piv = R;
    for (std::size_t i = r; i < R; ++i)
      if (sgn(a(i, c)) != 0) {
        piv = i;
        break;
      }
    if (piv == R)
      continue;
    if (piv != r)
      for (std::size_t j = c; j < C; ++j)
        swap(a(piv, j), a(r, j));
    const Integer& p = a(r, c);
    for (std::size_t i = r + 1; i < R; ++i) {
      const Integer f = a(i, c);
      for (std::size_t j = c + 1; j < C; ++j) {
        t1 = p * a(i, j);
        t2 = f * a(r, j);
        t1 -= t2;
        mpz_divexact(a(i, j).get_mpz_t(), t1.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, c) = 0;
    }
    prev = p;
    ++r;
  }
  return r;
}

/// Gaussian elimination over Q. Pivot = largest |num|*den in the column,
/// ties broken by the lowest row index.
inline std::size_t rank(RationalMatrix a) {
  const std::size_t R = a.rows(), C = a.cols();
  std::size_t r = 0;
  Integer key, best;
  Rational factor, tmp;
  for (std::size_t c = 0; c < C && r < R; ++c) {
    std::size_t piv = R;
    for (std::size_t i = r; i < R; ++i) {
      if (sgn(a(i, c)) == 0)
        continue;
      key = abs(a(i, c).get_num()) * a(i, c).get_den();
      if (piv == R || key > best) {
        piv = i;
        best = key;
      }
    }
    if (piv == R)
      continue;
    if (piv != r)
      for (std::size_t j = c; j < C; ++j)
        swap(a(piv, j), a(r, j));
    for (std::size_t i = r + 1; i < R; ++i) {
      if (sgn(a(i, c)) == 0)
        continue;
      factor = a(i, c) / a(r, c);
      for (std::size_t j = c + 1; j < C; ++j) {
        if (sgn(a(r, j)) == 0)
          continue;
        tmp = factor * a(r, j);
        a(i, j) -= tmp;
      }
      a(i, c) = 0;
    }
    ++r;
  }
  return r;
}

/// Rows scaled by their denominators' lcm: same rank and kernel as `a`.
inline IntegerMatrix clear_denominators(const RationalMatrix& a) {
  IntegerMatrix out(a.rows(), a.cols());
  Integer l;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    l = 1;
    for (std::size_t j = 0; j < a.cols(); ++j)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < a.cols(); ++j)
      out(i, j) = a(i, j).get_num() * (l / a(i, j).get_den());
  }
  return out;
}

/// Rank of a rational matrix through the integer Bareiss path.
inline std::size_t rank_fraction_free(const RationalMatrix& a) { return rank(clear_denominators(a)); }

template <typename T>
std::size_t nullity(const Matrix<T>& a) {
  return a.cols() - rank(a);
}

inline IntegerMatrix to_integer(const RationalMatrix& a) {
  IntegerMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).get_den() != 1)
        throw Error("to_integer: non-integral entry");
      out(i, j) = a(i, j).get_num();
    }
  return out;
}

inline RationalMatrix to_rational(const IntegerMatrix& a) {
  RationalMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      out(i, j) = Rational(a(i, j));
  return out;
}

/// Debug dump: one row per line, entries space-separated as num/den.
template <typename T>
std::string dump(const Matrix<T>& a) {
  std::ostringstream os;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j)
        os << ' ';
      if constexpr (std::is_same_v<T, Rational>)
        os << a(i, j).get_num().get_str() << '/' << a(i, j).get_den().get_str();
      else
        os << a(i, j).get_str() << "/1";
    }
    os << '\n';
  }
  return os.str();
}

} // namespace jkron
