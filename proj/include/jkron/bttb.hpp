#pragma once

#include <cstddef>
#include <vector>

#include "jkron/exactmat.hpp"
#include "jkron/jordan.hpp"
#include "jkron/polyring.hpp"

namespace jkron {

/// P(J_m(lam), J_n(mu)) from the entry formula: with r = n*i_r + j_r and
/// c = n*i_c + j_c (0-based), entry (r,c) is the (i_c-i_r, j_c-j_r) Hasse
/// derivative of p at (lam, mu) when both offsets are nonnegative, else 0.
inline RationalMatrix build_block_pair(const BivariatePoly& p, const Rational& lam, std::size_t m,
                                       const Rational& mu, std::size_t n) {
  if (m == 0 || n == 0)
    throw InvalidSpec("block sizes must be positive");
  const BivariatePoly t = taylor_at(p, lam, mu);
  RationalMatrix out(m * n, m * n);
  for (std::size_t ir = 0; ir < m; ++ir)
    for (std::size_t ic = ir; ic < m; ++ic)
      for (std::size_t jr = 0; jr < n; ++jr)
        for (std::size_t jc = jr; jc < n; ++jc)
          out(n * ir + jr, n * ic + jc) = t.coeff(ic - ir, jc - jr);
  return out;
}

/// Literal sum_ij a_ij A^i (x) B^j for square A, B.
inline RationalMatrix polynomial_of_kron(const BivariatePoly& p, const RationalMatrix& a, const RationalMatrix& b) {
  if (!a.square() || !b.square())
    throw NotSquare();
  const std::size_t R = std::max<long>(p.degree_x(), 0) + 1, C = std::max<long>(p.degree_y(), 0) + 1;
  std::vector<RationalMatrix> apow{RationalMatrix::identity(a.rows())};
  std::vector<RationalMatrix> bpow{RationalMatrix::identity(b.rows())};
  for (std::size_t i = 1; i < R; ++i)
    apow.push_back(apow.back() * a);
  for (std::size_t j = 1; j < C; ++j)
    bpow.push_back(bpow.back() * b);
  RationalMatrix out(a.rows() * b.rows(), a.rows() * b.rows());
  for (std::size_t i = 0; i < R; ++i)
    for (std::size_t j = 0; j < C; ++j) {
      const Rational c = p.coeff(i, j);
      if (sgn(c) != 0)
        out = out + kron(apow[i], bpow[j]) * c;
    }
  return out;
}

/// f(A) by Horner's rule.
inline RationalMatrix evaluate_at_matrix(const UnivariatePoly& f, const RationalMatrix& a) {
  if (!a.square())
    throw NotSquare();
  const RationalMatrix id = RationalMatrix::identity(a.rows());
  RationalMatrix out(a.rows(), a.rows());
  for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it)
    out = out * a + id * *it;
  return out;
}

/// Same matrix as build_block_pair, assembled through Kronecker products.
inline RationalMatrix build_block_pair_kron(const BivariatePoly& p, const Rational& lam, std::size_t m,
                                            const Rational& mu, std::size_t n) {
  return polynomial_of_kron(p, jordan_block(lam, m), jordan_block(mu, n));
}

/// Direct sum over all block pairs (X block outer, Y block inner); permutation
/// similar to P(X, Y).
inline RationalMatrix build_full(const BivariatePoly& p, const JordanSpec& x, const JordanSpec& y) {
  std::vector<RationalMatrix> pairs;
  for (const auto& bx : x.blocks())
    for (const auto& by : y.blocks())
      pairs.push_back(build_block_pair(p, bx.eig, bx.size, by.eig, by.size));
  return direct_sum(pairs);
}

/// The literal P(X, Y) = sum a_ij X^i (x) Y^j with X, Y block diagonal.
inline RationalMatrix build_raw_kron(const BivariatePoly& p, const JordanSpec& x, const JordanSpec& y) {
  return polynomial_of_kron(p, x.matrix(), y.matrix());
}

/// Kronecker form of the Frechet derivative of f at W. A Jordan spec is its
/// own transpose up to similarity, so both arguments are W.
inline RationalMatrix frechet_kronecker_form(const UnivariatePoly& f, const JordanSpec& w) {
  return build_full(bezout_quotient(f), w, w);
}

/// sum_i f_i sum_(j<i) (W^T)^j (x) W^(i-1-j) for an explicit matrix W.
inline RationalMatrix frechet_kronecker_literal(const UnivariatePoly& f, const RationalMatrix& w) {
  if (!w.square())
    throw NotSquare();
  const std::size_t n = w.rows();
  const RationalMatrix wt = w.transpose();
  RationalMatrix out(n * n, n * n);
  const auto& c = f.coeffs();
  for (std::size_t i = 1; i < c.size(); ++i) {
    if (sgn(c[i]) == 0)
      continue;
    for (std::size_t j = 0; j < i; ++j)
      out = out + kron(matrix_power(wt, j), matrix_power(w, i - 1 - j)) * c[i];
  }
  return out;
}

} // namespace jkron
