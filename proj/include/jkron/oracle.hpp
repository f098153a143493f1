#pragma once

// Brute-force Jordan structure from ranks of matrix powers. Nothing here
// uses the closed-form theorems; it is the ground truth the predictors are
// checked against.

#include <cstddef>
#include <set>
#include <vector>

#include "jkron/bttb.hpp"
#include "jkron/exactmat.hpp"
#include "jkron/jordan.hpp"

namespace jkron {

/// Nullities nu_0 = 0, nu_1, ... of A^s, up to and including the first s
/// where the sequence stops growing.
struct WeyrData {
  std::vector<std::size_t> nullities;

  std::size_t stable_value() const { return nullities.back(); }

  /// count(s) = 2 nu_s - nu_(s-1) - nu_(s+1), as sizes in descending order.
  BlockSizes block_sizes() const {
    BlockSizes out;
    const auto nu = [&](std::size_t s) { return s < nullities.size() ? nullities[s] : nullities.back(); };
    for (std::size_t s = nullities.size(); s-- > 1;) {
      const long count = 2 * static_cast<long>(nu(s)) - static_cast<long>(nu(s - 1)) - static_cast<long>(nu(s + 1));
      if (count < 0)
        throw PropertyViolation("Weyr second difference is negative");
      out.insert(out.end(), static_cast<std::size_t>(count), s);
    }
    return out;
  }
};

/// Nullities of A^s for s = 0, 1, ... until they stabilize. Powers are built
/// incrementally on an integer rescaling of A (same kernels).
inline WeyrData weyr_nullities(const RationalMatrix& a) {
  if (!a.square())
    throw NotSquare();
  const std::size_t n = a.rows();
  Integer l = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(i, j).get_den_mpz_t());
  IntegerMatrix z(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      z(i, j) = a(i, j).get_num() * (l / a(i, j).get_den());

  WeyrData w;
  w.nullities.push_back(0);
  IntegerMatrix power = z;
  while (true) {
    const std::size_t nu = n - rank(power);
    const std::size_t prev = w.nullities.back();
    if (nu == prev)
      break;
    if (w.nullities.size() >= 2) {
      const std::size_t prev2 = w.nullities[w.nullities.size() - 2];
      if (nu - prev > prev - prev2)
        throw PropertyViolation("Weyr increments are not concave");
    }
    w.nullities.push_back(nu);
    if (nu == n)
      break;
    power = power * z;
  }
  return w;
}

/// Jordan block sizes of a nilpotent matrix.
inline BlockSizes weyr_structure(const RationalMatrix& z) {
  const WeyrData w = weyr_nullities(z);
  if (w.stable_value() != z.rows())
    throw NotNilpotent();
  return w.block_sizes();
}

/// Sizes of the Jordan blocks of A for eigenvalue e (empty if e is not one).
inline BlockSizes eigen_block_sizes(const RationalMatrix& a, const Rational& e) {
  RationalMatrix shifted = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    shifted(i, i) -= e;
  return weyr_nullities(shifted).block_sizes();
}

/// Exact Jordan structure of P(X, Y), one block pair at a time. Each pair
/// matrix is assembled from Kronecker products of Jordan-block powers.
inline JordanStructure oracle_jcf(const BivariatePoly& p, const JordanSpec& x, const JordanSpec& y) {
  JordanStructure out;
  for (const auto& bx : x.blocks())
    for (const auto& by : y.blocks()) {
      RationalMatrix z = build_block_pair_kron(p, bx.eig, bx.size, by.eig, by.size);
      const Rational e = p(bx.eig, by.eig);
      for (std::size_t i = 0; i < z.rows(); ++i)
        z(i, i) -= e;
      out.add(e, weyr_structure(z));
    }
  return out;
}

/// Oracle on an arbitrary matrix whose eigenvalues are known to lie in
/// `candidates` (e.g. the literal Kronecker-ordered P(X,Y)).
inline JordanStructure oracle_from_matrix(const RationalMatrix& a, const std::set<Rational>& candidates) {
  JordanStructure out;
  for (const auto& e : candidates)
    out.add(e, eigen_block_sizes(a, e));
  if (out.dimension() != a.rows())
    throw PropertyViolation("candidate eigenvalues do not exhaust the spectrum");
  return out;
}

inline JordanStructure oracle_jcf_raw(const BivariatePoly& p, const JordanSpec& x, const JordanSpec& y) {
  std::set<Rational> eigs;
  for (const auto& bx : x.blocks())
    for (const auto& by : y.blocks())
      eigs.insert(p(bx.eig, by.eig));
  return oracle_from_matrix(build_raw_kron(p, x, y), eigs);
}

} // namespace jkron
