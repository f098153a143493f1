#pragma once

// Jordan structure of the formal Frechet derivative sum_i f_i sum_j X^j (x)
// Y^(i-j), block pair by block pair. Distinct eigenvalues reduce to a
// Euclidean division; equal eigenvalues reduce to ranks of the R_k.

#include <cstddef>
#include <string>
#include <vector>

#include "jkron/jordan.hpp"
#include "jkron/polyring.hpp"
#include "jkron/predict_generic.hpp"
#include "jkron/toeplitz.hpp"

namespace jkron {

/// f(w) - w (f(lam) - f(mu)) / (lam - mu).
inline UnivariatePoly phi_distinct(const UnivariatePoly& f, const Rational& lam, const Rational& mu) {
  if (lam == mu)
    throw EqualEigenvalues();
  const Rational slope = (f(lam) - f(mu)) / (lam - mu);
  return f - UnivariatePoly::monomial(slope, 1);
}

/// f(w) - w f'(lam).
inline UnivariatePoly phi_equal(const UnivariatePoly& f, const Rational& lam) {
  return f - UnivariatePoly::monomial(univariate_hasse_eval(f, 1, lam), 1);
}

/// Least i >= 1, i <= cap, with the i-th Hasse derivative of g nonzero at
/// lam; infinite if there is none. Orders above deg g vanish identically, so
/// cap >= deg g gives an exact answer.
inline Multiplicity first_nonvanishing_order(const UnivariatePoly& g, const Rational& lam, std::size_t cap) {
  const std::size_t top = std::min<std::size_t>(cap, std::max<long>(g.degree(), 0));
  for (std::size_t i = 1; i <= top; ++i)
    if (sgn(univariate_hasse_eval(g, i, lam)) != 0)
      return Multiplicity(i);
  return Multiplicity::infinite();
}

/// Jordan sizes of a polynomial of J_size whose first nonzero derivative has
/// the given order: size = a*order + q gives q parts a+1 and order-q parts a;
/// order >= size gives size unit parts.
inline BlockSizes euclid_partition(std::size_t size, Multiplicity order) {
  if (order.at_least(size))
    return BlockSizes(size, 1);
  const std::size_t k = order.value();
  const std::size_t a = size / k, q = size % k;
  BlockSizes out(q, a + 1);
  out.insert(out.end(), k - q, a);
  return out;
}

/// Per-pair record for reports.
struct FrechetPair {
  Rational lam, mu;
  std::size_t m = 0, n = 0;
  std::string branch; ///< "distinct", "equal" or "linear"
  Rational eig;
  BlockSizes sizes;
  // distinct eigenvalues
  Multiplicity k, h;
  BlockSizes s_parts, t_parts;
  // equal eigenvalues (after the m <= n swap)
  Multiplicity d;
  std::vector<std::size_t> nullities; ///< N_0, N_1, ... up to the first mn
  struct RankEntry {
    std::size_t ell, k, rank, max_rank;
  };
  std::vector<RankEntry> ranks;
};

inline FrechetPair distinct_ev_pair(const UnivariatePoly& f, const Rational& lam, std::size_t m, const Rational& mu,
                                    std::size_t n) {
  FrechetPair fp;
  fp.lam = lam;
  fp.mu = mu;
  fp.m = m;
  fp.n = n;
  fp.eig = (f(lam) - f(mu)) / (lam - mu);
  const UnivariatePoly phi = phi_distinct(f, lam, mu);
  const std::size_t cap = std::max<long>(f.degree(), 0);
  fp.k = first_nonvanishing_order(phi, lam, cap);
  fp.h = first_nonvanishing_order(phi, mu, cap);
  fp.branch = phi.degree() <= 0 ? "linear" : "distinct";
  fp.s_parts = euclid_partition(m, fp.k);
  fp.t_parts = euclid_partition(n, fp.h);
  for (auto s : fp.s_parts)
    for (auto t : fp.t_parts)
      append(fp.sizes, kronecker_sum_sizes(s, t));
  sort_desc(fp.sizes);
  return fp;
}

/// Eigenvalue and Jordan sizes of the pair (J_m(lam), J_n(mu)), lam != mu.
inline std::pair<Rational, BlockSizes> distinct_ev_blocks(const UnivariatePoly& f, const Rational& lam, std::size_t m,
                                                          const Rational& mu, std::size_t n) {
  auto fp = distinct_ev_pair(f, lam, m, mu, n);
  return {fp.eig, fp.sizes};
}

inline FrechetPair equal_ev_pair(const UnivariatePoly& f, const Rational& lam, std::size_t m, std::size_t n) {
  FrechetPair fp;
  fp.lam = fp.mu = lam;
  if (m > n)
    std::swap(m, n);
  fp.m = m;
  fp.n = n;
  fp.branch = "equal";
  fp.eig = univariate_hasse_eval(f, 1, lam);
  fp.d = root_multiplicity(phi_equal(f, lam).derivative(), lam);
  const std::size_t mn = m * n, top = m + n - 1;
  if (fp.d.at_least(top)) {
    if (fp.d.is_infinite())
      fp.branch = "linear";
    fp.nullities = {0, mn};
    fp.sizes = BlockSizes(mn, 1);
    return fp;
  }
  const std::size_t d = fp.d.value();
  fp.nullities.push_back(0);
  for (std::size_t s = 1; s * d < top; ++s) {
    std::size_t rank_sum = 0;
    for (std::size_t k = d * s + 1; k <= top; ++k) {
      const ToeplitzSpec spec{m, n, d, s, k};
      const std::size_t r = rank(build_R(spec));
      fp.ranks.push_back({s, k, r, max_rank(spec)});
      rank_sum += r;
    }
    fp.nullities.push_back(mn - rank_sum);
  }
  fp.nullities.push_back(mn);
  const auto N = [&](std::size_t s) { return s < fp.nullities.size() ? fp.nullities[s] : mn; };
  for (std::size_t s = fp.nullities.size() - 1; s >= 1; --s) {
    const long count = 2 * static_cast<long>(N(s)) - static_cast<long>(N(s - 1)) - static_cast<long>(N(s + 1));
    if (count < 0)
      throw PropertyViolation("negative Jordan block count from R_k ranks");
    fp.sizes.insert(fp.sizes.end(), static_cast<std::size_t>(count), s);
  }
  return fp;
}

/// Eigenvalue f'(lam) and Jordan sizes of the pair (J_m(lam), J_n(lam)).
inline std::pair<Rational, BlockSizes> equal_ev_blocks(const UnivariatePoly& f, const Rational& lam, std::size_t m,
                                                       std::size_t n) {
  auto fp = equal_ev_pair(f, lam, m, n);
  return {fp.eig, fp.sizes};
}

struct FrechetPrediction {
  JordanStructure structure;
  std::vector<FrechetPair> pairs;
};

inline FrechetPrediction frechet_detailed(const UnivariatePoly& f, const JordanSpec& x, const JordanSpec& y) {
  FrechetPrediction out;
  for (const auto& bx : x.blocks())
    for (const auto& by : y.blocks()) {
      FrechetPair fp = bx.eig == by.eig ? equal_ev_pair(f, bx.eig, bx.size, by.size)
                                        : distinct_ev_pair(f, bx.eig, bx.size, by.eig, by.size);
      out.structure.add(fp.eig, fp.sizes);
      out.pairs.push_back(std::move(fp));
    }
  return out;
}

inline JordanStructure frechet_jcf(const UnivariatePoly& f, const JordanSpec& x, const JordanSpec& y) {
  return frechet_detailed(f, x, y).structure;
}

} // namespace jkron
