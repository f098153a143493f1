#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "jkron/bounds.hpp"
#include "jkron/jordan.hpp"
#include "jkron/polyring.hpp"

namespace jkron {

enum class GenericCaseTag { BothNonzero, PyZero, PxZero, SizeOneEscape, Degenerate };

inline std::string_view to_string(GenericCaseTag t) {
  switch (t) {
  case GenericCaseTag::BothNonzero: return "BothNonzero";
  case GenericCaseTag::PyZero: return "PyZero";
  case GenericCaseTag::PxZero: return "PxZero";
  case GenericCaseTag::SizeOneEscape: return "SizeOneEscape";
  case GenericCaseTag::Degenerate: return "Degenerate";
  }
  return "?";
}

/// A block pair where both first derivatives vanish and m, n > 1. Carries the
/// pair and the degenerate-case bounds.
class DegenerateCase : public Error {
public:
  DegenerateCase(Rational lam, Rational mu, std::size_t m, std::size_t n, std::size_t local_deg)
      : Error("degenerate block pair (lam=" + to_string(lam) + ", mu=" + to_string(mu) + ", m=" +
              std::to_string(m) + ", n=" + std::to_string(n) + ")"),
        lam(std::move(lam)), mu(std::move(mu)), m(m), n(n), local_degree(local_deg),
        max_block_size(max_block_size_bound(m, n, local_deg)), count(block_count_bounds(m, n, local_deg)) {}

  Rational lam, mu;
  std::size_t m, n;
  std::size_t local_degree;
  std::size_t max_block_size;
  BlockCountBounds count;
};

/// Jordan sizes of the Kronecker sum J_m (x) I + I (x) J_n:
/// {m+n+1-2k : k = 1..min(m,n)}.
inline BlockSizes kronecker_sum_sizes(std::size_t m, std::size_t n) {
  BlockSizes out;
  for (std::size_t k = 1; k <= std::min(m, n); ++k)
    out.push_back(m + n + 1 - 2 * k);
  return out;
}

/// Jordan sizes of N_n^r: with n = a*r + b, r-b blocks of size a and b of
/// size a+1 (size-0 blocks dropped).
inline BlockSizes nilpotent_power_sizes(std::size_t n, std::size_t r) {
  if (n == 0 || r == 0)
    throw InvalidSpec("nilpotent_power_sizes: arguments must be positive");
  const std::size_t a = n / r, b = n % r;
  BlockSizes out(b, a + 1);
  if (a > 0)
    out.insert(out.end(), r - b, a);
  return out;
}

inline GenericCaseTag classify_values(const Rational& px, const Rational& py, std::size_t m, std::size_t n) {
  const bool x0 = sgn(px) == 0, y0 = sgn(py) == 0;
  if (!x0 && !y0)
    return GenericCaseTag::BothNonzero;
  if (x0 && y0)
    return (m == 1 || n == 1) ? GenericCaseTag::SizeOneEscape : GenericCaseTag::Degenerate;
  return y0 ? GenericCaseTag::PyZero : GenericCaseTag::PxZero;
}

inline GenericCaseTag classify(const BivariatePoly& p, const Rational& lam, const Rational& mu, std::size_t m,
                               std::size_t n) {
  if (p.is_constant())
    throw ConstantPolynomial();
  const BivariatePoly t = taylor_at(p, lam, mu);
  return classify_values(t.coeff(1, 0), t.coeff(0, 1), m, n);
}

namespace detail {

/// First k in 1..n-1 with taylor coefficient (0,k) nonzero, else n. With
/// `in_x` the roles of x and y are exchanged.
inline std::size_t first_order(const BivariatePoly& taylor, std::size_t n, bool in_x) {
  for (std::size_t k = 1; k < n; ++k)
    if (sgn(in_x ? taylor.coeff(k, 0) : taylor.coeff(0, k)) != 0)
      return k;
  return n;
}

/// The one-zero-derivative branch: `m_other` is the size on the side whose
/// first derivative survives, `n_zero` the size on the vanishing side with
/// first nonvanishing order r.
inline BlockSizes one_sided_sizes(std::size_t m_other, std::size_t n_zero, std::size_t r) {
  const std::size_t a = n_zero / r, b = n_zero % r;
  BlockSizes out;
  for (std::size_t c = 0; c < r - b; ++c)
    append(out, kronecker_sum_sizes(m_other, a));
  for (std::size_t c = 0; c < b; ++c)
    append(out, kronecker_sum_sizes(m_other, a + 1));
  sort_desc(out);
  return out;
}

} // namespace detail

/// Result of one block pair, with the branch that produced it.
struct PairPrediction {
  Rational lam, mu;
  std::size_t m = 0, n = 0;
  Rational eig;
  std::string branch;
  std::size_t order = 0; ///< r for the one-sided branches, 0 otherwise
  BlockSizes sizes;
};

inline PairPrediction predict_pair_from_taylor(const BivariatePoly& t, const Rational& lam, const Rational& mu,
                                               std::size_t m, std::size_t n, GenericCaseTag tag) {
  PairPrediction pp{lam, mu, m, n, t.coeff(0, 0), std::string(to_string(tag)), 0, {}};
  switch (tag) {
  case GenericCaseTag::BothNonzero:
    pp.sizes = kronecker_sum_sizes(m, n);
    break;
  case GenericCaseTag::PyZero:
    pp.order = detail::first_order(t, n, false);
    pp.sizes = detail::one_sided_sizes(m, n, pp.order);
    break;
  case GenericCaseTag::PxZero:
    pp.order = detail::first_order(t, m, true);
    pp.sizes = detail::one_sided_sizes(n, m, pp.order);
    break;
  case GenericCaseTag::SizeOneEscape:
    if (m == 1) {
      pp.order = detail::first_order(t, n, false);
      pp.sizes = detail::one_sided_sizes(1, n, pp.order);
    } else {
      pp.order = detail::first_order(t, m, true);
      pp.sizes = detail::one_sided_sizes(1, m, pp.order);
    }
    break;
  case GenericCaseTag::Degenerate: {
    std::size_t d = std::numeric_limits<std::size_t>::max();
    for (std::size_t i = 0; i < t.grid_rows(); ++i)
      for (std::size_t j = 0; j < t.grid_cols(); ++j)
        if ((i || j) && sgn(t.coeff(i, j)) != 0)
          d = std::min(d, i + j);
    throw DegenerateCase(lam, mu, m, n, d);
  }
  }
  return pp;
}

/// Jordan sizes of P(J_m(lam), J_n(mu)) by the generic-case theorem.
/// Throws DegenerateCase when the pair is out of its reach.
inline BlockSizes theorem_main_sizes(const BivariatePoly& p, const Rational& lam, const Rational& mu,
                                     std::size_t m, std::size_t n) {
  const GenericCaseTag tag = classify(p, lam, mu, m, n);
  return predict_pair_from_taylor(taylor_at(p, lam, mu), lam, mu, m, n, tag).sizes;
}

struct GenericPrediction {
  JordanStructure structure;
  std::vector<PairPrediction> pairs;
};

/// Whole P(X, Y) by the generic-case theorem; a constant p yields unit
/// blocks at the constant.
inline GenericPrediction predict_generic_detailed(const BivariatePoly& p, const JordanSpec& x, const JordanSpec& y) {
  GenericPrediction out;
  const bool constant = p.is_constant();
  for (const auto& bx : x.blocks())
    for (const auto& by : y.blocks()) {
      PairPrediction pp;
      if (constant) {
        pp = {bx.eig, by.eig, bx.size, by.size, p.coeff(0, 0), "Constant", 0,
              BlockSizes(bx.size * by.size, 1)};
      } else {
        const BivariatePoly t = taylor_at(p, bx.eig, by.eig);
        const GenericCaseTag tag = classify_values(t.coeff(1, 0), t.coeff(0, 1), bx.size, by.size);
        pp = predict_pair_from_taylor(t, bx.eig, by.eig, bx.size, by.size, tag);
      }
      out.structure.add(pp.eig, pp.sizes);
      out.pairs.push_back(std::move(pp));
    }
  return out;
}

inline JordanStructure predict_generic_full(const BivariatePoly& p, const JordanSpec& x, const JordanSpec& y) {
  return predict_generic_detailed(p, x, y).structure;
}

} // namespace jkron
