#pragma once

// Integer banded Toeplitz matrices R_k whose ranks give the nullities of
// powers of H_d(N_m, N_n), plus the rank-deficiency scanner.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "jkron/bounds.hpp"
#include "jkron/exactmat.hpp"

namespace jkron {

/// (m, n, d, ell, k) with m <= n and d*ell + 1 <= k <= m+n-1.
struct ToeplitzSpec {
  std::size_t m = 1, n = 1, d = 1, ell = 1, k = 1;

  std::size_t band() const { return ell * d; }
  bool valid() const {
    return m >= 1 && m <= n && d >= 1 && ell >= 1 && band() + 1 <= k && k + 1 <= m + n;
  }
  /// Flip partner: the k' = ell*d + m + n - k with ranks equal to R_k's.
  ToeplitzSpec flipped() const { return {m, n, d, ell, band() + m + n - k}; }
  /// Same matrix family with m <= n enforced.
  static ToeplitzSpec normalized(std::size_t m, std::size_t n, std::size_t d, std::size_t ell, std::size_t k) {
    if (m > n)
      std::swap(m, n);
    return {m, n, d, ell, k};
  }
  friend bool operator==(const ToeplitzSpec&, const ToeplitzSpec&) = default;
};

inline void require_valid(const ToeplitzSpec& s) {
  if (!s.valid())
    throw InvalidSpec("invalid Toeplitz spec (m=" + std::to_string(s.m) + ", n=" + std::to_string(s.n) +
                      ", d=" + std::to_string(s.d) + ", ell=" + std::to_string(s.ell) + ", k=" +
                      std::to_string(s.k) + ")");
}

/// Coefficients gamma_0..gamma_(ell*d) of (1 + z + ... + z^d)^ell.
struct GammaCoeffs {
  std::vector<Integer> gamma;
  /// gamma_i, zero outside 0..ell*d.
  Integer at(long i) const {
    if (i < 0 || i >= static_cast<long>(gamma.size()))
      return 0;
    return gamma[static_cast<std::size_t>(i)];
  }
};

inline GammaCoeffs gamma_coeffs(std::size_t d, std::size_t ell) {
  std::vector<Integer> g{1};
  for (std::size_t e = 0; e < ell; ++e) {
    std::vector<Integer> next(g.size() + d, Integer(0));
    for (std::size_t i = 0; i < g.size(); ++i)
      for (std::size_t j = 0; j <= d; ++j)
        next[i + j] += g[i];
    g = std::move(next);
  }
  return {std::move(g)};
}

/// Row count u_(k - ell*d) and column count u_k of R_k.
inline std::pair<std::size_t, std::size_t> toeplitz_shape(const ToeplitzSpec& s) {
  const FiltrationDims u = filtration_dims(s.m, s.n);
  return {u.at(static_cast<long>(s.k - s.band())), u.at(static_cast<long>(s.k))};
}

/// c_k: 0 if k <= n, k-n if n <= k <= n+ell*d, ell*d beyond.
inline std::size_t offset_c(const ToeplitzSpec& s) {
  require_valid(s);
  if (s.k <= s.n)
    return 0;
  if (s.k <= s.n + s.band())
    return s.k - s.n;
  return s.band();
}

/// (R_k)_ij = gamma_(j - i + c_k), i, j 1-based.
inline IntegerMatrix build_R(const ToeplitzSpec& s) {
  require_valid(s);
  const auto [rows, cols] = toeplitz_shape(s);
  const GammaCoeffs g = gamma_coeffs(s.d, s.ell);
  const long c = static_cast<long>(offset_c(s));
  IntegerMatrix r(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      r(i, j) = g.at(static_cast<long>(j) - static_cast<long>(i) + c);
  return r;
}

/// rho(k, m, n, d, ell): rank of R_k. Accepts m > n (swapped internally).
inline std::size_t rho(std::size_t m, std::size_t n, std::size_t d, std::size_t ell, std::size_t k) {
  return rank(build_R(ToeplitzSpec::normalized(m, n, d, ell, k)));
}

/// Full rank of R_k, min of its two dimensions.
inline std::size_t max_rank(const ToeplitzSpec& s) {
  const auto [rows, cols] = toeplitz_shape(s);
  return std::min(rows, cols);
}

struct PropertyReport {
  bool offset_in_range = false;   ///< 0 <= c_k <= ell*d
  bool shape_sandwich = false;    ///< u_(k-ld) <= u_k + c_k <= u_(k-ld) + ld
  bool top_left_positive = false; ///< gamma_(c_k) > 0
  bool bottom_right_positive = false;
  bool flip_transpose = false; ///< F R_k F = R_(ld+m+n-k)^T
  bool all() const {
    return offset_in_range && shape_sandwich && top_left_positive && bottom_right_positive && flip_transpose;
  }
};

/// Evaluates the five structural properties of R_k; throws PropertyViolation
/// if any fails.
inline PropertyReport check_properties(const ToeplitzSpec& s) {
  require_valid(s);
  PropertyReport rep;
  const std::size_t c = offset_c(s), ld = s.band();
  const auto [rows, cols] = toeplitz_shape(s);
  const GammaCoeffs g = gamma_coeffs(s.d, s.ell);
  const IntegerMatrix r = build_R(s);

  rep.offset_in_range = c <= ld;
  rep.shape_sandwich = rows <= cols + c && cols + c <= rows + ld;
  rep.top_left_positive = r(0, 0) == g.at(static_cast<long>(c)) && r(0, 0) > 0;
  const long br = static_cast<long>(cols) - static_cast<long>(rows) + static_cast<long>(c);
  rep.bottom_right_positive = r(rows - 1, cols - 1) == g.at(br) && r(rows - 1, cols - 1) > 0;

  const IntegerMatrix partner = build_R(s.flipped());
  rep.flip_transpose = partner.rows() == cols && partner.cols() == rows;
  for (std::size_t i = 0; rep.flip_transpose && i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (r(rows - 1 - i, cols - 1 - j) != partner(j, i)) {
        rep.flip_transpose = false;
        break;
      }
  if (!rep.all())
    throw PropertyViolation("R_k structural property violated");
  return rep;
}

/// Representative with at least as many rows as columns (the input itself or
/// its flip partner).
inline ToeplitzSpec row_major_representative(const ToeplitzSpec& s) {
  require_valid(s);
  return 2 * s.k >= s.m + s.n + s.band() ? s : s.flipped();
}

/// The classical sufficient rank-drop test, taken literally: with k normalized so rows >= cols and g_k = c_k mod (d+1), predicts a drop iff
/// u_k > ell and 0 < g_k < d - u_(k-ld) + 2.
///
/// This predicate is only reliable when R_k is square; see witness_rank_drop.
inline bool sufficient_rank_drop(const ToeplitzSpec& spec) {
  const ToeplitzSpec s = row_major_representative(spec);
  const auto [rows, cols] = toeplitz_shape(s);
  const long g = static_cast<long>(offset_c(s) % (s.d + 1));
  return cols > s.ell && 0 < g && g < static_cast<long>(s.d) - static_cast<long>(rows) + 2;
}

/// Coefficients of (x - y)^ell padded to `length`, starting at `shift`.
inline std::vector<Integer> x_minus_y_power(std::size_t ell, std::size_t length, std::size_t shift) {
  std::vector<Integer> v(length, Integer(0));
  for (std::size_t i = 0; i <= ell; ++i)
    v.at(shift + i) = (i % 2 ? -1 : 1) * binomial(ell, i);
  return v;
}

/// Kernel vector of R_k built from (x - y)^ell, if some placement of its
/// coefficients works. Placement t is valid iff no multiple of d+1 in
/// [0, ell(d+1)] falls in [t + c + ell - rows + 1, t + c + ell]; the product
/// (x-y)^ell h_d^ell = (x^(d+1) - y^(d+1))^ell is zero elsewhere.
inline std::optional<std::vector<Integer>> x_minus_y_witness(const ToeplitzSpec& spec) {
  const ToeplitzSpec s = row_major_representative(spec);
  const auto [rows, cols] = toeplitz_shape(s);
  if (cols <= s.ell)
    return std::nullopt;
  const long c = static_cast<long>(offset_c(s)), l = static_cast<long>(s.ell), q = static_cast<long>(s.d + 1);
  for (long t = 0; t + l < static_cast<long>(cols); ++t) {
    const long lo = std::max(0L, t + c + l - static_cast<long>(rows) + 1);
    const long hi = std::min(l * q, t + c + l);
    bool hits = false;
    for (long v = lo; v <= hi && !hits; ++v)
      hits = v % q == 0;
    if (!hits)
      return x_minus_y_power(s.ell, cols, static_cast<std::size_t>(t));
  }
  return std::nullopt;
}

/// Corrected sufficient condition: a drop is certified by an explicit
/// (x - y)^ell kernel vector of the row-major representative.
inline bool witness_rank_drop(const ToeplitzSpec& spec) { return x_minus_y_witness(spec).has_value(); }

struct DeficiencyRecord {
  ToeplitzSpec spec;
  std::size_t rank = 0;
  std::size_t max_rank = 0;
  std::size_t deficiency = 0;
  bool predicted = false; ///< sufficient_rank_drop
  bool witness = false;   ///< witness_rank_drop
};

/// All specs of one quadruple (m <= n), ranks computed once per flip pair.
inline std::vector<DeficiencyRecord> scan_quadruple(std::size_t m, std::size_t n, std::size_t d, std::size_t ell) {
  std::vector<DeficiencyRecord> out;
  const std::size_t ld = ell * d;
  if (m > n || ld + 2 > m + n)
    return out;
  std::vector<std::size_t> ranks(m + n, 0);
  for (std::size_t k = ld + 1; k + 1 <= m + n; ++k) {
    const ToeplitzSpec s{m, n, d, ell, k};
    const std::size_t partner = s.flipped().k;
    ranks[k] = partner < k ? ranks[partner] : rank(build_R(s));
  }
  for (std::size_t k = ld + 1; k + 1 <= m + n; ++k) {
    const ToeplitzSpec s{m, n, d, ell, k};
    const std::size_t full = max_rank(s);
    if (ranks[k] < full)
      out.push_back({s, ranks[k], full, full - ranks[k], sufficient_rank_drop(s), witness_rank_drop(s)});
  }
  return out;
}

struct Quadruple {
  std::size_t m, n, d, ell;
  friend bool operator==(const Quadruple&, const Quadruple&) = default;
};

/// Quadruples with m <= n in the given box, in lexicographic order.
inline std::vector<Quadruple> scan_quadruples(std::size_t m_max, std::size_t n_max, std::size_t d_max,
                                              std::size_t ell_max) {
  std::vector<Quadruple> q;
  for (std::size_t m = 1; m <= m_max; ++m)
    for (std::size_t n = m; n <= n_max; ++n)
      for (std::size_t d = 1; d <= d_max; ++d)
        for (std::size_t ell = 1; ell <= ell_max; ++ell)
          if (ell * d + 2 <= m + n)
            q.push_back({m, n, d, ell});
  return q;
}

/// Rank-deficient specs in the box, one result vector per quadruple (same
/// order as scan_quadruples). Quadruples are spread over `threads` workers.
inline std::vector<std::vector<DeficiencyRecord>> scan_deficiencies_grouped(const std::vector<Quadruple>& quads,
                                                                            unsigned threads = 0) {
  std::vector<std::vector<DeficiencyRecord>> results(quads.size());
  if (threads == 0)
    threads = std::max(1u, std::thread::hardware_concurrency());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < quads.size();)
      results[i] = scan_quadruple(quads[i].m, quads[i].n, quads[i].d, quads[i].ell);
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t)
      pool.emplace_back(worker);
    worker();
  }
  return results;
}

inline std::vector<DeficiencyRecord> scan_deficiencies(std::size_t m_max, std::size_t n_max, std::size_t d_max,
                                                       std::size_t ell_max) {
  std::vector<DeficiencyRecord> out;
  for (auto& group : scan_deficiencies_grouped(scan_quadruples(m_max, n_max, d_max, ell_max)))
    out.insert(out.end(), group.begin(), group.end());
  return out;
}

} // namespace jkron
