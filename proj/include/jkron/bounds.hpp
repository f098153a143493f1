#pragma once

// Guarantees for block pairs where both first derivatives vanish: the
// largest Jordan block and the number of blocks, in terms of the local
// degree d of p at (lam, mu).

#include <algorithm>
#include <cstddef>
#include <vector>

#include "jkron/error.hpp"

namespace jkron {

/// u_j = dim V_j / V_(j-1) = min(j, m, n+m-j) for j = 1..m+n-1 (m <= n after
/// an internal swap). Index 0 of `u` is u_1.
struct FiltrationDims {
  std::size_t m = 0, n = 0;
  std::vector<std::size_t> u;

  /// u_j with the convention u_j = 0 outside 1..m+n-1.
  std::size_t at(long j) const {
    if (j < 1 || j > static_cast<long>(u.size()))
      return 0;
    return u[static_cast<std::size_t>(j - 1)];
  }
};

inline FiltrationDims filtration_dims(std::size_t m, std::size_t n) {
  if (m == 0 || n == 0)
    throw InvalidSpec("filtration_dims: sizes must be positive");
  if (m > n)
    std::swap(m, n);
  FiltrationDims f{m, n, {}};
  for (std::size_t j = 1; j + 1 <= m + n; ++j)
    f.u.push_back(std::min({j, m, n + m - j}));
  return f;
}

/// ceil((m+n-1)/d).
inline std::size_t max_block_size_bound(std::size_t m, std::size_t n, std::size_t d) {
  if (d == 0)
    throw InvalidSpec("local degree must be positive");
  return (m + n - 1 + d - 1) / d;
}

struct BlockCountBounds {
  std::size_t lower = 0;
  std::size_t upper = 0;
};

/// Sandwich for the number of Jordan blocks of a pair with local degree d.
inline BlockCountBounds block_count_bounds(std::size_t m, std::size_t n, std::size_t d) {
  if (d == 0)
    throw InvalidSpec("local degree must be positive");
  if (d + 1 >= m + n)
    return {m * n, m * n};
  const std::size_t lo = std::min(m, n), hi = std::max(m, n);
  const long delta = static_cast<long>(d) - static_cast<long>(hi - lo);
  BlockCountBounds b;
  b.upper = hi * std::min(lo, d);
  b.lower = d * lo;
  if (delta > 0)
    b.lower -= static_cast<std::size_t>(delta * delta / 4);
  return b;
}

} // namespace jkron
