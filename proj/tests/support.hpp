#pragma once

#include <random>
#include <string>
#include <vector>

#include "jkron/io.hpp"
#include "jkron/jordan.hpp"
#include "jkron/polyring.hpp"

namespace jkron::testing {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline UnivariatePoly random_univariate(Rng& rng, int max_degree, int max_coeff) {
  std::vector<Rational> c(static_cast<std::size_t>(max_degree) + 1);
  for (auto& v : c)
    v = uniform(rng, -max_coeff, max_coeff);
  return UnivariatePoly(std::move(c));
}

inline BivariatePoly random_bivariate(Rng& rng, int max_degree, int max_coeff) {
  BivariatePoly p;
  for (int i = 0; i <= max_degree; ++i)
    for (int j = 0; j <= max_degree; ++j)
      p.at(i, j) = uniform(rng, -max_coeff, max_coeff);
  return p;
}

/// 1..max_blocks blocks, eigenvalues in [eig_lo, eig_hi], sizes in 1..max_size.
inline JordanSpec random_spec(Rng& rng, int max_blocks, int eig_lo, int eig_hi, int max_size) {
  std::vector<JordanBlock> b;
  const int count = uniform(rng, 1, max_blocks);
  for (int i = 0; i < count; ++i)
    b.push_back({Rational(uniform(rng, eig_lo, eig_hi)), static_cast<std::size_t>(uniform(rng, 1, max_size))});
  return JordanSpec(std::move(b));
}

inline RationalMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, int max_entry) {
  RationalMatrix a(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      a(i, j) = uniform(rng, -max_entry, max_entry);
  return a;
}

/// Random low-rank matrix: product of rows x r and r x cols factors.
inline RationalMatrix random_low_rank(Rng& rng, std::size_t rows, std::size_t cols, std::size_t r, int max_entry) {
  return random_matrix(rng, rows, r, max_entry) * random_matrix(rng, r, cols, max_entry);
}

inline std::string show(const JordanStructure& s) { return to_json(s).dump(); }

} // namespace jkron::testing
