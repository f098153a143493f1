#include <doctest.h>

#include "jkron/bttb.hpp"
#include "jkron/oracle.hpp"
#include "jkron/predict_frechet.hpp"
#include "support.hpp"

using namespace jkron;
using jkron::testing::Rng;
using jkron::testing::uniform;

namespace {

std::vector<std::size_t> nullity_profile(RationalMatrix z, const Rational& e) {
  for (std::size_t i = 0; i < z.rows(); ++i)
    z(i, i) -= e;
  return weyr_nullities(z).nullities;
}

} // namespace

TEST_CASE("block pair of a kronecker sum") {
  const RationalMatrix n2 = nilpotent_block(2), id = RationalMatrix::identity(2);
  CHECK(build_block_pair(parse_bivariate("0,1;1"), 0, 2, 0, 2) == kron(n2, id) + kron(id, n2));
}

TEST_CASE("block pair of h_4 matches direct kronecker evaluation") {
  const RationalMatrix n4 = nilpotent_block(4);
  RationalMatrix h(16, 16);
  for (std::size_t j = 0; j <= 4; ++j)
    h = h + kron(matrix_power(n4, j), matrix_power(n4, 4 - j));
  CHECK(build_block_pair(h_poly(4), 0, 4, 0, 4) == h);
}

TEST_CASE("entry formula agrees with the kronecker route") {
  Rng rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const BivariatePoly p = jkron::testing::random_bivariate(rng, 3, 3);
    const Rational lam = uniform(rng, -2, 2), mu = uniform(rng, -2, 2);
    const std::size_t m = uniform(rng, 1, 4), n = uniform(rng, 1, 4);
    const RationalMatrix a = build_block_pair(p, lam, m, mu, n);
    CHECK(a == build_block_pair_kron(p, lam, m, mu, n));
    for (std::size_t i = 0; i < a.rows(); ++i)
      CHECK(a(i, i) == p(lam, mu));
  }
}

TEST_CASE("full matrices") {
  CHECK(build_full(parse_bivariate("0,1;1"), {{0, 2}}, {{0, 2}}) ==
        build_block_pair(parse_bivariate("0,1;1"), 0, 2, 0, 2));
  const BivariatePoly p = parse_bivariate("0,1,-1;-2,1");
  const JordanSpec x{{0, 2}, {1, 1}}, y{{2, 2}, {3, 1}};
  const RationalMatrix full = build_full(p, x, y);
  CHECK(full.rows() == 9);
  // pair (J_2(0), J_1(3)) sits after the 4 x 4 block of (J_2(0), J_2(2))
  CHECK(full(4, 4) == p(0, 3));
  CHECK(full(0, 4) == 0);
  CHECK(build_full(p, {{1, 1}}, {{2, 1}}) == RationalMatrix::from_rows({{p(1, 2)}}));
}

TEST_CASE("literal kronecker matrix is similar to the direct sum") {
  Rng rng(32);
  for (int trial = 0; trial < 20; ++trial) {
    const BivariatePoly p = jkron::testing::random_bivariate(rng, 2, 2);
    const JordanSpec x = jkron::testing::random_spec(rng, 2, -1, 1, 3);
    const JordanSpec y = jkron::testing::random_spec(rng, 2, -1, 1, 3);
    CHECK(oracle_jcf_raw(p, x, y) == oracle_jcf(p, x, y));
  }
}

TEST_CASE("frechet kronecker form") {
  const UnivariatePoly sq = parse_univariate("0,0,1");
  const RationalMatrix k2 = frechet_kronecker_form(sq, {{0, 2}});
  CHECK(weyr_structure(k2) == BlockSizes{3, 1});
  CHECK(frechet_kronecker_form(parse_univariate("4,3"), {{2, 2}}) == RationalMatrix::identity(4) * Rational(3));
  const RationalMatrix k5 = frechet_kronecker_form(parse_univariate("0,0,0,0,0,1"), {{0, 4}});
  CHECK(k5.rows() == 16);
  CHECK(weyr_structure(k5) == BlockSizes{2, 2, 2, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1});
}

TEST_CASE("literal frechet form with the transpose has the same structure") {
  Rng rng(33);
  for (int trial = 0; trial < 15; ++trial) {
    const UnivariatePoly f = jkron::testing::random_univariate(rng, 5, 3);
    const JordanSpec w = jkron::testing::random_spec(rng, 2, -1, 1, 2);
    std::set<Rational> eigs;
    for (const auto& a : w.blocks())
      for (const auto& b : w.blocks())
        eigs.insert(bezout_quotient(f)(a.eig, b.eig));
    CHECK(oracle_from_matrix(frechet_kronecker_literal(f, w.matrix()), eigs) ==
          oracle_jcf(bezout_quotient(f), w, w));
  }
}

TEST_CASE("swapping the arguments preserves the nullity profile") {
  Rng rng(34);
  for (int trial = 0; trial < 60; ++trial) {
    const BivariatePoly p = jkron::testing::random_bivariate(rng, 3, 2);
    const Rational lam = uniform(rng, -2, 2), mu = uniform(rng, -2, 2);
    const std::size_t m = uniform(rng, 1, 4), n = uniform(rng, 1, 4);
    CHECK(nullity_profile(build_block_pair(p, lam, m, mu, n), p(lam, mu)) ==
          nullity_profile(build_block_pair(p.swapped(), mu, n, lam, m), p(lam, mu)));
  }
}

TEST_CASE("divided difference identity on a block pair") {
  Rng rng(35);
  int tested = 0;
  while (tested < 60) {
    const UnivariatePoly f = jkron::testing::random_univariate(rng, 7, 3);
    const Rational lam = uniform(rng, -2, 2), mu = uniform(rng, -2, 2);
    if (lam == mu)
      continue;
    const std::size_t m = uniform(rng, 1, 4), n = uniform(rng, 1, 4);
    const BivariatePoly p = bezout_quotient(f);
    RationalMatrix shifted = build_block_pair(p, lam, m, mu, n);
    for (std::size_t i = 0; i < shifted.rows(); ++i)
      shifted(i, i) -= p(lam, mu);
    const RationalMatrix jm = jordan_block(lam, m), jn = jordan_block(mu, n);
    const RationalMatrix im = RationalMatrix::identity(m), in = RationalMatrix::identity(n);
    const UnivariatePoly phi = phi_distinct(f, lam, mu);
    CHECK((kron(jm, in) - kron(im, jn)) * shifted ==
          kron(evaluate_at_matrix(phi, jm), in) - kron(im, evaluate_at_matrix(phi, jn)));
    ++tested;
  }
}

TEST_CASE("matrices from two polynomials commute") {
  Rng rng(36);
  for (int trial = 0; trial < 30; ++trial) {
    const BivariatePoly p1 = jkron::testing::random_bivariate(rng, 2, 3);
    const BivariatePoly p2 = jkron::testing::random_bivariate(rng, 2, 3);
    const Rational lam = uniform(rng, -2, 2), mu = uniform(rng, -2, 2);
    const std::size_t m = uniform(rng, 1, 4), n = uniform(rng, 1, 4);
    const RationalMatrix a = build_block_pair(p1, lam, m, mu, n), b = build_block_pair(p2, lam, m, mu, n);
    CHECK(a * b == b * a);
    CHECK(a * b == build_block_pair(p1 * p2, lam, m, mu, n));
  }
}

TEST_CASE("horner evaluation at a matrix") {
  const RationalMatrix j = jordan_block(2, 2);
  CHECK(evaluate_at_matrix(parse_univariate("1,0,1"), j) == j * j + RationalMatrix::identity(2));
  CHECK(evaluate_at_matrix(UnivariatePoly(), j).is_zero());
}
