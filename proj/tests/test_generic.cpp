#include <doctest.h>

#include "jkron/oracle.hpp"
#include "jkron/predict_generic.hpp"
#include "support.hpp"

using namespace jkron;
using jkron::testing::Rng;
using jkron::testing::uniform;

namespace {

BlockSizes oracle_pair(const BivariatePoly& p, const Rational& lam, std::size_t m, const Rational& mu, std::size_t n) {
  return oracle_jcf(p, {{lam, m}}, {{mu, n}}).entries().begin()->second;
}

bool any_degenerate(const BivariatePoly& p, const JordanSpec& x, const JordanSpec& y) {
  for (const auto& a : x.blocks())
    for (const auto& b : y.blocks())
      if (classify(p, a.eig, b.eig, a.size, b.size) == GenericCaseTag::Degenerate)
        return true;
  return false;
}

} // namespace

TEST_CASE("kronecker sum sizes") {
  CHECK(kronecker_sum_sizes(2, 2) == BlockSizes{3, 1});
  CHECK(kronecker_sum_sizes(1, 5) == BlockSizes{5});
  CHECK(kronecker_sum_sizes(4, 3) == BlockSizes{6, 4, 2});
  CHECK(oracle_pair(parse_bivariate("0,1;1"), 0, 4, 0, 3) == BlockSizes{6, 4, 2});
}

TEST_CASE("kronecker sum sizes are symmetric and sum to mn") {
  for (std::size_t m = 1; m <= 7; ++m)
    for (std::size_t n = 1; n <= 7; ++n) {
      CHECK(kronecker_sum_sizes(m, n) == kronecker_sum_sizes(n, m));
      CHECK(total_size(kronecker_sum_sizes(m, n)) == m * n);
    }
}

TEST_CASE("sizes of nilpotent powers") {
  CHECK(nilpotent_power_sizes(4, 2) == BlockSizes{2, 2});
  CHECK(nilpotent_power_sizes(5, 2) == BlockSizes{3, 2});
  CHECK(nilpotent_power_sizes(3, 5) == BlockSizes{1, 1, 1});
  for (std::size_t n = 1; n <= 7; ++n)
    for (std::size_t r = 1; r <= 8; ++r) {
      BlockSizes got = nilpotent_power_sizes(n, r);
      sort_desc(got);
      CHECK(got == weyr_structure(matrix_power(nilpotent_block(n), r)));
    }
}

TEST_CASE("classification") {
  const BivariatePoly sum = parse_bivariate("0,1;1");
  CHECK(classify(sum, 0, 0, 3, 4) == GenericCaseTag::BothNonzero);
  const BivariatePoly ex = parse_bivariate("0,1,-1;-2,1");
  for (int lam = -2; lam <= 2; ++lam)
    CHECK(classify(ex, lam, 2, 2, 2) == GenericCaseTag::PxZero);
  CHECK(classify(parse_bivariate("0,0,1;0,1;1"), 0, 0, 3, 3) == GenericCaseTag::Degenerate);
  CHECK(classify(parse_bivariate("0,0,1;0,1;1"), 0, 0, 1, 3) == GenericCaseTag::SizeOneEscape);
  CHECK(classify(parse_bivariate("0;1"), 0, 0, 2, 2) == GenericCaseTag::PyZero);
  CHECK_THROWS_AS(classify(parse_bivariate("3"), 0, 0, 2, 2), ConstantPolynomial);
}

TEST_CASE("theorem branches on small examples") {
  CHECK(theorem_main_sizes(parse_bivariate("0,1;1"), 0, 0, 2, 2) == BlockSizes{3, 1});
  CHECK_THROWS_AS(theorem_main_sizes(parse_bivariate("0,0,1;0,1;1"), 0, 0, 3, 3), DegenerateCase);
}

TEST_CASE("x plus a high power of y gives n blocks of size m") {
  for (std::size_t m = 1; m <= 4; ++m)
    for (std::size_t n = 2; n <= 4; ++n) {
      BivariatePoly p;
      p.at(1, 0) = 1;
      p.at(0, n) = 3;
      p.at(1, n) = -1;
      const BlockSizes expect(n, m);
      CHECK(theorem_main_sizes(p, 0, 0, m, n) == expect);
      CHECK(oracle_pair(p, 0, m, 0, n) == expect);
    }
}

TEST_CASE("one-sided branch with r = 1 is the kronecker sum formula") {
  for (std::size_t m = 1; m <= 5; ++m)
    for (std::size_t n = 1; n <= 5; ++n)
      CHECK(detail::one_sided_sizes(m, n, 1) == kronecker_sum_sizes(m, n));
}

TEST_CASE("full prediction of the four-pair example") {
  JordanStructure expect;
  expect.add(-2, {2, 2, 2});
  expect.add(-5, {1});
  expect.add(-6, {2});
  const GenericPrediction gp =
      predict_generic_detailed(parse_bivariate("0,1,-1;-2,1"), {{0, 2}, {1, 1}}, {{2, 2}, {3, 1}});
  CHECK(gp.structure == expect);
  REQUIRE(gp.pairs.size() == 4);
  CHECK(gp.pairs[0].branch == "PxZero");
}

TEST_CASE("unit blocks give unit blocks") {
  const BivariatePoly p = parse_bivariate("1,2;3,0,1");
  const JordanSpec x{{0, 1}, {1, 1}}, y{{-1, 1}, {2, 1}};
  const JordanStructure js = predict_generic_full(p, x, y);
  CHECK(js.block_count() == 4);
  CHECK(js == oracle_jcf(p, x, y));
}

TEST_CASE("constant polynomial") {
  const JordanStructure js = predict_generic_full(parse_bivariate("7"), {{0, 2}}, {{1, 3}});
  REQUIRE(js.find(7) != nullptr);
  CHECK(*js.find(7) == BlockSizes(6, 1));
}

TEST_CASE("degenerate pairs carry their bounds") {
  try {
    predict_generic_full(parse_bivariate("0,0,1;0,1;1"), {{0, 3}}, {{0, 3}});
    FAIL("expected DegenerateCase");
  } catch (const DegenerateCase& e) {
    CHECK(e.m == 3);
    CHECK(e.local_degree == 2);
    CHECK(e.max_block_size == 3);
    CHECK(e.count.lower == 5);
    CHECK(e.count.upper == 6);
  }
}

TEST_CASE("prediction matches the oracle on random nondegenerate instances") {
  Rng rng(51);
  int tested = 0;
  while (tested < 300) {
    const BivariatePoly p = jkron::testing::random_bivariate(rng, 3, 3);
    if (p.is_constant())
      continue;
    const JordanSpec x = jkron::testing::random_spec(rng, 2, -2, 2, 3);
    const JordanSpec y = jkron::testing::random_spec(rng, 2, -2, 2, 3);
    if (any_degenerate(p, x, y))
      continue;
    const JordanStructure predicted = predict_generic_full(p, x, y);
    CHECK_MESSAGE(predicted == oracle_jcf(p, x, y), format_bivariate(p));
    for (const auto& pp : predict_generic_detailed(p, x, y).pairs)
      CHECK(total_size(pp.sizes) == pp.m * pp.n);
    ++tested;
  }
}

TEST_CASE("both derivatives vanishing with a unit block agree with the oracle") {
  Rng rng(52);
  int tested = 0;
  while (tested < 100) {
    // critical point at the origin: no linear terms
    BivariatePoly p = jkron::testing::random_bivariate(rng, 3, 3);
    p.at(1, 0) = 0;
    p.at(0, 1) = 0;
    if (p.is_constant())
      continue;
    const std::size_t m = 1, n = uniform(rng, 1, 5);
    const bool flip = uniform(rng, 0, 1);
    const std::size_t a = flip ? n : m, b = flip ? m : n;
    REQUIRE(classify(p, 0, 0, a, b) == GenericCaseTag::SizeOneEscape);
    CHECK(theorem_main_sizes(p, 0, 0, a, b) == oracle_pair(p, 0, a, 0, b));
    ++tested;
  }
}
