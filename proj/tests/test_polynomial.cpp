#include <gtest/gtest.h>

#include <boost/multiprecision/cpp_int.hpp>

#include "robustmine/errors.hpp"
#include "robustmine/polynomial.hpp"
#include "robustmine/random.hpp"
#include "robustmine/robustness.hpp"

namespace robustmine {
namespace {

std::vector<BigInt> ints(std::initializer_list<long> values) {
  return std::vector<BigInt>(values.begin(), values.end());
}

TEST(Expand, KnownProduct) {
  const Count cells[] = {3, 2};
  EXPECT_EQ(expand(cells, 6), ints({1, 0, -1, -1, 0, 1, 0}));
}

TEST(Expand, EdgeCases) {
  EXPECT_EQ(expand({}, 3), ints({1, 0, 0, 0}));
  const Count zero[] = {0, 2};
  EXPECT_EQ(expand(zero, 2), ints({0, 0, 0}));
  const Count too_many[] = {3, 3};
  EXPECT_THROW(expand(too_many, 5), ContractError);
}

TEST(Expand, EvaluatesToProductOfFactors) {
  CounterRng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Count> cells;
    std::size_t total = 0;
    const std::size_t n = 1 + rng.next() % 5;
    for (std::size_t i = 0; i < n; ++i) {
      cells.push_back(rng.next() % 6);
      total += cells.back();
    }
    const auto p = RobustnessPolynomial::from_dense(expand(cells, total + 2));
    for (double beta : {0.1, 0.37, 0.8}) {
      double product = 1.0;
      for (Count c : cells) product *= 1.0 - power(beta, c);
      EXPECT_NEAR(p.evaluate(beta), product, 1e-12);
    }
  }
}

TEST(Polynomial, SparseArithmetic) {
  RobustnessPolynomial p = RobustnessPolynomial::from_dense(ints({1, 0, -1}));
  EXPECT_EQ(p.degree(), 2u);
  EXPECT_EQ(p.coefficient(1), 0);
  p -= RobustnessPolynomial::from_dense(ints({0, 0, -1}));
  EXPECT_EQ(p, RobustnessPolynomial::constant(1));
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_FALSE(RobustnessPolynomial().degree().has_value());
  EXPECT_EQ(p.dense(3), ints({1, 0, 0}));
}

TEST(Polynomial, SignatureRoundTrip) {
  const auto p = RobustnessPolynomial::from_dense(ints({1, 0, -1, 12}));
  EXPECT_EQ(p.signature(), "0:1 2:-1 3:12");
  EXPECT_EQ(RobustnessPolynomial::parse_signature(p.signature()), p);
  EXPECT_EQ(RobustnessPolynomial().signature(), "0");
  EXPECT_TRUE(RobustnessPolynomial::parse_signature("0").is_zero());
}

TEST(Polynomial, ComparisonUsesFirstDifference) {
  const auto ab = RobustnessPolynomial::from_dense(ints({1, -1, -1, 1}));
  const auto ae = RobustnessPolynomial::from_dense(ints({1, -1, 0, -1, 1}));
  EXPECT_EQ(first_difference(ab, ae), 2u);
  EXPECT_EQ(compare_polynomials(ab, ae), std::strong_ordering::less);
  EXPECT_EQ(compare_polynomials(ae, ab), std::strong_ordering::greater);
  EXPECT_EQ(compare_polynomials(ab, ab), std::strong_ordering::equal);
  EXPECT_FALSE(first_difference(ab, ab).has_value());
}

TEST(Polynomial, LargeCoefficientsStayExact) {
  std::vector<Count> cells(40, 1);
  const auto dense = expand(cells, 40);
  // (1 - x)^40: the middle coefficient is C(40, 20).
  EXPECT_EQ(dense[20], BigInt("137846528820"));
}

}  // namespace
}  // namespace robustmine
