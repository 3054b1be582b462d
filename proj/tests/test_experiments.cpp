#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "robustmine/errors.hpp"
#include "robustmine/experiments.hpp"
#include "robustmine/oracle.hpp"
#include "support/test_support.hpp"

namespace robustmine {
namespace {

using testing::letters;

std::vector<double> grid(double from, double to, double step) {
  std::vector<double> out;
  for (int i = 0; from + i * step <= to + 1e-9; ++i) out.push_back(from + i * step);
  return out;
}

TEST(Sweep, RunningExampleGrid) {
  const auto db = testing::running_example();
  const auto result = sweep(db, PredicateKind::Free, grid(0.1, 0.9, 0.1), grid(0.1, 0.9, 0.1), 1);
  ASSERT_EQ(result.counts.size(), 9u);
  ASSERT_EQ(result.counts[0].size(), 9u);
  EXPECT_TRUE(result.monotone());
  std::ostringstream out;
  result.write_tsv(out);
  const std::string text = out.str();
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 82);
}

TEST(Sweep, RhoZeroAndAlphaOneRows) {
  const auto db = testing::running_example();
  const auto result = sweep(db, PredicateKind::Free, {0.2, 0.6, 1.0}, {0.0, 0.5, 1.0}, 0);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(result.counts[i][0], 8u);
  EXPECT_EQ(result.counts[2][1], 8u);
  EXPECT_EQ(result.counts[2][2], 8u);
  EXPECT_THROW(sweep(db, PredicateKind::Closed, {0.5}, {0.5}, 1), ConfigError);
}

TEST(Sweep, CountMatchesOracleAtRhoPointNine) {
  const auto db = testing::running_example();
  const auto result = sweep(db, PredicateKind::Free, {0.5}, {0.9}, 1);
  std::size_t expected = 0;
  for (const Itemset& x : testing::all_itemsets(5, 5)) {
    if (x.empty() || !evaluate_predicate(db, x, PredicateKind::Free)) continue;
    if (exhaustive_robustness(db, x, PredicateKind::Free, Alpha(0.5)) >= 0.9) ++expected;
  }
  EXPECT_EQ(result.counts[0][0], expected);
}

TEST(Sweep, MonotoneOnRandomData) {
  for (const auto& entry : testing::small_corpus(30)) {
    for (PredicateKind kind : {PredicateKind::Free, PredicateKind::NonDerivable, PredicateKind::TotallyShattered}) {
      EXPECT_TRUE(sweep(entry.db, kind, grid(0.1, 1.0, 0.1), grid(0.0, 1.0, 0.1), 1).monotone());
    }
  }
}

TEST(NoiseMix, EtaZeroIsIdentity) {
  const auto db = testing::random_db(3, 8, 40, 0.4);
  const auto same = noise_mix(db, 0.0, 99);
  for (std::size_t r = 0; r < db.size(); ++r) EXPECT_EQ(same.row_items(r), db.row_items(r));
}

TEST(NoiseMix, Deterministic) {
  const auto db = testing::random_db(3, 8, 40, 0.4);
  const auto a = noise_mix(db, 0.05, 7);
  const auto b = noise_mix(db, 0.05, 7);
  for (std::size_t r = 0; r < db.size(); ++r) EXPECT_EQ(a.row_items(r), b.row_items(r));
  EXPECT_THROW(noise_mix(db, 1.2, 7), DomainError);
}

TEST(NoiseMix, EtaOneKeepsMargins) {
  const auto db = testing::random_db(11, 10, 2000, 0.3);
  const auto noisy = noise_mix(db, 1.0, 5);
  for (Item item = 0; item < 10; ++item) {
    const double n = static_cast<double>(db.size());
    const double m = static_cast<double>(db.cover(item).count()) / n;
    const double got = static_cast<double>(noisy.cover(item).count()) / n;
    EXPECT_LE(std::abs(got - m), 4.0 * std::sqrt(m * (1.0 - m) / n));
  }
}

TEST(Compliance, ClosedForms) {
  const std::vector<Itemset> r{letters("a"), letters("b"), letters("c")};
  EXPECT_EQ(compliance(r, r), (std::vector<double>{1.0, 1.0, 1.0}));
  std::vector<Itemset> far(9, Itemset{});
  for (Item i = 0; i < 9; ++i) far[i] = Itemset{i + 10};
  far.push_back(letters("a"));
  EXPECT_DOUBLE_EQ(compliance({letters("a")}, far)[0], 0.1);
  EXPECT_DOUBLE_EQ(compliance({letters("z")}, r)[0], 0.0);
}

TEST(RankDistance, ClosedForms) {
  const BucketOrder order{{letters("a")}, {letters("b")}, {letters("c")}, {letters("d")}};
  const BucketOrder reversed{{letters("d")}, {letters("c")}, {letters("b")}, {letters("a")}};
  EXPECT_DOUBLE_EQ(rank_distance(order, order), 0.0);
  EXPECT_DOUBLE_EQ(rank_distance(order, reversed), 100.0);
  const BucketOrder tied{{letters("a"), letters("b")}, {letters("c"), letters("d")}};
  // b = 6 - 2 = 4; only pairs across buckets count, none discordant.
  EXPECT_DOUBLE_EQ(rank_distance(tied, order), 0.0);
  EXPECT_DOUBLE_EQ(rank_distance(tied, reversed), 100.0);
  EXPECT_THROW(rank_distance({{letters("a"), letters("b")}}, {{letters("a")}, {letters("b")}}), DomainError);
  EXPECT_THROW(rank_distance(order, {{letters("a")}}), DomainError);
}

TEST(RankDistance, StaysInRangeAndSymmetricForTotalOrders) {
  CounterRng rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Itemset> xs;
    for (Item i = 0; i < 8; ++i) xs.push_back(Itemset{i});
    BucketOrder a, b;
    for (std::size_t i = xs.size(); i > 1; --i) std::swap(xs[i - 1], xs[rng.next() % i]);
    for (const auto& x : xs) a.push_back({x});
    for (std::size_t i = xs.size(); i > 1; --i) std::swap(xs[i - 1], xs[rng.next() % i]);
    for (const auto& x : xs) b.push_back({x});
    const double d = rank_distance(a, b);
    EXPECT_GE(d, 0.0);
    EXPECT_LE(d, 100.0);
    EXPECT_DOUBLE_EQ(d, rank_distance(b, a));
  }
}

TEST(RankDistance, FreeSetsOfRunningExampleAtHighAlpha) {
  const auto db = testing::running_example();
  const auto curve = rank_distance_curve(db, PredicateKind::Free, {0.9}, 0);
  ASSERT_EQ(curve.size(), 1u);
  ASSERT_TRUE(curve[0].distance.has_value());
  EXPECT_DOUBLE_EQ(*curve[0].distance, 0.0);
}

TEST(NoiseCompliance, NoNoiseGivesFullCompliance) {
  const auto db = testing::random_db(2, 8, 30, 0.4);
  const auto result = noise_compliance(db, 0.0, 1, 2, 10);
  EXPECT_FALSE(result.scores.empty());
  for (double s : result.scores) EXPECT_DOUBLE_EQ(s, 1.0);
  EXPECT_DOUBLE_EQ(result.mean(), 1.0);
}

}  // namespace
}  // namespace robustmine
