#include <gtest/gtest.h>

#include <algorithm>

#include "robustmine/errors.hpp"
#include "robustmine/mining.hpp"
#include "robustmine/robustness.hpp"
#include "support/test_support.hpp"

namespace robustmine {
namespace {

using testing::letters;

std::vector<Itemset> itemsets_of(const std::vector<MinedItemset>& mined) {
  std::vector<Itemset> out;
  for (const auto& m : mined) out.push_back(m.itemset);
  std::sort(out.begin(), out.end());
  return out;
}

TEST(MineRobust, FreeSetsAtRhoZero) {
  const auto db = testing::running_example();
  MiningConfig config;
  config.kind = PredicateKind::Free;
  config.include_empty = true;
  const auto mined = mine_robust(db, config);
  EXPECT_EQ(mined.size(), 9u);
  EXPECT_EQ(mined.front().itemset, Itemset{});
}

TEST(MineRobust, TotallyShatteredExample) {
  const auto db = testing::running_example();
  MiningConfig config;
  config.kind = PredicateKind::TotallyShattered;
  config.alpha = Alpha(1.0 / 3.0);
  config.rho = 0.03;
  const auto mined = mine_robust(db, config);
  const auto it = std::find_if(mined.begin(), mined.end(), [](const auto& m) { return m.itemset == letters("ab"); });
  ASSERT_NE(it, mined.end());
  EXPECT_EQ(it->support, 2u);
  EXPECT_NEAR(it->robustness, 25.0 / 729.0, 1e-12);
}

TEST(MineRobust, OutputGroupedBySizeInRankOrder) {
  const auto db = testing::running_example();
  MiningConfig config;
  config.kind = PredicateKind::Free;
  const auto mined = mine_robust(db, config);
  for (std::size_t i = 1; i < mined.size(); ++i) {
    EXPECT_LE(mined[i - 1].itemset.size(), mined[i].itemset.size());
  }
  // size 2: ae ranks before ab and ad.
  const auto first_pair = std::find_if(mined.begin(), mined.end(), [](const auto& m) { return m.itemset.size() == 2; });
  ASSERT_NE(first_pair, mined.end());
  EXPECT_EQ(first_pair->itemset, letters("ae"));
}

TEST(MineRobust, RejectsClosedAndBadRho) {
  const auto db = testing::running_example();
  MiningConfig config;
  config.kind = PredicateKind::Closed;
  EXPECT_THROW(mine_robust(db, config), ConfigError);
  config.kind = PredicateKind::Free;
  config.rho = -0.5;
  EXPECT_THROW(mine_robust(db, config), DomainError);
}

TEST(MineRobust, MatchesBruteForceFilter) {
  for (const auto& entry : testing::small_corpus(60)) {
    const auto& db = entry.db;
    for (PredicateKind kind : {PredicateKind::Free, PredicateKind::NonDerivable, PredicateKind::TotallyShattered}) {
      for (double rho : {0.0, 0.3, 0.8}) {
        for (Count tau : {Count{0}, Count{2}}) {
          MiningConfig config;
          config.kind = kind;
          config.alpha = Alpha(0.7);
          config.rho = rho;
          config.min_support = tau;
          config.include_empty = true;
          std::vector<Itemset> expected;
          for (const Itemset& x : testing::all_itemsets(db.num_items(), db.num_items())) {
            if (support(db, x) >= tau && testing::reference_predicate(db, x, kind) &&
                robustness(db, x, kind, config.alpha) >= rho) {
              expected.push_back(x);
            }
          }
          std::sort(expected.begin(), expected.end());
          EXPECT_EQ(itemsets_of(mine_robust(db, config)), expected)
              << "seed " << entry.seed << " " << to_string(kind) << " rho " << rho << " tau " << tau;
        }
      }
    }
  }
}

TEST(MineRobust, MaxSizeAndEmptyFlag) {
  const auto db = testing::running_example();
  MiningConfig config;
  config.max_size = 1;
  const auto mined = mine_robust(db, config);
  EXPECT_EQ(mined.size(), 5u);
  config.max_size = 0;
  config.include_empty = true;
  EXPECT_EQ(mine_robust(db, config).size(), 1u);
}

TEST(MineClosed, RunningExample) {
  const auto db = testing::running_example();
  const auto closed = mine_closed(db, 1);
  EXPECT_EQ(closed, (std::vector<ClosedItemset>{{letters("a"), 3}, {letters("e"), 5}, {letters("bde"), 4},
                                                {letters("abcde"), 2}}));
  EXPECT_EQ(mine_closed(db, 3).size(), 3u);
  EXPECT_THROW(mine_closed(db, 0), DomainError);
}

TEST(MineClosed, MatchesBruteForce) {
  for (const auto& entry : testing::small_corpus(120)) {
    for (Count tau : {Count{1}, Count{2}, Count{4}}) {
      EXPECT_EQ(mine_closed(entry.db, tau), testing::brute_closed(entry.db, tau)) << "seed " << entry.seed;
    }
  }
}

TEST(ClosedFamily, CompletenessFlag) {
  const auto db = testing::running_example();
  EXPECT_TRUE(closed_family(db, 1).complete());
  EXPECT_TRUE(closed_family(db, 0).complete());
  EXPECT_FALSE(closed_family(db, 2).complete());
}

TEST(TopK, ClosedRunningExample) {
  const auto db = testing::running_example();
  const auto top = top_k(db, PredicateKind::Closed, 4);
  ASSERT_EQ(top.size(), 4u);
  EXPECT_EQ(top[0].itemset, letters("abcde"));
  EXPECT_EQ(top[3].itemset, letters("a"));
}

TEST(TopK, FreePairFilter) {
  const auto db = testing::running_example();
  TopKOptions options;
  options.min_support = 2;
  options.min_size = 2;
  options.max_size = 2;
  const auto top = top_k(db, PredicateKind::Free, 2, options);
  ASSERT_EQ(top.size(), 2u);
  EXPECT_EQ(top[0].itemset, letters("ae"));
  EXPECT_EQ(top[1].itemset, letters("ab"));
  EXPECT_THROW(top_k(db, PredicateKind::Free, 0), DomainError);
}

TEST(MinSupport, Resolution) {
  EXPECT_EQ(resolve_min_support("5", 100), 5u);
  EXPECT_EQ(resolve_min_support("0.05", 100), 5u);
  EXPECT_EQ(resolve_min_support("0.051", 100), 6u);
  EXPECT_EQ(resolve_min_support("1e-1", 30), 3u);
  EXPECT_THROW(resolve_min_support("1.5", 10), DomainError);
  EXPECT_THROW(resolve_min_support("x", 10), DomainError);
  EXPECT_THROW(resolve_min_support("-2", 10), DomainError);
}

}  // namespace
}  // namespace robustmine
