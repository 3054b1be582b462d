#include <gtest/gtest.h>

#include "robustmine/errors.hpp"
#include "robustmine/mining.hpp"
#include "robustmine/oracle.hpp"
#include "robustmine/robustness.hpp"
#include "support/test_support.hpp"

namespace robustmine {
namespace {

using testing::letters;

class RunningExample : public ::testing::Test {
 protected:
  TransactionDatabase db = testing::running_example();
  ClosedFamily family = closed_family(db, 1);
  EvaluationContext ctx{&family};
};

TEST_F(RunningExample, TotallyShatteredAtOneThird) {
  EXPECT_NEAR(robustness_totally_shattered(db, letters("ab"), Alpha(1.0 / 3.0)), 25.0 / 729.0, 1e-12);
}

TEST_F(RunningExample, FreeValues) {
  EXPECT_NEAR(robustness_free(db, letters("ab"), Alpha(0.5)), 0.375, 1e-12);
  EXPECT_NEAR(robustness_free(db, letters("ae"), Alpha(0.5)), 0.4375, 1e-12);
  EXPECT_DOUBLE_EQ(robustness_free(db, Itemset{}, Alpha(0.3)), 1.0);
}

TEST_F(RunningExample, NonDerivableValues) {
  EXPECT_NEAR(robustness_non_derivable(db, letters("ac"), Alpha(0.5)), 21.0 / 32.0, 1e-12);
  EXPECT_NEAR(robustness_non_derivable(db, Itemset{}, Alpha(0.5)), 0.984375, 1e-12);
}

TEST_F(RunningExample, ClosedValues) {
  for (double a : {0.1, 0.5, 0.9}) {
    EXPECT_NEAR(robustness(db, letters("bde"), PredicateKind::Closed, Alpha(a), ctx),
                1.0 - (1.0 - a) * (1.0 - a), 1e-12);
  }
  EXPECT_NEAR(robustness(db, letters("e"), PredicateKind::Closed, Alpha(0.5), ctx), 0.5, 1e-12);
  EXPECT_DOUBLE_EQ(robustness(db, letters("bd"), PredicateKind::Closed, Alpha(0.5), ctx), 0.0);
}

TEST_F(RunningExample, ClosedNeedsFamily) {
  EXPECT_THROW(robustness(db, letters("e"), PredicateKind::Closed, Alpha(0.5)), ConfigError);
}

TEST(Robustness, AlphaEndpoints) {
  const auto db = testing::running_example();
  const ClosedFamily family = closed_family(db, 1);
  const EvaluationContext ctx{&family};
  for (const Itemset& x : testing::all_itemsets(5, 5)) {
    for (PredicateKind kind : kAllPredicates) {
      EXPECT_DOUBLE_EQ(robustness(db, x, kind, Alpha(1.0), ctx), evaluate_predicate(db, x, kind) ? 1.0 : 0.0);
    }
    if (!x.empty()) EXPECT_DOUBLE_EQ(robustness(db, x, PredicateKind::Free, Alpha(0.0), ctx), 0.0);
  }
}

TEST(Robustness, AlphaValidation) {
  EXPECT_THROW(Alpha(1.5), DomainError);
  EXPECT_THROW(Alpha(-0.1), DomainError);
  EXPECT_DOUBLE_EQ(Alpha(0.25).beta(), 0.75);
}

TEST(Robustness, OrfAndPower) {
  const Count cells[] = {1, 2};
  EXPECT_NEAR(orf(cells, Alpha(0.5)), 0.375, 1e-15);
  EXPECT_DOUBLE_EQ(power(0.0, 0), 1.0);
  EXPECT_DOUBLE_EQ(power(0.5, 10), 1.0 / 1024.0);
}

TEST(Robustness, MatchesExhaustiveOnRandomData) {
  for (const auto& entry : testing::small_corpus(40)) {
    const ClosedFamily family = closed_family(entry.db, 1);
    const EvaluationContext ctx{&family};
    for (const Itemset& x : testing::all_itemsets(entry.db.num_items(), 3)) {
      for (PredicateKind kind : kAllPredicates) {
        const auto counts = satisfying_counts(entry.db, x, kind);
        for (double a : {0.2, 0.6, 0.95}) {
          EXPECT_NEAR(robustness(entry.db, x, kind, Alpha(a), ctx), robustness_from_counts(counts, Alpha(a)),
                      1e-9)
              << "seed " << entry.seed << " X={" << x.to_string() << "} " << to_string(kind);
        }
      }
    }
  }
}

TEST(Robustness, SubsetViewsUseOnlyTheirRows) {
  const auto db = testing::running_example();
  const DatabaseView view(db, {0, 1, 5});
  // rows e, bde, a: ab has cells [0,0]=1, [1,0]=1, [0,1]=1, [1,1]=0.
  EXPECT_DOUBLE_EQ(robustness_totally_shattered(view, letters("ab"), Alpha(0.5)), 0.0);
  EXPECT_NEAR(robustness_free(view, letters("ab"), Alpha(0.5)), 0.25, 1e-15);
}

}  // namespace
}  // namespace robustmine
