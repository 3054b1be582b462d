#pragma once

#include <cstdint>
#include <vector>

#include "robustmine/alpha.hpp"
#include "robustmine/context.hpp"
#include "robustmine/predicates.hpp"

namespace robustmine {

inline constexpr std::size_t kExhaustiveLimit = 24;

/// Entry j: number of subsamples with exactly j transactions in which X has
/// the predicate. Enumerates all 2^|D| subsamples; CapacityError past
/// kExhaustiveLimit.
std::vector<std::uint64_t> satisfying_counts(const TransactionDatabase& db, const Itemset& x,
                                             PredicateKind kind,
                                             std::size_t cell_width_limit = kDefaultCellWidthLimit);

/// Probability that X keeps the predicate when each transaction survives
/// independently with probability alpha, by full enumeration.
double exhaustive_robustness(const TransactionDatabase& db, const Itemset& x, PredicateKind kind,
                             Alpha alpha);

/// Same sum from precomputed satisfying_counts().
double robustness_from_counts(const std::vector<std::uint64_t>& counts, Alpha alpha);

struct MonteCarloEstimate {
  double estimate = 0.0;
  double standard_error = 0.0;
};

/// Mean predicate indicator over n seeded Bernoulli(alpha) subsamples.
MonteCarloEstimate monte_carlo_robustness(const TransactionDatabase& db, const Itemset& x,
                                          PredicateKind kind, Alpha alpha, std::uint64_t n,
                                          std::uint64_t seed);

/// c_k = number of subsamples of size |D| - k in which X fails the predicate.
std::vector<std::uint64_t> breakdown_vector(const TransactionDatabase& db, const Itemset& x,
                                            PredicateKind kind);

}  // namespace robustmine
