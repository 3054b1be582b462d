#pragma once

#include <span>

#include "robustmine/alpha.hpp"
#include "robustmine/context.hpp"
#include "robustmine/dataset.hpp"
#include "robustmine/predicates.hpp"

namespace robustmine {

/// base^exp by repeated squaring; power(0, 0) = 1.
double power(double base, Count exp);

/// Probability that every listed cell keeps at least one transaction:
/// prod_i (1 - (1 - alpha)^{cells_i}). Empty list gives 1.
double orf(std::span<const Count> cells, Alpha alpha);

// Closed-form probability that X keeps its property in a random subsample
// keeping each transaction with probability alpha.

double robustness_free(const DatabaseView& db, const Itemset& x, Alpha alpha);
double robustness_totally_shattered(const DatabaseView& db, const Itemset& x, Alpha alpha,
                                    std::size_t cell_width_limit = kDefaultCellWidthLimit);
/// 1 - (1 - o(odd-ones cells)) (1 - o(even-ones cells)).
double robustness_non_derivable(const DatabaseView& db, const Itemset& x, Alpha alpha,
                                std::size_t cell_width_limit = kDefaultCellWidthLimit);

/// Inclusion-exclusion over closed supersets, evaluated from the exact
/// coefficients. `family` must hold every closed itemset of `db`
/// (see ClosedFamily); an incomplete family silently gives an estimate.
double robustness_closed_exact(const DatabaseView& db, const Itemset& x, Alpha alpha,
                               const ClosedFamily& family);

/// Dispatches on kind. Throws ConfigError for Closed without a family.
double robustness(const DatabaseView& db, const Itemset& x, PredicateKind kind, Alpha alpha,
                  const EvaluationContext& context = {});

}  // namespace robustmine
