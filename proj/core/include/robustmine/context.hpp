#pragma once

#include <vector>

#include "robustmine/dataset.hpp"

namespace robustmine {

struct ClosedItemset {
  Itemset itemset;
  Count support = 0;

  friend bool operator==(const ClosedItemset&, const ClosedItemset&) = default;
};

/// Closed itemsets of a database, as produced by a closed miner run at
/// `min_support`. A family mined at threshold 1, completed with the full
/// item universe at support 0, contains every closed itemset; such a family
/// is marked complete with `min_support == 0`.
struct ClosedFamily {
  std::vector<ClosedItemset> members;
  Count min_support = 0;

  bool complete() const noexcept { return min_support == 0; }
};

/// Everything a scoring call may need besides the database and itemset.
struct EvaluationContext {
  /// Required when scoring or ranking closed itemsets.
  const ClosedFamily* closed_family = nullptr;
  std::size_t cell_width_limit = kDefaultCellWidthLimit;
};

}  // namespace robustmine
