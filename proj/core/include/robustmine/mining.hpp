#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "robustmine/alpha.hpp"
#include "robustmine/context.hpp"
#include "robustmine/ordering.hpp"
#include "robustmine/predicates.hpp"

namespace robustmine {

struct MiningConfig {
  PredicateKind kind = PredicateKind::Free;
  Alpha alpha{0.5};
  double rho = 0.0;
  Count min_support = 0;
  std::optional<std::size_t> max_size;
  /// Report the empty itemset too (when it qualifies).
  bool include_empty = false;
  std::size_t cell_width_limit = kDefaultCellWidthLimit;
};

struct MinedItemset {
  Itemset itemset;
  Count support = 0;
  double robustness = 0.0;
};

/// Every itemset X with support >= min_support that has the predicate in
/// the full database and robustness >= rho, found levelwise.
///
/// Output is grouped by itemset size (ascending) and ordered by the
/// parameter-free rank within each size. Throws ConfigError for Closed,
/// whose robustness is not anti-monotone.
std::vector<MinedItemset> mine_robust(const TransactionDatabase& db, const MiningConfig& config);

/// All closed itemsets with support >= min_support (min_support >= 1),
/// ordered by size then lexicographically. The empty itemset is closed
/// whenever no item occurs in every transaction; it is reported only on
/// request.
std::vector<ClosedItemset> mine_closed(const TransactionDatabase& db, Count min_support,
                                       bool include_empty = false);

/// mine_closed() packaged for ranking, empty itemset included. A threshold
/// of 1 (or 0) yields a complete family.
ClosedFamily closed_family(const TransactionDatabase& db, Count min_support);

struct TopKOptions {
  Count min_support = 0;
  bool include_empty = false;
  std::size_t min_size = 0;
  std::optional<std::size_t> max_size;
  std::size_t cell_width_limit = kDefaultCellWidthLimit;
  /// Closed only; mined at max(min_support, 1) when absent.
  const ClosedFamily* closed_family = nullptr;
};

/// Mines the itemsets having the predicate (closed miner for Closed), ranks
/// them by the parameter-free order and keeps the first k.
std::vector<RankedItemset> top_k(const TransactionDatabase& db, PredicateKind kind, std::size_t k,
                                 const TopKOptions& options = {});

/// "5" is an absolute count; "0.05" (anything with '.' or an exponent) is a
/// fraction of |D|, rounded up. Throws DomainError.
Count resolve_min_support(std::string_view text, std::size_t db_size);

}  // namespace robustmine
