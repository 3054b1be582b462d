#pragma once

#include <cstdint>
#include <map>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "robustmine/dataset.hpp"
#include "robustmine/ordering.hpp"
#include "robustmine/predicates.hpp"
#include "robustmine/random.hpp"

namespace robustmine::testing {

inline constexpr std::string_view kRunningExampleFimi = "4\n1 3 4\n0 1 2 3 4\n1 3 4\n0 1 2 3 4\n0\n";

/// Six transactions over items a..e: e, bde, abcde, bde, abcde, a.
TransactionDatabase running_example();

/// "bde" -> {1, 3, 4}.
Itemset letters(std::string_view text);

TransactionDatabase random_db(std::uint64_t seed, std::size_t num_items, std::size_t num_rows,
                              double density);

struct CorpusEntry {
  std::uint64_t seed;
  double density;
  TransactionDatabase db;
};

/// Seeded databases with K <= 6, 1 <= |D| <= 10, density in {0.2, 0.5, 0.8}.
std::vector<CorpusEntry> small_corpus(std::size_t count = 120);

/// Every itemset over `num_items` items with at most `max_size` items,
/// ordered by size then lexicographically.
std::vector<Itemset> all_itemsets(std::size_t num_items, std::size_t max_size);

// Reference predicates written from the textbook definitions, by row scans.
Count scan_support(const DatabaseView& db, const Itemset& x);
bool reference_closed(const DatabaseView& db, const Itemset& x);
bool reference_free(const DatabaseView& db, const Itemset& x);
bool reference_totally_shattered(const DatabaseView& db, const Itemset& x);
/// Inclusion-exclusion support bounds over every proper subset.
bool reference_non_derivable(const DatabaseView& db, const Itemset& x);
bool reference_predicate(const DatabaseView& db, const Itemset& x, PredicateKind kind);

/// Coefficients of sum over supersets Y of X of (-1)^{|Y|-|X|} beta^{supp X - supp Y},
/// enumerating all 2^K supersets.
std::map<std::size_t, boost::multiprecision::cpp_int> literal_closed_coefficients(
    const TransactionDatabase& db, const Itemset& x);

/// Non-empty closed itemsets with support >= min_support, from all 2^K itemsets.
std::vector<ClosedItemset> brute_closed(const TransactionDatabase& db, Count min_support);

}  // namespace robustmine::testing
