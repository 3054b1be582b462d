#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "robustmine/dataset.hpp"

namespace robustmine {

/// The four structural properties an itemset can have in a database.
enum class PredicateKind { Closed, Free, NonDerivable, TotallyShattered };

inline constexpr std::array<PredicateKind, 4> kAllPredicates = {
    PredicateKind::Closed, PredicateKind::Free, PredicateKind::NonDerivable,
    PredicateKind::TotallyShattered};

/// Short names used on the command line: closed, free, ndi, ts.
std::string_view to_string(PredicateKind kind);
std::optional<PredicateKind> parse_predicate(std::string_view name);

/// Whether X has property `kind` in the rows of `db`.
///
/// Conventions for the empty itemset: it is free; it is closed iff no item
/// occurs in every transaction; it is totally shattered and non-derivable
/// iff the database is non-empty.
///
/// Non-derivability is decided from the cell table: X is derivable iff
/// some cell with an odd number of ones and some cell with an even number
/// of ones are both empty.
bool evaluate_predicate(const DatabaseView& db, const Itemset& x, PredicateKind kind,
                        std::size_t cell_width_limit = kDefaultCellWidthLimit);

/// Lower and upper bound on supp(X) derivable from its proper subsets.
struct DerivabilityBounds {
  Count lower;
  Count upper;
  bool derivable() const noexcept { return lower == upper; }
};

/// l = supp(X) - min over cells with an even number of zeros,
/// u = supp(X) + min over cells with an odd number of zeros.
/// Requires |X| >= 1.
DerivabilityBounds derivability_bounds(const DatabaseView& db, const Itemset& x,
                                       std::size_t cell_width_limit = kDefaultCellWidthLimit);

}  // namespace robustmine
