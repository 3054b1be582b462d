#include "robustmine/predicates.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include "robustmine/errors.hpp"

namespace robustmine {

std::string_view to_string(PredicateKind kind) {
  switch (kind) {
    case PredicateKind::Closed: return "closed";
    case PredicateKind::Free: return "free";
    case PredicateKind::NonDerivable: return "ndi";
    case PredicateKind::TotallyShattered: return "ts";
  }
  return "?";
}

std::optional<PredicateKind> parse_predicate(std::string_view name) {
  for (PredicateKind kind : kAllPredicates) {
    if (to_string(kind) == name) return kind;
  }
  return std::nullopt;
}

namespace {

bool is_closed(const DatabaseView& view, const Itemset& x) {
  const TransactionDatabase& db = view.database();
  db.validate(x);
  // Intersection of the rows containing X; X is closed iff it adds no item.
  const std::size_t words = (db.num_items() + 63) / 64;
  std::vector<std::uint64_t> meet(words, ~std::uint64_t{0});
  for (std::size_t i = 0; i < view.size(); ++i) {
    const std::size_t row = view.row_index(i);
    bool has_x = true;
    for (Item item : x) {
      if (!db.contains(row, item)) {
        has_x = false;
        break;
      }
    }
    if (!has_x) continue;
    const auto r = db.row_words(row);
    for (std::size_t w = 0; w < words; ++w) meet[w] &= r[w];
  }
  for (Item item : x) meet[item >> 6] &= ~(std::uint64_t{1} << (item & 63));
  if (words && (db.num_items() & 63)) meet.back() &= (std::uint64_t{1} << (db.num_items() & 63)) - 1;
  return std::all_of(meet.begin(), meet.end(), [](std::uint64_t w) { return w == 0; });
}

bool is_free(const DatabaseView& view, const Itemset& x) {
  const auto counts = one_zero_counts(view, x);
  return std::all_of(counts.begin(), counts.end(), [](Count c) { return c > 0; });
}

}  // namespace

bool evaluate_predicate(const DatabaseView& view, const Itemset& x, PredicateKind kind,
                        std::size_t cell_width_limit) {
  switch (kind) {
    case PredicateKind::Closed: return is_closed(view, x);
    case PredicateKind::Free: return is_free(view, x);
    case PredicateKind::TotallyShattered: {
      const CellTable cells = cell_table(view, x, cell_width_limit);
      return std::all_of(cells.counts().begin(), cells.counts().end(),
                         [](Count c) { return c > 0; });
    }
    case PredicateKind::NonDerivable: {
      const CellTable cells = cell_table(view, x, cell_width_limit);
      if (x.empty()) return view.size() > 0;
      bool odd_zero = false;
      bool even_zero = false;
      for (std::uint64_t code = 0; code < cells.num_cells(); ++code) {
        if (cells.count(code) != 0) continue;
        (std::popcount(code) & 1 ? odd_zero : even_zero) = true;
      }
      return !(odd_zero && even_zero);
    }
  }
  return false;
}

DerivabilityBounds derivability_bounds(const DatabaseView& view, const Itemset& x,
                                       std::size_t cell_width_limit) {
  if (x.empty()) throw DomainError("derivability bounds need a non-empty itemset");
  const CellTable cells = cell_table(view, x, cell_width_limit);
  const std::size_t width = x.size();
  const std::uint64_t full = (std::uint64_t{1} << width) - 1;
  Count min_even_zeros = std::numeric_limits<Count>::max();
  Count min_odd_zeros = std::numeric_limits<Count>::max();
  for (std::uint64_t code = 0; code <= full; ++code) {
    const int zeros = static_cast<int>(width) - std::popcount(code);
    Count& slot = (zeros & 1) ? min_odd_zeros : min_even_zeros;
    slot = std::min(slot, cells.count(code));
  }
  const Count supp = cells.count(full);
  return {supp - min_even_zeros, supp + min_odd_zeros};
}

}  // namespace robustmine
