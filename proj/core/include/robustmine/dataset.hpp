#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "robustmine/itemset.hpp"

namespace robustmine {

using Tid = std::int64_t;

/// Default maximum |X| for operations that materialize all 2^|X| cells.
inline constexpr std::size_t kDefaultCellWidthLimit = 20;

/// Fixed-width bitset over the transactions of a database (a "cover").
class RowSet {
 public:
  RowSet() = default;
  explicit RowSet(std::size_t num_rows, bool filled = false);

  std::size_t num_rows() const noexcept { return num_rows_; }
  bool test(std::size_t row) const { return (words_[row >> 6] >> (row & 63)) & 1u; }
  void set(std::size_t row) { words_[row >> 6] |= std::uint64_t{1} << (row & 63); }
  Count count() const;
  RowSet& operator&=(const RowSet& other);
  friend RowSet operator&(RowSet a, const RowSet& b) { return a &= b; }
  friend bool operator==(const RowSet&, const RowSet&) = default;

 private:
  std::size_t num_rows_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Immutable binary transaction database: |D| rows over K items.
///
/// Rows are stored horizontally as packed bit-vectors, and every item also
/// keeps a vertical cover (the RowSet of transactions containing it) so
/// that levelwise mining can intersect covers instead of rescanning rows.
class TransactionDatabase {
 public:
  /// Empty database: no transactions, K = 0.
  TransactionDatabase() = default;

  /// Rows given as item lists; tids are 0..n-1. Items must be < num_items,
  /// repeated items collapse.
  TransactionDatabase(std::size_t num_items, const std::vector<std::vector<Item>>& rows);
  TransactionDatabase(std::size_t num_items, std::vector<Tid> tids,
                      const std::vector<std::vector<Item>>& rows);

  /// Rows given as 0/1 matrix; every row must have the same length.
  static TransactionDatabase from_matrix(const std::vector<std::vector<int>>& matrix);

  std::size_t size() const noexcept { return tids_.size(); }
  bool empty() const noexcept { return tids_.empty(); }
  std::size_t num_items() const noexcept { return num_items_; }
  Tid tid(std::size_t row) const { return tids_[row]; }
  std::span<const Tid> tids() const noexcept { return tids_; }

  bool contains(std::size_t row, Item item) const {
    return (words_[row * words_per_row_ + (item >> 6)] >> (item & 63)) & 1u;
  }
  std::span<const std::uint64_t> row_words(std::size_t row) const {
    return {words_.data() + row * words_per_row_, words_per_row_};
  }
  std::vector<Item> row_items(std::size_t row) const;

  /// Rows containing `item`.
  const RowSet& cover(Item item) const { return covers_[item]; }

  /// Throws DomainError when an item of `x` is >= num_items().
  void validate(const Itemset& x) const;

 private:
  void append_row(Tid tid, const std::vector<Item>& items);
  void build_covers();

  std::size_t num_items_ = 0;
  std::size_t words_per_row_ = 0;
  std::vector<Tid> tids_;
  std::vector<std::uint64_t> words_;
  std::vector<RowSet> covers_;
};

/// A subset of the rows of a database, addressed by row index. Does not
/// copy rows. Implicitly constructible from a database (all rows).
class DatabaseView {
 public:
  DatabaseView(const TransactionDatabase& db) : db_(&db) {}  // NOLINT
  DatabaseView(const TransactionDatabase& db, std::vector<std::uint32_t> rows)
      : db_(&db), rows_(std::move(rows)), full_(false) {}

  const TransactionDatabase& database() const noexcept { return *db_; }
  std::size_t num_items() const noexcept { return db_->num_items(); }
  std::size_t size() const noexcept { return full_ ? db_->size() : rows_.size(); }
  bool is_full() const noexcept { return full_; }
  std::uint32_t row_index(std::size_t i) const {
    return full_ ? static_cast<std::uint32_t>(i) : rows_[i];
  }

 private:
  const TransactionDatabase* db_;
  std::vector<std::uint32_t> rows_;
  bool full_ = true;
};

/// Supports supp(X = v) for every value vector v of an itemset X.
class CellTable {
 public:
  CellTable(Itemset itemset, std::vector<Count> counts);

  const Itemset& itemset() const noexcept { return itemset_; }
  std::size_t num_cells() const noexcept { return counts_.size(); }
  /// Cell addressed by its packed code (bit i = value of item i).
  Count count(std::uint64_t code) const { return counts_[code]; }
  Count count(const ValueVector& v) const;
  std::span<const Count> counts() const noexcept { return counts_; }
  Count total() const;

 private:
  Itemset itemset_;
  std::vector<Count> counts_;
};

/// Code of the cell where every item of an itemset of size `width` is 1
/// except item `zero_at`.
inline std::uint64_t one_zero_code(std::size_t width, std::size_t zero_at) {
  return ((std::uint64_t{1} << width) - 1) & ~(std::uint64_t{1} << zero_at);
}

/// Number of transactions containing every item of X; support(empty) = |D|.
Count support(const DatabaseView& db, const Itemset& x);

/// Number of transactions t with t_X = v.
Count generalized_support(const DatabaseView& db, const Itemset& x, const ValueVector& v);

/// All 2^|X| generalized supports in one pass over the rows.
/// Throws CapacityError when |X| > cell_width_limit.
CellTable cell_table(const DatabaseView& db, const Itemset& x,
                     std::size_t cell_width_limit = kDefaultCellWidthLimit);

/// supp(X = v) for the |X| vectors with a single zero; entry i has the zero
/// at item i. Linear in |D|·|X|, no cell-width limit.
std::vector<Count> one_zero_counts(const DatabaseView& db, const Itemset& x);

/// Rows of `db` containing every item of X.
RowSet cover(const TransactionDatabase& db, const Itemset& x);

/// Reads the FIMI format: one transaction per line, whitespace-separated
/// non-negative item ids. Blank lines are skipped. Throws ParseError.
TransactionDatabase parse_fimi(std::istream& in);
TransactionDatabase parse_fimi_text(std::string_view text);
void write_fimi(std::ostream& out, const TransactionDatabase& db);

/// Optional item labels read from "id<TAB>label" lines.
class LabelMap {
 public:
  LabelMap() = default;
  static LabelMap parse(std::istream& in);

  void set(Item item, std::string label) { labels_[item] = std::move(label); }
  std::optional<std::string> find(Item item) const;
  /// Label of every item, falling back to the numeric id.
  std::string render(const Itemset& x) const;
  bool empty() const noexcept { return labels_.empty(); }

 private:
  std::unordered_map<Item, std::string> labels_;
};

}  // namespace robustmine
