#include "robustmine/dataset.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "robustmine/errors.hpp"

namespace robustmine {

namespace {

// Item ids beyond this are rejected at parse time; a dense row layout
// would otherwise allocate gigabytes for one stray token.
constexpr std::uint64_t kMaxItemId = (1u << 24) - 1;

std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }

}  // namespace

RowSet::RowSet(std::size_t num_rows, bool filled)
    : num_rows_(num_rows), words_(words_for(num_rows), filled ? ~std::uint64_t{0} : 0) {
  if (filled && (num_rows & 63)) words_.back() = (std::uint64_t{1} << (num_rows & 63)) - 1;
}

Count RowSet::count() const {
  Count n = 0;
  for (std::uint64_t w : words_) n += static_cast<Count>(std::popcount(w));
  return n;
}

RowSet& RowSet::operator&=(const RowSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

TransactionDatabase::TransactionDatabase(std::size_t num_items,
                                         const std::vector<std::vector<Item>>& rows)
    : num_items_(num_items), words_per_row_(words_for(num_items)) {
  tids_.reserve(rows.size());
  words_.reserve(rows.size() * words_per_row_);
  for (std::size_t i = 0; i < rows.size(); ++i) append_row(static_cast<Tid>(i), rows[i]);
  build_covers();
}

TransactionDatabase::TransactionDatabase(std::size_t num_items, std::vector<Tid> tids,
                                         const std::vector<std::vector<Item>>& rows)
    : num_items_(num_items), words_per_row_(words_for(num_items)) {
  if (tids.size() != rows.size()) throw DomainError("tid count does not match row count");
  std::unordered_set<Tid> seen;
  for (Tid t : tids) {
    if (!seen.insert(t).second) throw DomainError("duplicate tid " + std::to_string(t));
  }
  tids_.reserve(rows.size());
  words_.reserve(rows.size() * words_per_row_);
  for (std::size_t i = 0; i < rows.size(); ++i) append_row(tids[i], rows[i]);
  build_covers();
}

TransactionDatabase TransactionDatabase::from_matrix(const std::vector<std::vector<int>>& matrix) {
  const std::size_t k = matrix.empty() ? 0 : matrix.front().size();
  std::vector<std::vector<Item>> rows;
  rows.reserve(matrix.size());
  for (const auto& bits : matrix) {
    if (bits.size() != k) throw DomainError("matrix rows have different lengths");
    std::vector<Item> items;
    for (std::size_t j = 0; j < k; ++j) {
      if (bits[j] != 0 && bits[j] != 1) throw DomainError("matrix entries must be 0 or 1");
      if (bits[j]) items.push_back(static_cast<Item>(j));
    }
    rows.push_back(std::move(items));
  }
  return TransactionDatabase(k, rows);
}

void TransactionDatabase::append_row(Tid tid, const std::vector<Item>& items) {
  tids_.push_back(tid);
  const std::size_t base = words_.size();
  words_.resize(base + words_per_row_, 0);
  for (Item item : items) {
    if (item >= num_items_) {
      throw DomainError("item " + std::to_string(item) + " out of range (K = " +
                        std::to_string(num_items_) + ")");
    }
    words_[base + (item >> 6)] |= std::uint64_t{1} << (item & 63);
  }
}

void TransactionDatabase::build_covers() {
  covers_.assign(num_items_, RowSet(tids_.size()));
  for (std::size_t row = 0; row < tids_.size(); ++row) {
    for (std::size_t w = 0; w < words_per_row_; ++w) {
      std::uint64_t bits = words_[row * words_per_row_ + w];
      while (bits) {
        const int b = std::countr_zero(bits);
        covers_[w * 64 + static_cast<std::size_t>(b)].set(row);
        bits &= bits - 1;
      }
    }
  }
}

std::vector<Item> TransactionDatabase::row_items(std::size_t row) const {
  std::vector<Item> items;
  for (std::size_t w = 0; w < words_per_row_; ++w) {
    std::uint64_t bits = words_[row * words_per_row_ + w];
    while (bits) {
      items.push_back(static_cast<Item>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits))));
      bits &= bits - 1;
    }
  }
  return items;
}

void TransactionDatabase::validate(const Itemset& x) const {
  if (!x.empty() && x.items().back() >= num_items_) {
    throw DomainError("item " + std::to_string(x.items().back()) + " out of range (K = " +
                      std::to_string(num_items_) + ")");
  }
}

CellTable::CellTable(Itemset itemset, std::vector<Count> counts)
    : itemset_(std::move(itemset)), counts_(std::move(counts)) {
  if (counts_.size() != (std::size_t{1} << itemset_.size())) {
    throw DomainError("cell table needs 2^|X| counts");
  }
}

Count CellTable::count(const ValueVector& v) const {
  if (v.size() != itemset_.size()) throw DomainError("value vector length does not match itemset");
  return counts_[v.code()];
}

Count CellTable::total() const {
  Count n = 0;
  for (Count c : counts_) n += c;
  return n;
}

namespace {

// Mask words selecting the items of x, plus the words those items live in.
struct ItemMask {
  std::vector<std::size_t> word_index;
  std::vector<std::uint64_t> mask;
};

ItemMask make_mask(const Itemset& x) {
  ItemMask m;
  for (Item item : x) {
    const std::size_t w = item >> 6;
    if (m.word_index.empty() || m.word_index.back() != w) {
      m.word_index.push_back(w);
      m.mask.push_back(0);
    }
    m.mask.back() |= std::uint64_t{1} << (item & 63);
  }
  return m;
}

// Row restricted to x, packed as a cell code (bit i = value of item i).
std::uint64_t cell_code(const TransactionDatabase& db, std::size_t row, const Itemset& x) {
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (db.contains(row, x[i])) code |= std::uint64_t{1} << i;
  }
  return code;
}

}  // namespace

Count support(const DatabaseView& view, const Itemset& x) {
  const TransactionDatabase& db = view.database();
  db.validate(x);
  if (x.empty()) return view.size();
  if (view.is_full()) return cover(db, x).count();
  const ItemMask m = make_mask(x);
  Count n = 0;
  for (std::size_t i = 0; i < view.size(); ++i) {
    const auto words = db.row_words(view.row_index(i));
    bool match = true;
    for (std::size_t j = 0; j < m.mask.size() && match; ++j) {
      match = (words[m.word_index[j]] & m.mask[j]) == m.mask[j];
    }
    n += match;
  }
  return n;
}

Count generalized_support(const DatabaseView& view, const Itemset& x, const ValueVector& v) {
  if (v.size() != x.size()) throw DomainError("value vector length does not match itemset");
  const TransactionDatabase& db = view.database();
  db.validate(x);
  Count n = 0;
  for (std::size_t i = 0; i < view.size(); ++i) {
    const std::size_t row = view.row_index(i);
    bool match = true;
    for (std::size_t j = 0; j < x.size() && match; ++j) match = db.contains(row, x[j]) == v[j];
    n += match;
  }
  return n;
}

CellTable cell_table(const DatabaseView& view, const Itemset& x, std::size_t cell_width_limit) {
  if (x.size() > cell_width_limit || x.size() >= 63) {
    throw CapacityError("itemset of size " + std::to_string(x.size()) +
                        " exceeds the cell-width limit of " + std::to_string(cell_width_limit));
  }
  const TransactionDatabase& db = view.database();
  db.validate(x);
  std::vector<Count> counts(std::size_t{1} << x.size(), 0);
  for (std::size_t i = 0; i < view.size(); ++i) ++counts[cell_code(db, view.row_index(i), x)];
  return CellTable(x, std::move(counts));
}

std::vector<Count> one_zero_counts(const DatabaseView& view, const Itemset& x) {
  const TransactionDatabase& db = view.database();
  db.validate(x);
  std::vector<Count> counts(x.size(), 0);
  for (std::size_t i = 0; i < view.size(); ++i) {
    const std::size_t row = view.row_index(i);
    std::size_t missing = 0;
    std::size_t where = 0;
    for (std::size_t j = 0; j < x.size() && missing < 2; ++j) {
      if (!db.contains(row, x[j])) {
        ++missing;
        where = j;
      }
    }
    if (missing == 1) ++counts[where];
  }
  return counts;
}

RowSet cover(const TransactionDatabase& db, const Itemset& x) {
  db.validate(x);
  RowSet rows(db.size(), true);
  for (Item item : x) rows &= db.cover(item);
  return rows;
}

TransactionDatabase parse_fimi(std::istream& in) {
  std::vector<std::vector<Item>> rows;
  std::uint64_t max_item = 0;
  bool any_item = false;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::vector<Item> items;
    std::size_t pos = 0;
    bool blank = true;
    while (pos < line.size()) {
      while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
      if (pos == line.size()) break;
      blank = false;
      std::size_t end = pos;
      while (end < line.size() && !std::isspace(static_cast<unsigned char>(line[end]))) ++end;
      const std::string_view token(line.data() + pos, end - pos);
      if (token.front() == '-') {
        throw ParseError(line_no, "negative item id '" + std::string(token) + "'");
      }
      std::uint64_t value = 0;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec == std::errc::result_out_of_range || (ec == std::errc{} && ptr == token.data() + token.size() &&
                                                   value > kMaxItemId)) {
        throw ParseError(line_no, "item id '" + std::string(token) + "' too large");
      }
      if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw ParseError(line_no, "invalid item id '" + std::string(token) + "'");
      }
      items.push_back(static_cast<Item>(value));
      max_item = std::max(max_item, value);
      any_item = true;
      pos = end;
    }
    if (blank) continue;
    std::sort(items.begin(), items.end());
    items.erase(std::unique(items.begin(), items.end()), items.end());
    rows.push_back(std::move(items));
  }
  const std::size_t k = any_item ? static_cast<std::size_t>(max_item) + 1 : 0;
  return TransactionDatabase(k, rows);
}

TransactionDatabase parse_fimi_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_fimi(in);
}

void write_fimi(std::ostream& out, const TransactionDatabase& db) {
  for (std::size_t row = 0; row < db.size(); ++row) {
    const auto items = db.row_items(row);
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (i) out << ' ';
      out << items[i];
    }
    out << '\n';
  }
}

LabelMap LabelMap::parse(std::istream& in) {
  LabelMap map;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) throw ParseError(line_no, "expected 'id<TAB>label'");
    Item id = 0;
    auto [ptr, ec] = std::from_chars(line.data(), line.data() + tab, id);
    if (ec != std::errc{} || ptr != line.data() + tab) {
      throw ParseError(line_no, "invalid item id '" + line.substr(0, tab) + "'");
    }
    map.set(id, line.substr(tab + 1));
  }
  return map;
}

std::optional<std::string> LabelMap::find(Item item) const {
  auto it = labels_.find(item);
  if (it == labels_.end()) return std::nullopt;
  return it->second;
}

std::string LabelMap::render(const Itemset& x) const {
  std::string out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) out += ' ';
    auto label = find(x[i]);
    out += label ? *label : std::to_string(x[i]);
  }
  return out;
}

}  // namespace robustmine
