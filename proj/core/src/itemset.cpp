#include "robustmine/itemset.hpp"

#include <algorithm>
#include <bit>
#include <charconv>

#include "robustmine/errors.hpp"

namespace robustmine {

namespace {

void normalize(std::vector<Item>& items) {
  std::sort(items.begin(), items.end());
  items.erase(std::unique(items.begin(), items.end()), items.end());
}

}  // namespace

Itemset::Itemset(std::initializer_list<Item> items) : items_(items) { normalize(items_); }

Itemset::Itemset(std::vector<Item> items) : items_(std::move(items)) { normalize(items_); }

Itemset Itemset::parse(std::string_view text) {
  std::vector<Item> items;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == ',')) ++pos;
    if (pos == text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && text[end] != ' ' && text[end] != '\t' && text[end] != ',') ++end;
    Item value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + end, value);
    if (ec != std::errc{} || ptr != text.data() + end) {
      throw DomainError("invalid item id '" + std::string(text.substr(pos, end - pos)) + "'");
    }
    items.push_back(value);
    pos = end;
  }
  return Itemset(std::move(items));
}

bool Itemset::contains(Item item) const {
  return std::binary_search(items_.begin(), items_.end(), item);
}

bool Itemset::is_subset_of(const Itemset& other) const {
  return std::includes(other.items_.begin(), other.items_.end(), items_.begin(), items_.end());
}

std::size_t Itemset::index_of(Item item) const {
  auto it = std::lower_bound(items_.begin(), items_.end(), item);
  if (it == items_.end() || *it != item) return items_.size();
  return static_cast<std::size_t>(it - items_.begin());
}

Itemset Itemset::with(Item item) const {
  Itemset out = *this;
  auto it = std::lower_bound(out.items_.begin(), out.items_.end(), item);
  if (it == out.items_.end() || *it != item) out.items_.insert(it, item);
  return out;
}

Itemset Itemset::without(Item item) const {
  Itemset out = *this;
  auto it = std::lower_bound(out.items_.begin(), out.items_.end(), item);
  if (it != out.items_.end() && *it == item) out.items_.erase(it);
  return out;
}

Itemset Itemset::united(const Itemset& other) const {
  Itemset out;
  std::set_union(items_.begin(), items_.end(), other.items_.begin(), other.items_.end(),
                 std::back_inserter(out.items_));
  return out;
}

std::string Itemset::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < items_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(items_[i]);
  }
  return out;
}

std::size_t ItemsetHash::operator()(const Itemset& x) const noexcept {
  // FNV-1a over the item ids.
  std::uint64_t h = 1469598103934665603ull;
  for (Item item : x) {
    h ^= item;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h ^ (h >> 29));
}

ValueVector::ValueVector(std::initializer_list<int> bits) {
  bits_.reserve(bits.size());
  for (int b : bits) {
    if (b != 0 && b != 1) throw DomainError("value vector entries must be 0 or 1");
    bits_.push_back(b == 1);
  }
}

ValueVector::ValueVector(std::vector<bool> bits) : bits_(std::move(bits)) {}

ValueVector ValueVector::from_code(std::uint64_t code, std::size_t length) {
  if (length > 64) throw DomainError("value vector code limited to 64 bits");
  std::vector<bool> bits(length);
  for (std::size_t i = 0; i < length; ++i) bits[i] = (code >> i) & 1u;
  return ValueVector(std::move(bits));
}

ValueVector ValueVector::all_ones(std::size_t length) {
  return ValueVector(std::vector<bool>(length, true));
}

std::size_t ValueVector::count_ones() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true));
}

std::uint64_t ValueVector::code() const {
  if (bits_.size() > 64) throw DomainError("value vector code limited to 64 bits");
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i]) code |= std::uint64_t{1} << i;
  }
  return code;
}

}  // namespace robustmine
