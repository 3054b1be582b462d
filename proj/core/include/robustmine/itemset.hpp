#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace robustmine {

using Item = std::uint32_t;
using Count = std::uint64_t;

/// A set of items kept as a strictly increasing list of item ids.
///
/// Every constructor normalizes its input (sort + dedupe), so an Itemset
/// is always canonical and can be compared, hashed and used as a map key.
/// The default-constructed value is the empty itemset.
class Itemset {
 public:
  Itemset() = default;
  Itemset(std::initializer_list<Item> items);
  explicit Itemset(std::vector<Item> items);

  /// Parses whitespace-separated item ids ("0 3 4"). Throws DomainError.
  static Itemset parse(std::string_view text);

  std::size_t size() const noexcept { return items_.size(); }
  bool empty() const noexcept { return items_.empty(); }
  Item operator[](std::size_t i) const { return items_[i]; }
  std::span<const Item> items() const noexcept { return items_; }
  auto begin() const noexcept { return items_.begin(); }
  auto end() const noexcept { return items_.end(); }

  bool contains(Item item) const;
  bool is_subset_of(const Itemset& other) const;

  /// Position of `item` inside the itemset, or size() if absent.
  std::size_t index_of(Item item) const;

  Itemset with(Item item) const;
  Itemset without(Item item) const;
  Itemset united(const Itemset& other) const;

  /// Space-separated item ids; "" for the empty itemset.
  std::string to_string() const;

  friend bool operator==(const Itemset&, const Itemset&) = default;
  /// Lexicographic order on the sorted item lists.
  friend std::strong_ordering operator<=>(const Itemset& a, const Itemset& b) {
    return a.items_ <=> b.items_;
  }

 private:
  std::vector<Item> items_;
};

struct ItemsetHash {
  std::size_t operator()(const Itemset& x) const noexcept;
};

/// Required values for the items of an itemset: bit i is the value of the
/// i-th (smallest-first) item.
class ValueVector {
 public:
  ValueVector() = default;
  ValueVector(std::initializer_list<int> bits);
  explicit ValueVector(std::vector<bool> bits);

  /// Vector of `length` bits taken from the low bits of `code`.
  static ValueVector from_code(std::uint64_t code, std::size_t length);
  static ValueVector all_ones(std::size_t length);

  std::size_t size() const noexcept { return bits_.size(); }
  bool operator[](std::size_t i) const { return bits_[i]; }
  std::size_t count_ones() const;

  /// Packs the bits into an integer (bit i = value i). Requires size() <= 64.
  std::uint64_t code() const;

  friend bool operator==(const ValueVector&, const ValueVector&) = default;

 private:
  std::vector<bool> bits_;
};

}  // namespace robustmine

template <>
struct std::hash<robustmine::Itemset> : robustmine::ItemsetHash {};
