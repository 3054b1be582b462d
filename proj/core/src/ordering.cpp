#include "robustmine/ordering.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "robustmine/errors.hpp"
#include "robustmine/parallel.hpp"

namespace robustmine {

MarginVector::MarginVector(std::initializer_list<Count> values) : values_(values) {
  std::sort(values_.begin(), values_.end());
}

MarginVector::MarginVector(std::vector<Count> values) : values_(std::move(values)) {
  std::sort(values_.begin(), values_.end());
}

MarginVector margin_vector(const DatabaseView& db, const Itemset& x, PredicateKind kind,
                           std::size_t cell_width_limit) {
  switch (kind) {
    case PredicateKind::Free: return MarginVector(one_zero_counts(db, x));
    case PredicateKind::TotallyShattered: {
      const CellTable cells = cell_table(db, x, cell_width_limit);
      return MarginVector(std::vector<Count>(cells.counts().begin(), cells.counts().end()));
    }
    default: throw DomainError("margin vectors exist only for free and totally shattered itemsets");
  }
}

std::strong_ordering compare_sequences(const MarginVector& s, const MarginVector& t) {
  const std::size_t common = std::min(s.size(), t.size());
  for (std::size_t i = 0; i < common; ++i) {
    if (s[i] != t[i]) return s[i] < t[i] ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  if (s.size() == t.size()) return std::strong_ordering::equal;
  // The longer sequence has extra factors, each at most 1.
  return s.size() > t.size() ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::uint64_t seq_diff(const MarginVector& s, const MarginVector& t) {
  const auto order = compare_sequences(s, t);
  if (order == std::strong_ordering::greater) throw ContractError("seq_diff requires s <= t");
  const std::size_t common = std::min(s.size(), t.size());
  for (std::size_t i = 0; i < common; ++i) {
    if (s[i] < t[i]) return t[i] - s[i];
  }
  return kInfiniteDiff;
}

Alpha beta_bound(const Itemset&, const Itemset& y, std::uint64_t d, PredicateKind kind) {
  if (d == kInfiniteDiff) return Alpha(0.0);
  if (d == 0) throw ContractError("seq_diff of ordered margin vectors is at least 1");
  double n = 0.0;
  switch (kind) {
    case PredicateKind::Free: n = static_cast<double>(y.size()); break;
    case PredicateKind::TotallyShattered: n = std::ldexp(1.0, static_cast<int>(y.size())); break;
    default: throw DomainError("beta bounds exist only for free and totally shattered itemsets");
  }
  return Alpha(std::clamp(1.0 - std::pow(n + 1.0, -1.0 / static_cast<double>(d)), 0.0, 1.0));
}

RobustnessPolynomial ndi_polynomial(const DatabaseView& db, const Itemset& x,
                                    std::size_t cell_width_limit) {
  const CellTable cells = cell_table(db, x, cell_width_limit);
  const std::size_t dlen = db.size();
  if (x.empty()) {
    // Only the single cell of size |D|: non-derivable iff it survives.
    const Count all[] = {cells.count(0)};
    return RobustnessPolynomial::from_dense(expand(all, dlen));
  }
  std::vector<Count> odd;
  std::vector<Count> even;
  for (std::uint64_t code = 0; code < cells.num_cells(); ++code) {
    (std::popcount(code) & 1 ? odd : even).push_back(cells.count(code));
  }
  const std::vector<Count> all(cells.counts().begin(), cells.counts().end());
  RobustnessPolynomial p = RobustnessPolynomial::from_dense(expand(odd, dlen));
  p += RobustnessPolynomial::from_dense(expand(even, dlen));
  p -= RobustnessPolynomial::from_dense(expand(all, dlen));
  return p;
}

namespace {

using Words = std::vector<std::uint64_t>;

Words to_words(const Itemset& x, std::size_t num_items) {
  Words w((num_items + 63) / 64, 0);
  for (Item item : x) w[item >> 6] |= std::uint64_t{1} << (item & 63);
  return w;
}

bool words_subset(const Words& a, const Words& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if ((a[i] & b[i]) != a[i]) return false;
  }
  return true;
}

}  // namespace

ClosedCoefficients closed_coefficients(const Itemset& x, std::span<const ClosedItemset> family,
                                       Count supp_x, std::size_t num_items, Count threshold) {
  if (!x.empty() && x.items().back() >= num_items) throw DomainError("itemset item out of range");
  std::vector<Item> universe_items(num_items);
  for (std::size_t i = 0; i < num_items; ++i) universe_items[i] = static_cast<Item>(i);
  const Itemset universe(std::move(universe_items));

  std::vector<ClosedItemset> supersets;
  bool has_universe = false;
  for (const ClosedItemset& y : family) {
    if (!x.is_subset_of(y.itemset)) continue;
    if (y.support > supp_x || (y.itemset == x && y.support != supp_x)) {
      throw DataInconsistencyError("closed superset {" + y.itemset.to_string() + "} has support " +
                                   std::to_string(y.support) + " but supp(X) = " +
                                   std::to_string(supp_x));
    }
    has_universe = has_universe || y.itemset == universe;
    supersets.push_back(y);
  }
  if (!has_universe) supersets.push_back({universe, 0});

  std::sort(supersets.begin(), supersets.end(), [](const ClosedItemset& a, const ClosedItemset& b) {
    if (a.itemset.size() != b.itemset.size()) return a.itemset.size() < b.itemset.size();
    return a.itemset < b.itemset;
  });

  ClosedCoefficients out;
  out.support = supp_x;
  out.threshold = threshold;
  std::vector<Words> masks;
  std::vector<BigInt> e;
  masks.reserve(supersets.size());
  e.reserve(supersets.size());
  for (const ClosedItemset& y : supersets) {
    Words mask = to_words(y.itemset, num_items);
    BigInt value = 0;
    if (y.itemset == x) {
      value = 1;
    } else {
      for (std::size_t j = 0; j < masks.size(); ++j) {
        if (!e[j].is_zero() && words_subset(masks[j], mask) && supersets[j].itemset != y.itemset) {
          value -= e[j];
        }
      }
    }
    out.polynomial.add_term(static_cast<std::size_t>(supp_x - y.support), value);
    out.alternating_sums.emplace_back(y.itemset, value);
    masks.push_back(std::move(mask));
    e.push_back(std::move(value));
  }
  return out;
}

namespace {

bool coefficient_exact(const OrderKey& key, std::size_t k) {
  ClosedCoefficients probe;
  probe.support = key.support;
  probe.threshold = key.threshold;
  return probe.is_exact(k);
}

}  // namespace

KeyComparison compare_keys(const OrderKey& a, const OrderKey& b) {
  if (a.kind != b.kind) throw ContractError("order keys of different predicates are not comparable");
  if (const auto* sa = std::get_if<MarginVector>(&a.payload)) {
    const auto& sb = std::get<MarginVector>(b.payload);
    if (sa->has_zero() && sb.has_zero()) return {std::strong_ordering::equal, false};
    return {compare_sequences(*sa, sb), false};
  }
  const auto& pa = std::get<RobustnessPolynomial>(a.payload);
  const auto& pb = std::get<RobustnessPolynomial>(b.payload);
  const auto k = first_difference(pa, pb);
  KeyComparison result;
  if (!k) {
    result.order = std::strong_ordering::equal;
    result.estimated = a.kind == PredicateKind::Closed && (a.threshold != 0 || b.threshold != 0);
    return result;
  }
  result.order = pa.coefficient(*k) < pb.coefficient(*k) ? std::strong_ordering::less
                                                         : std::strong_ordering::greater;
  result.estimated = a.kind == PredicateKind::Closed &&
                     !(coefficient_exact(a, *k) && coefficient_exact(b, *k));
  return result;
}

bool ranks_before(const OrderKey& a, const OrderKey& b) {
  const auto order = compare_keys(a, b).order;
  if (order != 0) return order > 0;
  if (a.support != b.support) return a.support > b.support;
  return a.itemset < b.itemset;
}

OrderKey order_key(const DatabaseView& db, const Itemset& x, PredicateKind kind,
                   const EvaluationContext& context) {
  OrderKey key;
  key.kind = kind;
  key.itemset = x;
  key.support = support(db, x);
  switch (kind) {
    case PredicateKind::Free:
    case PredicateKind::TotallyShattered:
      key.payload = margin_vector(db, x, kind, context.cell_width_limit);
      break;
    case PredicateKind::NonDerivable:
      key.payload = ndi_polynomial(db, x, context.cell_width_limit);
      break;
    case PredicateKind::Closed: {
      if (!context.closed_family) throw ConfigError("closed ranking needs a closed family");
      const ClosedFamily& family = *context.closed_family;
      auto coeffs = closed_coefficients(x, family.members, key.support, db.num_items(),
                                        family.min_support);
      key.threshold = family.min_support;
      key.payload = std::move(coeffs.polynomial);
      break;
    }
  }
  return key;
}

std::vector<RankedItemset> rank_keys(std::vector<OrderKey> keys) {
  std::sort(keys.begin(), keys.end(), ranks_before);
  std::vector<RankedItemset> out;
  out.reserve(keys.size());
  for (std::size_t i = 0; i < keys.size(); ++i) {
    RankedItemset entry;
    entry.itemset = keys[i].itemset;
    entry.support = keys[i].support;
    entry.estimated = i > 0 && compare_keys(keys[i - 1], keys[i]).estimated;
    out.push_back(std::move(entry));
  }
  for (std::size_t i = 0; i < keys.size(); ++i) out[i].key = std::move(keys[i]);
  return out;
}

std::vector<RankedItemset> rank(const TransactionDatabase& db, std::span<const Itemset> itemsets,
                                PredicateKind kind, const EvaluationContext& context) {
  if (kind == PredicateKind::Closed && !context.closed_family) {
    throw ConfigError("closed ranking needs a closed family");
  }
  std::vector<OrderKey> keys(itemsets.size());
  parallel_for(itemsets.size(),
               [&](std::size_t i) { keys[i] = order_key(db, itemsets[i], kind, context); });
  return rank_keys(std::move(keys));
}

}  // namespace robustmine
