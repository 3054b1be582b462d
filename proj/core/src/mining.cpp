#include "robustmine/mining.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <string>
#include <unordered_set>

#include "robustmine/errors.hpp"
#include "robustmine/parallel.hpp"
#include "robustmine/robustness.hpp"

namespace robustmine {

namespace {

struct Node {
  Itemset itemset;
  RowSet cover;
};

// Candidates of size k+1 from the sorted survivors of size k: join pairs
// sharing their first k-1 items, drop any with a missing k-subset.
std::vector<Node> next_candidates(const TransactionDatabase& db, const std::vector<Node>& level) {
  std::vector<Node> out;
  if (level.empty()) return out;
  if (level.front().itemset.empty()) {
    for (std::size_t item = 0; item < db.num_items(); ++item) {
      out.push_back({Itemset{static_cast<Item>(item)}, db.cover(static_cast<Item>(item))});
    }
    return out;
  }
  std::unordered_set<Itemset> present;
  for (const Node& n : level) present.insert(n.itemset);
  const std::size_t k = level.front().itemset.size();
  for (std::size_t i = 0; i < level.size(); ++i) {
    const auto a = level[i].itemset.items();
    for (std::size_t j = i + 1; j < level.size(); ++j) {
      const auto b = level[j].itemset.items();
      if (!std::equal(a.begin(), a.end() - 1, b.begin())) break;
      const Itemset candidate = level[i].itemset.with(b.back());
      bool all_subsets = true;
      for (std::size_t drop = 0; drop + 2 < k + 1 && all_subsets; ++drop) {
        all_subsets = present.count(candidate.without(candidate[drop])) > 0;
      }
      if (!all_subsets) continue;
      out.push_back({candidate, level[i].cover & db.cover(b.back())});
    }
  }
  return out;
}

}  // namespace

std::vector<MinedItemset> mine_robust(const TransactionDatabase& db, const MiningConfig& config) {
  if (config.kind == PredicateKind::Closed) {
    throw ConfigError("closed robustness is not anti-monotone; use the closed ranking instead");
  }
  if (!(config.rho >= 0.0)) throw DomainError("rho must be non-negative");
  const EvaluationContext context{nullptr, config.cell_width_limit};

  struct Scored {
    bool keep = false;
    Count support = 0;
    double robustness = 0.0;
  };
  auto score = [&](const Node& node) {
    Scored s;
    s.support = node.cover.count();
    if (s.support < config.min_support) return s;
    if (!evaluate_predicate(db, node.itemset, config.kind, config.cell_width_limit)) return s;
    s.robustness = robustness(db, node.itemset, config.kind, config.alpha, context);
    s.keep = s.robustness >= config.rho;
    return s;
  };

  std::vector<MinedItemset> found;
  std::vector<Node> level{{Itemset{}, RowSet(db.size(), true)}};
  const Scored root = score(level.front());
  if (!root.keep) return found;
  if (config.include_empty) found.push_back({Itemset{}, root.support, root.robustness});

  const std::size_t max_size = config.max_size.value_or(db.num_items());
  for (std::size_t size = 1; size <= max_size && !level.empty(); ++size) {
    std::vector<Node> candidates = next_candidates(db, level);
    std::vector<Scored> scores(candidates.size());
    parallel_for(candidates.size(), [&](std::size_t i) { scores[i] = score(candidates[i]); });
    level.clear();
    const std::size_t first = found.size();
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (!scores[i].keep) continue;
      found.push_back({candidates[i].itemset, scores[i].support, scores[i].robustness});
      level.push_back(std::move(candidates[i]));
    }
    // Within one size, report in parameter-free rank order.
    std::vector<OrderKey> keys(found.size() - first);
    parallel_for(keys.size(), [&](std::size_t i) {
      keys[i] = order_key(db, found[first + i].itemset, config.kind, context);
    });
    std::vector<std::size_t> order(keys.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return ranks_before(keys[a], keys[b]); });
    std::vector<MinedItemset> sorted;
    sorted.reserve(order.size());
    for (std::size_t i : order) sorted.push_back(std::move(found[first + i]));
    std::move(sorted.begin(), sorted.end(), found.begin() + static_cast<std::ptrdiff_t>(first));
  }
  return found;
}

namespace {

// Prefix-preserving closure extension over vertical covers: each closed set
// is reached exactly once from its unique parent.
class ClosedMiner {
 public:
  ClosedMiner(const TransactionDatabase& db, Count min_support, bool include_empty)
      : db_(db), min_support_(min_support), include_empty_(include_empty), words_((db.num_items() + 63) / 64) {}

  std::vector<ClosedItemset> run() {
    RowSet all(db_.size(), true);
    if (all.count() < min_support_) return {};
    const auto root = closure(all);
    expand(root, all, 0);
    std::sort(out_.begin(), out_.end(), [](const ClosedItemset& a, const ClosedItemset& b) {
      if (a.itemset.size() != b.itemset.size()) return a.itemset.size() < b.itemset.size();
      return a.itemset < b.itemset;
    });
    return std::move(out_);
  }

 private:
  using Words = std::vector<std::uint64_t>;

  Words closure(const RowSet& rows) const {
    Words meet(words_, ~std::uint64_t{0});
    if (words_ && (db_.num_items() & 63)) meet.back() = (std::uint64_t{1} << (db_.num_items() & 63)) - 1;
    for (std::size_t row = 0; row < db_.size(); ++row) {
      if (!rows.test(row)) continue;
      const auto r = db_.row_words(row);
      for (std::size_t w = 0; w < words_; ++w) meet[w] &= r[w];
    }
    return meet;
  }

  static bool has(const Words& w, std::size_t item) { return (w[item >> 6] >> (item & 63)) & 1u; }

  // Items of a and b agree on every index below `limit`.
  bool same_prefix(const Words& a, const Words& b, std::size_t limit) const {
    for (std::size_t item = 0; item < limit; ++item) {
      if (has(a, item) != has(b, item)) return false;
    }
    return true;
  }

  void expand(const Words& closed, const RowSet& rows, std::size_t next_item) {
    std::vector<Item> items;
    for (std::size_t item = 0; item < db_.num_items(); ++item) {
      if (has(closed, item)) items.push_back(static_cast<Item>(item));
    }
    if (include_empty_ || !items.empty()) out_.push_back({Itemset(std::move(items)), rows.count()});
    for (std::size_t e = next_item; e < db_.num_items(); ++e) {
      if (has(closed, e)) continue;
      RowSet extended = rows & db_.cover(static_cast<Item>(e));
      if (extended.count() < min_support_ || extended.count() == 0) continue;
      const Words child = closure(extended);
      if (!same_prefix(child, closed, e)) continue;
      expand(child, extended, e + 1);
    }
  }

  const TransactionDatabase& db_;
  Count min_support_;
  bool include_empty_;
  std::size_t words_;
  std::vector<ClosedItemset> out_;
};

}  // namespace

std::vector<ClosedItemset> mine_closed(const TransactionDatabase& db, Count min_support,
                                       bool include_empty) {
  if (min_support < 1) throw DomainError("closed mining needs min_support >= 1");
  return ClosedMiner(db, min_support, include_empty).run();
}

ClosedFamily closed_family(const TransactionDatabase& db, Count min_support) {
  ClosedFamily family;
  family.members = mine_closed(db, std::max<Count>(min_support, 1), true);
  family.min_support = min_support <= 1 ? 0 : min_support;
  return family;
}

std::vector<RankedItemset> top_k(const TransactionDatabase& db, PredicateKind kind, std::size_t k,
                                 const TopKOptions& options) {
  if (k < 1) throw DomainError("k must be at least 1");
  std::vector<Itemset> itemsets;
  EvaluationContext context{nullptr, options.cell_width_limit};
  ClosedFamily mined;
  const std::size_t max_size = options.max_size.value_or(db.num_items());
  if (kind == PredicateKind::Closed) {
    if (options.closed_family) {
      context.closed_family = options.closed_family;
    } else {
      mined = closed_family(db, options.min_support);
      context.closed_family = &mined;
    }
    for (const ClosedItemset& c : context.closed_family->members) {
      if (c.support < std::max<Count>(options.min_support, 1)) continue;
      if (c.itemset.size() < options.min_size || c.itemset.size() > max_size) continue;
      if (c.itemset.empty() && !options.include_empty) continue;
      itemsets.push_back(c.itemset);
    }
  } else {
    MiningConfig config;
    config.kind = kind;
    config.alpha = Alpha(1.0);  // robustness at alpha = 1 is the predicate itself
    config.rho = 1.0;
    config.min_support = options.min_support;
    config.max_size = options.max_size;
    config.include_empty = options.include_empty;
    config.cell_width_limit = options.cell_width_limit;
    for (const MinedItemset& m : mine_robust(db, config)) {
      if (m.itemset.size() >= options.min_size) itemsets.push_back(m.itemset);
    }
  }
  auto ranked = rank(db, itemsets, kind, context);
  if (ranked.size() > k) ranked.resize(k);
  return ranked;
}

Count resolve_min_support(std::string_view text, std::size_t db_size) {
  const std::string s(text);
  if (s.empty()) throw DomainError("empty minimum support");
  if (s.find_first_of(".eE") != std::string::npos) {
    double fraction = 0.0;
    try {
      std::size_t used = 0;
      fraction = std::stod(s, &used);
      if (used != s.size()) throw DomainError("");
    } catch (const std::exception&) {
      throw DomainError("invalid minimum support '" + s + "'");
    }
    if (!(fraction >= 0.0 && fraction <= 1.0)) {
      throw DomainError("fractional minimum support must be in [0,1]");
    }
    // Tolerance keeps 0.05 * 100 from rounding up to 6.
    return static_cast<Count>(std::ceil(fraction * static_cast<double>(db_size) - 1e-9));
  }
  Count value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw DomainError("invalid minimum support '" + s + "'");
  }
  return value;
}

}  // namespace robustmine
