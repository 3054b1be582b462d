#include "robustmine/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <unordered_map>

#include "robustmine/errors.hpp"
#include "robustmine/parallel.hpp"
#include "robustmine/random.hpp"
#include "robustmine/robustness.hpp"

namespace robustmine {

bool SweepResult::monotone() const {
  for (std::size_t i = 0; i < counts.size(); ++i) {
    for (std::size_t j = 0; j < counts[i].size(); ++j) {
      if (j + 1 < counts[i].size() && rhos[j] <= rhos[j + 1] && counts[i][j] < counts[i][j + 1]) return false;
      if (i + 1 < counts.size() && alphas[i] <= alphas[i + 1] && counts[i][j] > counts[i + 1][j]) return false;
    }
  }
  return true;
}

void SweepResult::write_tsv(std::ostream& out) const {
  out << "alpha\trho\tcount\n";
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    for (std::size_t j = 0; j < rhos.size(); ++j) {
      out << alphas[i] << '\t' << rhos[j] << '\t' << counts[i][j] << '\n';
    }
  }
}

SweepResult sweep(const TransactionDatabase& db, PredicateKind kind, const std::vector<double>& alphas,
                  const std::vector<double>& rhos, Count min_support,
                  std::optional<std::size_t> max_size) {
  if (kind == PredicateKind::Closed) throw ConfigError("sweep supports free, ndi and ts only");
  for (double rho : rhos) {
    if (!(rho >= 0.0 && rho <= 1.0)) throw DomainError("rho must be in [0,1]");
  }
  SweepResult result{kind, min_support, alphas, rhos, {}};
  result.counts.assign(alphas.size(), std::vector<std::size_t>(rhos.size(), 0));
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    MiningConfig config;
    config.kind = kind;
    config.alpha = Alpha(alphas[i]);
    config.rho = 0.0;
    config.min_support = min_support;
    config.max_size = max_size;
    const auto mined = mine_robust(db, config);
    for (std::size_t j = 0; j < rhos.size(); ++j) {
      result.counts[i][j] = static_cast<std::size_t>(std::count_if(
          mined.begin(), mined.end(), [&](const MinedItemset& m) { return m.robustness >= rhos[j]; }));
    }
  }
  return result;
}

TransactionDatabase noise_mix(const TransactionDatabase& db, double eta, std::uint64_t seed) {
  if (!(eta >= 0.0 && eta <= 1.0)) throw DomainError("eta must be in [0,1]");
  const std::size_t k = db.num_items();
  std::vector<double> margin(k, 0.0);
  if (db.size() > 0) {
    for (std::size_t item = 0; item < k; ++item) {
      margin[item] = static_cast<double>(db.cover(static_cast<Item>(item)).count()) /
                     static_cast<double>(db.size());
    }
  }
  const CounterRng rng(seed);
  std::vector<std::vector<Item>> rows(db.size());
  for (std::size_t row = 0; row < db.size(); ++row) {
    for (std::size_t item = 0; item < k; ++item) {
      const std::uint64_t cell = 2 * (static_cast<std::uint64_t>(row) * k + item);
      const auto uniform = [&](std::uint64_t i) { return static_cast<double>(rng.at(i) >> 11) * 0x1.0p-53; };
      const bool value = uniform(cell) < eta ? uniform(cell + 1) < margin[item]
                                             : db.contains(row, static_cast<Item>(item));
      if (value) rows[row].push_back(static_cast<Item>(item));
    }
  }
  return TransactionDatabase(k, std::vector<Tid>(db.tids().begin(), db.tids().end()), rows);
}

std::vector<double> compliance(const std::vector<Itemset>& original, const std::vector<Itemset>& noisy) {
  std::unordered_map<Itemset, std::size_t> position;
  for (std::size_t j = 0; j < noisy.size(); ++j) position.emplace(noisy[j], j);
  std::vector<double> out;
  out.reserve(original.size());
  for (std::size_t i = 0; i < original.size(); ++i) {
    const auto it = position.find(original[i]);
    if (it == position.end()) {
      out.push_back(0.0);
      continue;
    }
    const std::size_t j = it->second;
    out.push_back(1.0 / (static_cast<double>(i > j ? i - j : j - i) + 1.0));
  }
  return out;
}

double rank_distance(const BucketOrder& r1, const BucketOrder& r2) {
  std::unordered_map<Itemset, std::size_t> b1, b2;
  std::vector<const Itemset*> universe;
  for (std::size_t b = 0; b < r1.size(); ++b) {
    for (const Itemset& x : r1[b]) {
      if (!b1.emplace(x, b).second) throw DomainError("duplicate itemset in ranking");
      universe.push_back(&x);
    }
  }
  for (std::size_t b = 0; b < r2.size(); ++b) {
    for (const Itemset& x : r2[b]) {
      if (!b2.emplace(x, b).second) throw DomainError("duplicate itemset in ranking");
    }
  }
  if (b1.size() != b2.size()) throw DomainError("rankings cover different itemsets");
  for (const auto& [x, b] : b1) {
    if (!b2.count(x)) throw DomainError("rankings cover different itemsets");
  }
  const std::uint64_t n = universe.size();
  std::uint64_t pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
  for (const auto& bucket : r1) pairs -= bucket.size() * (bucket.size() - (bucket.empty() ? 0 : 1)) / 2;
  if (pairs == 0) throw DomainError("rank distance undefined: every itemset is tied");

  std::uint64_t discordant = 0;
  for (std::size_t i = 0; i < universe.size(); ++i) {
    const std::size_t p1 = b1.at(*universe[i]), p2 = b2.at(*universe[i]);
    for (std::size_t j = i + 1; j < universe.size(); ++j) {
      const std::size_t q1 = b1.at(*universe[j]), q2 = b2.at(*universe[j]);
      if ((p1 < q1 && p2 > q2) || (p1 > q1 && p2 < q2)) ++discordant;
    }
  }
  return 100.0 * static_cast<double>(discordant) / static_cast<double>(pairs);
}

BucketOrder total_order(const std::vector<RankedItemset>& ranked) {
  BucketOrder out;
  out.reserve(ranked.size());
  for (const RankedItemset& r : ranked) out.push_back({r.itemset});
  return out;
}

BucketOrder robustness_buckets(const TransactionDatabase& db, const std::vector<Itemset>& itemsets,
                               PredicateKind kind, Alpha alpha, const EvaluationContext& context) {
  std::vector<std::pair<double, Itemset>> scored(itemsets.size());
  parallel_for(itemsets.size(), [&](std::size_t i) {
    scored[i] = {robustness(db, itemsets[i], kind, alpha, context), itemsets[i]};
  });
  std::sort(scored.begin(), scored.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second < b.second;
  });
  BucketOrder out;
  for (std::size_t i = 0; i < scored.size(); ++i) {
    if (i == 0 || scored[i - 1].first - scored[i].first > 1e-12) out.emplace_back();
    out.back().push_back(std::move(scored[i].second));
  }
  return out;
}

std::vector<DistancePoint> rank_distance_curve(const TransactionDatabase& db, PredicateKind kind,
                                               const std::vector<double>& alphas, Count min_support,
                                               std::optional<std::size_t> max_size) {
  TopKOptions options;
  options.min_support = min_support;
  options.max_size = max_size;
  ClosedFamily family;
  if (kind == PredicateKind::Closed) {
    family = closed_family(db, min_support);
    options.closed_family = &family;
  }
  const auto ranked = top_k(db, kind, std::numeric_limits<std::size_t>::max(), options);
  std::vector<Itemset> itemsets;
  for (const RankedItemset& r : ranked) itemsets.push_back(r.itemset);
  const BucketOrder parameter_free = total_order(ranked);
  const EvaluationContext context{kind == PredicateKind::Closed ? &family : nullptr};

  std::vector<DistancePoint> out;
  for (double a : alphas) {
    const BucketOrder by_robustness = robustness_buckets(db, itemsets, kind, Alpha(a), context);
    DistancePoint point{a, std::nullopt};
    try {
      point.distance = rank_distance(by_robustness, parameter_free);
    } catch (const DomainError&) {
    }
    out.push_back(point);
  }
  return out;
}

double NoiseCompliance::mean() const {
  if (scores.empty()) return 0.0;
  double sum = 0.0;
  for (double s : scores) sum += s;
  return sum / static_cast<double>(scores.size());
}

NoiseCompliance noise_compliance(const TransactionDatabase& db, double eta, std::uint64_t seed,
                                 Count min_support, std::size_t k) {
  const TransactionDatabase noisy = noise_mix(db, eta, seed);
  TopKOptions options;
  options.min_support = min_support;
  NoiseCompliance out;
  for (const auto& r : top_k(db, PredicateKind::Closed, k, options)) out.original.push_back(r.itemset);
  for (const auto& r : top_k(noisy, PredicateKind::Closed, k, options)) out.noisy.push_back(r.itemset);
  out.scores = compliance(out.original, out.noisy);
  return out;
}

}  // namespace robustmine
