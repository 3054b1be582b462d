#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "robustmine/mining.hpp"

namespace robustmine {

struct SweepResult {
  PredicateKind kind = PredicateKind::Free;
  Count min_support = 0;
  std::vector<double> alphas;
  std::vector<double> rhos;
  /// counts[i][j]: itemsets mined at alphas[i], rhos[j].
  std::vector<std::vector<std::size_t>> counts;

  /// Counts non-increasing in rho and non-decreasing in alpha.
  bool monotone() const;
  /// Columns: alpha, rho, count.
  void write_tsv(std::ostream& out) const;
};

/// Robustness of every predicate holder is computed once per alpha and
/// thresholded at each rho. ConfigError for Closed.
SweepResult sweep(const TransactionDatabase& db, PredicateKind kind, const std::vector<double>& alphas,
                  const std::vector<double>& rhos, Count min_support,
                  std::optional<std::size_t> max_size = std::nullopt);

/// Each cell is replaced, with probability eta, by a draw from an
/// independent Bernoulli with that item's column frequency.
TransactionDatabase noise_mix(const TransactionDatabase& db, double eta, std::uint64_t seed);

/// 1/(|i-j|+1) for each itemset of `original`, 0 where missing from `noisy`.
std::vector<double> compliance(const std::vector<Itemset>& original, const std::vector<Itemset>& noisy);

/// Ranking with ties: each bucket holds equally ranked itemsets.
using BucketOrder = std::vector<std::vector<Itemset>>;

/// 100 * discordant pairs / b, where b counts the pairs not tied in `r1`.
/// Throws DomainError when the universes differ or b = 0.
double rank_distance(const BucketOrder& r1, const BucketOrder& r2);

/// One singleton bucket per ranked itemset.
BucketOrder total_order(const std::vector<RankedItemset>& ranked);

/// Buckets by robustness at alpha, highest first; values within 1e-12 of
/// their neighbour share a bucket.
BucketOrder robustness_buckets(const TransactionDatabase& db, const std::vector<Itemset>& itemsets,
                               PredicateKind kind, Alpha alpha, const EvaluationContext& context = {});

struct DistancePoint {
  double alpha = 0.0;
  /// Missing when every itemset has the same robustness.
  std::optional<double> distance;
};

/// Distance between the parameter-free ranking of all predicate holders and
/// the robustness ranking at each alpha.
std::vector<DistancePoint> rank_distance_curve(const TransactionDatabase& db, PredicateKind kind,
                                               const std::vector<double>& alphas, Count min_support,
                                               std::optional<std::size_t> max_size = std::nullopt);

struct NoiseCompliance {
  std::vector<Itemset> original;
  std::vector<Itemset> noisy;
  /// Parallel to `original`.
  std::vector<double> scores;
  double mean() const;
};

/// Top-k closed rankings of db and of noise_mix(db, eta, seed), compared.
NoiseCompliance noise_compliance(const TransactionDatabase& db, double eta, std::uint64_t seed,
                                 Count min_support, std::size_t k);

}  // namespace robustmine
