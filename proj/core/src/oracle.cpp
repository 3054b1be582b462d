#include "robustmine/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "robustmine/errors.hpp"
#include "robustmine/parallel.hpp"
#include "robustmine/random.hpp"
#include "robustmine/robustness.hpp"

namespace robustmine {

namespace {

DatabaseView subsample(const TransactionDatabase& db, std::uint64_t mask) {
  std::vector<std::uint32_t> rows;
  rows.reserve(static_cast<std::size_t>(std::popcount(mask)));
  for (std::uint32_t row = 0; row < db.size(); ++row) {
    if ((mask >> row) & 1u) rows.push_back(row);
  }
  return DatabaseView(db, std::move(rows));
}

std::vector<std::uint64_t> binomial_row(std::size_t n) {
  std::vector<std::uint64_t> row(n + 1, 0);
  row[0] = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i; j > 0; --j) row[j] += row[j - 1];
  }
  return row;
}

}  // namespace

std::vector<std::uint64_t> satisfying_counts(const TransactionDatabase& db, const Itemset& x,
                                             PredicateKind kind, std::size_t cell_width_limit) {
  const std::size_t n = db.size();
  if (n > kExhaustiveLimit) {
    throw CapacityError("exhaustive enumeration supports at most " +
                        std::to_string(kExhaustiveLimit) + " transactions; use Monte-Carlo");
  }
  db.validate(x);
  const std::uint64_t total = std::uint64_t{1} << n;
  const std::size_t chunks = static_cast<std::size_t>(std::min<std::uint64_t>(total, 256));
  std::vector<std::vector<std::uint64_t>> partial(chunks, std::vector<std::uint64_t>(n + 1, 0));
  parallel_for(chunks, [&](std::size_t c) {
    const std::uint64_t begin = total * c / chunks;
    const std::uint64_t end = total * (c + 1) / chunks;
    for (std::uint64_t mask = begin; mask < end; ++mask) {
      if (evaluate_predicate(subsample(db, mask), x, kind, cell_width_limit)) {
        ++partial[c][static_cast<std::size_t>(std::popcount(mask))];
      }
    }
  });
  std::vector<std::uint64_t> counts(n + 1, 0);
  for (const auto& p : partial) {
    for (std::size_t j = 0; j <= n; ++j) counts[j] += p[j];
  }
  return counts;
}

double robustness_from_counts(const std::vector<std::uint64_t>& counts, Alpha alpha) {
  const std::size_t n = counts.size() - 1;
  double sum = 0.0;
  for (std::size_t j = 0; j <= n; ++j) {
    if (counts[j] == 0) continue;
    sum += static_cast<double>(counts[j]) * power(alpha.value(), j) * power(alpha.beta(), n - j);
  }
  return std::clamp(sum, 0.0, 1.0);
}

double exhaustive_robustness(const TransactionDatabase& db, const Itemset& x, PredicateKind kind,
                             Alpha alpha) {
  return robustness_from_counts(satisfying_counts(db, x, kind), alpha);
}

MonteCarloEstimate monte_carlo_robustness(const TransactionDatabase& db, const Itemset& x,
                                          PredicateKind kind, Alpha alpha, std::uint64_t n,
                                          std::uint64_t seed) {
  if (n < 1) throw DomainError("sample count must be at least 1");
  db.validate(x);
  std::vector<unsigned char> hits(n, 0);
  parallel_for(n, [&](std::size_t draw) {
    CounterRng rng = CounterRng::derive(seed, draw);
    std::vector<std::uint32_t> rows;
    for (std::uint32_t row = 0; row < db.size(); ++row) {
      if (rng.uniform() < alpha.value()) rows.push_back(row);
    }
    hits[draw] = evaluate_predicate(DatabaseView(db, std::move(rows)), x, kind) ? 1 : 0;
  });
  std::uint64_t successes = 0;
  for (unsigned char h : hits) successes += h;
  MonteCarloEstimate out;
  out.estimate = static_cast<double>(successes) / static_cast<double>(n);
  out.standard_error = std::sqrt(out.estimate * (1.0 - out.estimate) / static_cast<double>(n));
  return out;
}

std::vector<std::uint64_t> breakdown_vector(const TransactionDatabase& db, const Itemset& x,
                                            PredicateKind kind) {
  const auto sat = satisfying_counts(db, x, kind);
  const std::size_t n = db.size();
  const auto binom = binomial_row(n);
  std::vector<std::uint64_t> c(n + 1);
  for (std::size_t k = 0; k <= n; ++k) c[k] = binom[n - k] - sat[n - k];
  return c;
}

}  // namespace robustmine
