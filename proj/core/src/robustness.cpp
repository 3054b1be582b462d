#include "robustmine/robustness.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>
#include <string>

#include "robustmine/errors.hpp"
#include "robustmine/ordering.hpp"

namespace robustmine {

namespace {

constexpr double kRangeSlack = 1e-12;

double checked(double r) {
  if (!(r >= -kRangeSlack && r <= 1.0 + kRangeSlack)) {
    throw std::logic_error("robustness " + std::to_string(r) + " outside [0, 1]");
  }
  return r;
}

}  // namespace

double power(double base, Count exp) {
  double result = 1.0;
  while (exp) {
    if (exp & 1) result *= base;
    base *= base;
    exp >>= 1;
  }
  return result;
}

double orf(std::span<const Count> cells, Alpha alpha) {
  std::vector<Count> sorted(cells.begin(), cells.end());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  const double beta = alpha.beta();
  double product = 1.0;
  for (Count s : sorted) product *= 1.0 - power(beta, s);
  return product;
}

double robustness_free(const DatabaseView& db, const Itemset& x, Alpha alpha) {
  return checked(orf(one_zero_counts(db, x), alpha));
}

double robustness_totally_shattered(const DatabaseView& db, const Itemset& x, Alpha alpha,
                                    std::size_t cell_width_limit) {
  const CellTable cells = cell_table(db, x, cell_width_limit);
  return checked(orf(cells.counts(), alpha));
}

double robustness_non_derivable(const DatabaseView& db, const Itemset& x, Alpha alpha,
                                std::size_t cell_width_limit) {
  const CellTable cells = cell_table(db, x, cell_width_limit);
  if (x.empty()) return checked(orf(cells.counts(), alpha));
  std::vector<Count> odd;
  std::vector<Count> even;
  for (std::uint64_t code = 0; code < cells.num_cells(); ++code) {
    (std::popcount(code) & 1 ? odd : even).push_back(cells.count(code));
  }
  const double o_odd = orf(odd, alpha);
  const double o_even = orf(even, alpha);
  return checked(1.0 - (1.0 - o_odd) * (1.0 - o_even));
}

double robustness_closed_exact(const DatabaseView& db, const Itemset& x, Alpha alpha,
                               const ClosedFamily& family) {
  db.database().validate(x);
  const auto coeffs = closed_coefficients(x, family.members, support(db, x), db.num_items(),
                                          family.min_support);
  return checked(coeffs.polynomial.evaluate(alpha.beta()));
}

double robustness(const DatabaseView& db, const Itemset& x, PredicateKind kind, Alpha alpha,
                  const EvaluationContext& context) {
  switch (kind) {
    case PredicateKind::Free: return robustness_free(db, x, alpha);
    case PredicateKind::TotallyShattered:
      return robustness_totally_shattered(db, x, alpha, context.cell_width_limit);
    case PredicateKind::NonDerivable:
      return robustness_non_derivable(db, x, alpha, context.cell_width_limit);
    case PredicateKind::Closed:
      if (!context.closed_family) throw ConfigError("closed robustness needs a closed family");
      return robustness_closed_exact(db, x, alpha, *context.closed_family);
  }
  return 0.0;
}

}  // namespace robustmine
