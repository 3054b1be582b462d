#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <span>
#include <variant>
#include <vector>

#include "robustmine/alpha.hpp"
#include "robustmine/context.hpp"
#include "robustmine/polynomial.hpp"
#include "robustmine/predicates.hpp"

namespace robustmine {

/// Cell supports relevant to a predicate, sorted ascending.
class MarginVector {
 public:
  MarginVector() = default;
  MarginVector(std::initializer_list<Count> values);
  explicit MarginVector(std::vector<Count> values);

  std::span<const Count> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }
  Count operator[](std::size_t i) const { return values_[i]; }
  /// True when some relevant cell is empty, i.e. the robustness is 0.
  bool has_zero() const noexcept { return !values_.empty() && values_.front() == 0; }

  friend bool operator==(const MarginVector&, const MarginVector&) = default;

 private:
  std::vector<Count> values_;
};

/// Free: the |X| one-zero cell supports. TotallyShattered: all 2^|X| cells.
MarginVector margin_vector(const DatabaseView& db, const Itemset& x, PredicateKind kind,
                           std::size_t cell_width_limit = kDefaultCellWidthLimit);

/// s < t iff s_n < t_n at the first differing index, or t is a proper
/// prefix of s. Less means `s` is the less robust sequence.
std::strong_ordering compare_sequences(const MarginVector& s, const MarginVector& t);

inline constexpr std::uint64_t kInfiniteDiff = std::numeric_limits<std::uint64_t>::max();

/// t_n - s_n at the first index with s_n < t_n; kInfiniteDiff when t is a
/// prefix of s (including s == t). Throws ContractError if s > t.
std::uint64_t seq_diff(const MarginVector& s, const MarginVector& t);

/// Smallest alpha from which r(X) <= r(Y) is guaranteed, given X <= Y and
/// d = seq_diff of their margin vectors: 1 - (N + 1)^(-1/d) where N = |Y|
/// (free) or 2^|Y| (totally shattered). Returns 0 for an infinite d.
Alpha beta_bound(const Itemset& x, const Itemset& y, std::uint64_t d, PredicateKind kind);

/// Exact polynomial of the non-derivable robustness:
/// o(odd-ones cells) + o(even-ones cells) - o(all cells), each expanded.
RobustnessPolynomial ndi_polynomial(const DatabaseView& db, const Itemset& x,
                                    std::size_t cell_width_limit = kDefaultCellWidthLimit);

/// Coefficients of the closed robustness polynomial computed from closed
/// supersets, together with the bookkeeping needed to tell which of them
/// are exact for a thresholded family.
struct ClosedCoefficients {
  RobustnessPolynomial polynomial;
  Count support = 0;
  /// Support threshold of the family; 0 for a complete family.
  Count threshold = 0;
  /// e(Y, X) for every closed superset Y processed, in processing order.
  std::vector<std::pair<Itemset, BigInt>> alternating_sums;

  /// a_k is exact iff supp(X) - k >= threshold.
  bool is_exact(std::size_t k) const noexcept {
    return threshold == 0 || (support >= threshold && k <= support - threshold);
  }
};

/// Computes a_k by walking the closed supersets of X in subset order:
/// e(X, X) = 1, e(Y, X) = -sum of e(Z, X) over processed Z with
/// X <= Z < Y, and a_k += e(Y, X) at k = supp(X) - supp(Y).
///
/// `family` is filtered to supersets of X; the full universe
/// {0..num_items-1} is added with support 0 when absent. If X itself is not
/// in the family, X is not closed and the polynomial is zero.
/// Throws DataInconsistencyError on a superset with support > supp(X).
ClosedCoefficients closed_coefficients(const Itemset& x, std::span<const ClosedItemset> family,
                                       Count supp_x, std::size_t num_items, Count threshold = 0);

/// Sort key of an itemset under the parameter-free order.
struct OrderKey {
  PredicateKind kind = PredicateKind::Free;
  /// MarginVector for Free/TotallyShattered, polynomial otherwise.
  std::variant<MarginVector, RobustnessPolynomial> payload;
  Itemset itemset;
  Count support = 0;
  /// Closed only: family threshold (0 = every coefficient exact).
  Count threshold = 0;
};

struct KeyComparison {
  std::strong_ordering order = std::strong_ordering::equal;
  /// Closed only: the decision rests on a coefficient that is not exact.
  bool estimated = false;
};

/// Compares robustness near alpha = 1 only (no tie-break). Keys must have
/// the same kind. Margin vectors that both contain a zero compare equal,
/// since both robustness polynomials are identically zero.
KeyComparison compare_keys(const OrderKey& a, const OrderKey& b);

/// Strict weak ordering used for ranking: more robust first, then larger
/// support, then lexicographically smaller itemset.
bool ranks_before(const OrderKey& a, const OrderKey& b);

OrderKey order_key(const DatabaseView& db, const Itemset& x, PredicateKind kind,
                   const EvaluationContext& context = {});

struct RankedItemset {
  Itemset itemset;
  Count support = 0;
  OrderKey key;
  /// The comparison with the previous entry depends on an estimated
  /// coefficient (closed ranking over a thresholded family).
  bool estimated = false;
};

/// Orders itemsets from most to least robust near alpha = 1.
/// Throws ConfigError for kind Closed without a closed family in context.
std::vector<RankedItemset> rank(const TransactionDatabase& db, std::span<const Itemset> itemsets,
                                PredicateKind kind, const EvaluationContext& context = {});

/// Sorts precomputed keys the same way rank() does.
std::vector<RankedItemset> rank_keys(std::vector<OrderKey> keys);

}  // namespace robustmine
