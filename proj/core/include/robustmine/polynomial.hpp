#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "robustmine/itemset.hpp"

namespace robustmine {

using BigInt = boost::multiprecision::cpp_int;

/// Robustness written as an exact polynomial sum_i c_i * beta^i in the
/// drop probability beta = 1 - alpha. Stored sparsely; zero terms are never
/// kept, so two equal polynomials have identical term maps.
class RobustnessPolynomial {
 public:
  using Terms = std::map<std::size_t, BigInt>;

  RobustnessPolynomial() = default;
  static RobustnessPolynomial from_dense(const std::vector<BigInt>& coeffs);
  static RobustnessPolynomial constant(long value);

  const Terms& terms() const noexcept { return terms_; }
  BigInt coefficient(std::size_t degree) const;
  bool is_zero() const noexcept { return terms_.empty(); }
  std::optional<std::size_t> degree() const;

  /// Dense coefficients c_0..c_{length-1}; terms of higher degree are dropped.
  std::vector<BigInt> dense(std::size_t length) const;

  void add_term(std::size_t degree, const BigInt& value);
  RobustnessPolynomial& operator+=(const RobustnessPolynomial& other);
  RobustnessPolynomial& operator-=(const RobustnessPolynomial& other);
  friend RobustnessPolynomial operator+(RobustnessPolynomial a, const RobustnessPolynomial& b) {
    return a += b;
  }
  friend RobustnessPolynomial operator-(RobustnessPolynomial a, const RobustnessPolynomial& b) {
    return a -= b;
  }
  friend bool operator==(const RobustnessPolynomial&, const RobustnessPolynomial&) = default;

  /// Horner evaluation in double precision.
  double evaluate(double beta) const;

  /// "degree:coefficient" pairs separated by spaces, e.g. "0:1 2:-1";
  /// "0" for the zero polynomial.
  std::string signature() const;
  static RobustnessPolynomial parse_signature(const std::string& text);

 private:
  Terms terms_;
};

/// Expands prod_i (1 - beta^{cells_i}) into dlen + 1 dense coefficients,
/// one factor at a time via (1 - x^a) sum c_i x^i = sum (c_i - c_{i-a}) x^i.
/// Requires sum(cells) <= dlen.
std::vector<BigInt> expand(std::span<const Count> cells, std::size_t dlen);

/// Compares robustness near alpha = 1: the first differing coefficient
/// decides, and p < q when q_i - p_i > 0 there.
std::strong_ordering compare_polynomials(const RobustnessPolynomial& p,
                                         const RobustnessPolynomial& q);

/// Smallest degree where p and q differ, if any.
std::optional<std::size_t> first_difference(const RobustnessPolynomial& p,
                                            const RobustnessPolynomial& q);

}  // namespace robustmine
