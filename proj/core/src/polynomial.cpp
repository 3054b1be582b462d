#include "robustmine/polynomial.hpp"

#include <numeric>
#include <sstream>

#include "robustmine/errors.hpp"

namespace robustmine {

RobustnessPolynomial RobustnessPolynomial::from_dense(const std::vector<BigInt>& coeffs) {
  RobustnessPolynomial p;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (!coeffs[i].is_zero()) p.terms_.emplace(i, coeffs[i]);
  }
  return p;
}

RobustnessPolynomial RobustnessPolynomial::constant(long value) {
  RobustnessPolynomial p;
  p.add_term(0, BigInt(value));
  return p;
}

BigInt RobustnessPolynomial::coefficient(std::size_t degree) const {
  auto it = terms_.find(degree);
  return it == terms_.end() ? BigInt(0) : it->second;
}

std::optional<std::size_t> RobustnessPolynomial::degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first;
}

std::vector<BigInt> RobustnessPolynomial::dense(std::size_t length) const {
  std::vector<BigInt> out(length);
  for (const auto& [deg, c] : terms_) {
    if (deg < length) out[deg] = c;
  }
  return out;
}

void RobustnessPolynomial::add_term(std::size_t degree, const BigInt& value) {
  if (value.is_zero()) return;
  auto [it, inserted] = terms_.emplace(degree, value);
  if (inserted) return;
  it->second += value;
  if (it->second.is_zero()) terms_.erase(it);
}

RobustnessPolynomial& RobustnessPolynomial::operator+=(const RobustnessPolynomial& other) {
  for (const auto& [deg, c] : other.terms_) add_term(deg, c);
  return *this;
}

RobustnessPolynomial& RobustnessPolynomial::operator-=(const RobustnessPolynomial& other) {
  for (const auto& [deg, c] : other.terms_) add_term(deg, -c);
  return *this;
}

double RobustnessPolynomial::evaluate(double beta) const {
  double value = 0.0;
  std::size_t next = terms_.empty() ? 0 : terms_.rbegin()->first;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    for (; next > it->first; --next) value *= beta;
    value += it->second.convert_to<double>();
  }
  for (; next > 0; --next) value *= beta;
  return value;
}

std::string RobustnessPolynomial::signature() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [deg, c] : terms_) {
    if (!first) out << ' ';
    out << deg << ':' << c;
    first = false;
  }
  return out.str();
}

RobustnessPolynomial RobustnessPolynomial::parse_signature(const std::string& text) {
  RobustnessPolynomial p;
  std::istringstream in(text);
  std::string token;
  while (in >> token) {
    const auto colon = token.find(':');
    if (colon == std::string::npos) {
      if (token == "0") continue;
      throw DomainError("bad polynomial term '" + token + "'");
    }
    try {
      p.add_term(std::stoull(token.substr(0, colon)), BigInt(token.substr(colon + 1)));
    } catch (const std::exception&) {
      throw DomainError("bad polynomial term '" + token + "'");
    }
  }
  return p;
}

std::vector<BigInt> expand(std::span<const Count> cells, std::size_t dlen) {
  const Count total = std::accumulate(cells.begin(), cells.end(), Count{0});
  if (total > dlen) throw ContractError("sum of cell supports exceeds the polynomial length");
  std::vector<BigInt> c(dlen + 1);
  c[0] = 1;
  std::size_t top = 0;  // highest degree that can be non-zero so far
  for (Count s : cells) {
    const std::size_t shift = static_cast<std::size_t>(s);
    top += shift;
    // Descending so that c[i - shift] still holds the previous product.
    for (std::size_t i = top + 1; i-- > 0;) {
      if (i >= shift) {
        c[i] -= c[i - shift];
      }
    }
  }
  return c;
}

std::optional<std::size_t> first_difference(const RobustnessPolynomial& p,
                                            const RobustnessPolynomial& q) {
  auto a = p.terms().begin();
  auto b = q.terms().begin();
  while (a != p.terms().end() || b != q.terms().end()) {
    if (b == q.terms().end() || (a != p.terms().end() && a->first < b->first)) return a->first;
    if (a == p.terms().end() || b->first < a->first) return b->first;
    if (a->second != b->second) return a->first;
    ++a;
    ++b;
  }
  return std::nullopt;
}

std::strong_ordering compare_polynomials(const RobustnessPolynomial& p,
                                         const RobustnessPolynomial& q) {
  const auto k = first_difference(p, q);
  if (!k) return std::strong_ordering::equal;
  return p.coefficient(*k) < q.coefficient(*k) ? std::strong_ordering::less
                                                : std::strong_ordering::greater;
}

}  // namespace robustmine
