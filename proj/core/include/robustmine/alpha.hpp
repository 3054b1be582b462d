#pragma once

#include "robustmine/errors.hpp"

namespace robustmine {

/// Probability of keeping a transaction when subsampling; always in [0, 1].
class Alpha {
 public:
  constexpr Alpha() = default;
  explicit Alpha(double value) : value_(value) {
    if (!(value >= 0.0 && value <= 1.0)) throw DomainError("alpha must be in [0,1]");
  }

  constexpr double value() const noexcept { return value_; }
  /// Probability of dropping a transaction, 1 - alpha.
  constexpr double beta() const noexcept { return 1.0 - value_; }

  friend constexpr auto operator<=>(Alpha, Alpha) = default;

 private:
  double value_ = 1.0;
};

}  // namespace robustmine
