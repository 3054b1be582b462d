#pragma once

#include <cstdint>

namespace robustmine {

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Counter-based generator: output i is a pure function of (seed, i), so
/// streams split by derive() are independent of thread scheduling.
class CounterRng {
 public:
  explicit constexpr CounterRng(std::uint64_t seed) noexcept : key_(mix64(seed)) {}

  static constexpr CounterRng derive(std::uint64_t seed, std::uint64_t stream) noexcept {
    return CounterRng(mix64(seed) ^ mix64(stream + 0x632be59bd9b4e019ULL));
  }

  constexpr std::uint64_t at(std::uint64_t index) const noexcept { return mix64(key_ ^ mix64(index)); }
  constexpr std::uint64_t next() noexcept { return at(counter_++); }

  /// Uniform on [0, 1) with 53 random bits.
  constexpr double uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace robustmine
