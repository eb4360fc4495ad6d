#pragma once

#include <cstdint>

namespace fse {

/// splitmix64 (Steele, Lea & Flood): a tiny, fully specified 64-bit
/// generator. Unlike the standard-library distributions, every output is
/// bit-stable across platforms and toolchains, so seeded fixtures and
/// report values survive compiler upgrades.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double next_unit() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  /// Uniform integer in [0, bound). Multiply-shift mapping; the bias is
  /// below 2^-32 for any bound that fits in 32 bits.
  std::uint64_t next_below(std::uint64_t bound) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * bound) >> 64);
  }

 private:
  std::uint64_t state_;
};

}  // namespace fse
