#pragma once

#include <cstdint>

namespace genergy {

/// splitmix64 (Steele, Lea, Flood). Portable and bit-exact everywhere, which
/// is all the ensemble and search code needs from a generator.
class SplitMix64 {
 public:
  static constexpr std::uint64_t golden_gamma = 0x9E3779B97F4A7C15ull;

  explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  constexpr std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += golden_gamma);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1) from the top 53 bits.
  constexpr double uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

/// Seed of sub-stream `index`: first output of a splitmix64 stream started at
/// seed ^ ((index + 1) * golden_gamma).
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept {
  return SplitMix64(seed ^ ((index + 1) * SplitMix64::golden_gamma)).next();
}

}  // namespace genergy
