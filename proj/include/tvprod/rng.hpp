#pragma once

#include <cstdint>

namespace tvprod {

// SplitMix64 (Steele, Lea, Flood). Streams are keyed by (seed, index) so a
// sample's draws never depend on how samples are split across workers.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t state) noexcept : state_(state) {}

  static constexpr std::uint64_t mix(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Independent stream for item `index` of the run seeded by `seed`.
  static SplitMix64 stream(std::uint64_t seed, std::uint64_t index) noexcept {
    return SplitMix64(mix(seed + kGamma) ^ mix(index * kGamma + 0x632be59bd9b4e019ULL));
  }

  std::uint64_t next() noexcept {
    state_ += kGamma;
    return mix(state_);
  }

  /// Uniform double in [0,1) with 53 random bits.
  double uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;
  std::uint64_t state_;
};

}  // namespace tvprod
