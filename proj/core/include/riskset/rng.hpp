#pragma once

#include <cstddef>
#include <cstdint>

namespace riskset {

/// Deterministic splittable generator (splitmix64 core).
///
/// child(i) derives an independent stream from (seed, i) alone, so
/// per-trial randomness does not depend on how many draws other trials
/// consumed. All output is computed from 64-bit integer arithmetic and is
/// identical across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), state_(seed) {}

  std::uint64_t seed() const { return seed_; }

  Rng child(std::uint64_t index) const {
    return Rng(mix(seed_ + kGamma * (index + 1)));
  }

  std::uint64_t next_u64() {
    state_ += kGamma;
    return mix(state_);
  }

  /// Uniform in [0, 1), 53 random bits.
  double uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  std::size_t index(std::size_t n) {
    if (n == 0) return 0;
    auto k = static_cast<std::size_t>(uniform01() * static_cast<double>(n));
    return k >= n ? n - 1 : k;
  }

  bool coin(double p = 0.5) { return uniform01() < p; }

 private:
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;

  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  std::uint64_t seed_;
  std::uint64_t state_;
};

}  // namespace riskset
