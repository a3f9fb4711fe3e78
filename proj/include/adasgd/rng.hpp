#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace adasgd {

// Small splitmix64-based generator. Hand-rolled instead of <random> so that
// seeded runs produce identical streams on every platform/stdlib, which the
// byte-reproducible run logs rely on.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, 1), 53-bit resolution
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // uniform in {0, ..., n-1}; rejection sampling, no modulo bias
  std::uint64_t uniform_below(std::uint64_t n) {
    const std::uint64_t threshold = (0 - n) % n;  // 2^64 mod n
    std::uint64_t x;
    do {
      x = next_u64();
    } while (x < threshold);
    return x % n;
  }

  // standard normal via Box-Muller; the sine partner is cached
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double u1 = 1.0 - uniform01();  // (0, 1], keeps log finite
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    spare_ = r * std::sin(2.0 * std::numbers::pi * u2);
    has_spare_ = true;
    return r * std::cos(2.0 * std::numbers::pi * u2);
  }

 private:
  std::uint64_t state_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

// Derives an independent stream for one run component. Fixed tags keep the
// draw order of each component stable as the code evolves.
inline Rng substream(std::uint64_t seed, std::uint64_t tag) {
  Rng mix(seed ^ (tag * 0x9E3779B97F4A7C15ULL));
  return Rng(mix.next_u64());
}

namespace streams {
inline constexpr std::uint64_t kBatchInit = 1;
inline constexpr std::uint64_t kBatchGrowth = 2;
inline constexpr std::uint64_t kSynthetic = 101;
inline constexpr std::uint64_t kCheckStates = 201;
inline constexpr std::uint64_t kMarkov = 7;
}  // namespace streams

}  // namespace adasgd
