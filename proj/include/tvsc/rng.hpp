#pragma once

// Portable seeded random numbers.
//
// The engine is std::mt19937_64, whose output sequence is fixed by the C++
// standard. The distribution helpers below are written out by hand because
// the std:: distributions are implementation-defined and would make seeded
// runs differ between standard libraries.
//
// Stream splitting: substream(seed, index) seeds an independent engine with
// splitmix64(seed ^ splitmix64(index + 1)). Every component that needs
// parallel or per-item randomness (frames, trials, restarts) draws from its
// own substream, so results do not depend on scheduling.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <random>

namespace tvsc {

constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, bound). bound must be positive.
  std::size_t uniform_index(std::size_t bound) {
    // Lemire's multiply-shift with rejection; unbiased.
    const std::uint64_t range = bound;
    std::uint64_t x = engine_();
    __uint128_t m = static_cast<__uint128_t>(x) * range;
    auto low = static_cast<std::uint64_t>(m);
    if (low < range) {
      const std::uint64_t threshold = (0 - range) % range;
      while (low < threshold) {
        x = engine_();
        m = static_cast<__uint128_t>(x) * range;
        low = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::size_t>(m >> 64);
  }

  /// Standard normal via Box-Muller; the second variate is cached.
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(theta);
    has_spare_ = true;
    return r * std::cos(theta);
  }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

inline Rng substream(std::uint64_t seed, std::uint64_t index) {
  return Rng(seed ^ splitmix64(index + 1));
}

/// Derives a child seed for a nested substream (e.g. trial -> frame).
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(seed ^ splitmix64(index + 1));
}

}  // namespace tvsc
