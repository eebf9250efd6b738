#pragma once

#include <cstdint>
#include <random>

namespace qgt {

/// splitmix64 step; used to derive independent per-trial streams from a
/// master seed (counter-mode splitting).
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Stream seed for trial `index` under `master`. Stable across platforms
/// and thread counts.
inline std::uint64_t deriveSeed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t s = master ^ (0x6a09e667f3bcc909ULL + index);
  splitmix64(s);
  return splitmix64(s);
}

/// Uniform double in [0,1) from a raw 64-bit draw. Avoids the
/// implementation-defined std::uniform_real_distribution.
inline double toUnitDouble(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  double unit() { return toUnitDouble(engine_()); }
  /// Uniform in [-b, b].
  double symmetric(double b) { return (2.0 * unit() - 1.0) * b; }
  /// Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n) {
    // Lemire-style rejection to stay unbiased.
    std::uint64_t x = engine_();
    __uint128_t m = static_cast<__uint128_t>(x) * n;
    auto lo = static_cast<std::uint64_t>(m);
    if (lo < n) {
      const std::uint64_t t = -n % n;
      while (lo < t) {
        x = engine_();
        m = static_cast<__uint128_t>(x) * n;
        lo = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }
  bool coin() { return engine_() & 1; }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace qgt
