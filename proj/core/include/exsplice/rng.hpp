#pragma once

#include <cmath>
#include <cstdint>

namespace exsplice {

/// Portable seedable generator with 64-bit state (splitmix64 step function).
///
/// The output stream is fully specified so deterministic datasets can be
/// reproduced outside this codebase:
///   - next_u64(): state += 0x9e3779b97f4a7c15; then the splitmix64 finalizer.
///   - next_double(): top 53 bits of next_u64(), scaled to [0, 1).
///   - next_below(n): rejection sampling on next_u64() below the largest
///     multiple of n, then modulo.
///   - next_normal(): Marsaglia polar method. Each attempt draws u then v via
///     next_double(); on acceptance the first returned variate is u*m and the
///     cached second is v*m.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1).
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, n), n >= 1.
  std::uint64_t next_below(std::uint64_t n) {
    const std::uint64_t limit = ~0ULL - ~0ULL % n;
    for (;;) {
      std::uint64_t u = next_u64();
      if (u < limit) return u % n;
    }
  }

  /// Standard normal variate (polar method, pairs cached).
  double next_normal() {
    if (has_cached_) {
      has_cached_ = false;
      return cached_;
    }
    double u, v, s;
    do {
      u = 2.0 * next_double() - 1.0;
      v = 2.0 * next_double() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double m = std::sqrt(-2.0 * std::log(s) / s);
    cached_ = v * m;
    has_cached_ = true;
    return u * m;
  }

 private:
  std::uint64_t state_;
  double cached_ = 0.0;
  bool has_cached_ = false;
};

}  // namespace exsplice
