#ifndef GRIDSCAN_RNG_HPP
#define GRIDSCAN_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>

namespace gridscan {

/// Deterministic random stream for synthetic data. The engine is
/// std::mt19937_64, whose output sequence is fully specified by the C++
/// standard, and the float conversions below are spelled out explicitly, so
/// the same seed yields the same stream on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform in [0,1): the top 53 bits of one engine output scaled by 2^-53.
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) {
    return lo + (hi - lo) * uniform01();
  }

  /// Standard normal via Box-Muller; consumes exactly two engine outputs
  /// per call and returns the cosine branch only, keeping the stream layout
  /// independent of call history.
  double normal() {
    double u1 = uniform01();
    double u2 = uniform01();
    if (u1 <= 0.0) u1 = 0x1.0p-53;  // guard log(0)
    constexpr double two_pi = 6.283185307179586476925286766559;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(two_pi * u2);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace gridscan

#endif  // GRIDSCAN_RNG_HPP
