#pragma once

#include <cstdint>
#include <random>

namespace assoc {

/// Seeded generator whose output is identical on every platform: the engine is
/// fully specified by the standard and the bounded/real conversions below do
/// not go through the implementation-defined std distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

  /// Uniform double in [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform double in [-1, 1).
  double symmetric() { return 2.0 * uniform() - 1.0; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace assoc
