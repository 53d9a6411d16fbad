#pragma once

#include <cstdint>
#include <random>

#include "nonlimit/types.hpp"

namespace nonlimit {

/// Seeded uniform draws that are identical on every platform.
/// std::uniform_real_distribution is implementation-defined, so the mapping
/// from engine bits to doubles is done here.
class UniformSource {
 public:
  explicit UniformSource(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [lo, hi).
  double uniform(double lo, double hi) {
    const double unit = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * unit;
  }

  /// Real and imaginary parts uniform on [-radius, radius).
  Complex complex_box(double radius) {
    const double re = uniform(-radius, radius);
    return {re, uniform(-radius, radius)};
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace nonlimit
