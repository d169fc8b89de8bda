#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "bqdirac/biquaternion.hpp"

namespace bqdirac {

/// Seeded generator whose draws are identical on every platform: the
/// mt19937_64 stream is standardized and the real mapping is done here rather
/// than by std::uniform_real_distribution.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) {
    const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }

  /// Uniform integer in [lo, hi].
  int integer(int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(engine_() % span);
  }

  Complex complex(double lo, double hi) { return {uniform(lo, hi), uniform(lo, hi)}; }

  Biquaternion biquaternion(double scale = 1.0) {
    return {complex(-scale, scale), complex(-scale, scale), complex(-scale, scale), complex(-scale, scale)};
  }

  /// Real quaternion of unit modulus.
  Biquaternion unit_quaternion() {
    double c[4];
    double n2 = 0.0;
    do {
      n2 = 0.0;
      for (double& x : c) {
        x = uniform(-1.0, 1.0);
        n2 += x * x;
      }
    } while (n2 < 1e-4 || n2 > 1.0);
    const double inv = 1.0 / std::sqrt(n2);
    return {c[0] * inv, c[1] * inv, c[2] * inv, c[3] * inv};
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace bqdirac
