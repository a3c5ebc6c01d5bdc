#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace resilience::sim {

// Seeded Gaussian source. std::normal_distribution is implementation-defined,
// so the Box-Muller transform runs directly on mt19937_64 output to keep runs
// byte-identical across standard libraries.
class GaussianSource {
 public:
  explicit GaussianSource(std::uint64_t seed) : engine_(seed) {}

  double next(double sigma) {
    if (has_spare_) {
      has_spare_ = false;
      return sigma * spare_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return sigma * radius * std::cos(angle);
  }

 private:
  // 53 random mantissa bits in [0,1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace resilience::sim
