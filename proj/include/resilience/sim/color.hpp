#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <string_view>

namespace resilience::sim {

using Color = std::array<double, 3>;

inline constexpr std::size_t kClassCount = 3;

// Box1/Box2/Box3 hold the red, green and blue objects.
enum class BoxClass : std::size_t { Box1 = 0, Box2 = 1, Box3 = 2 };

inline constexpr std::size_t to_index(BoxClass c) { return static_cast<std::size_t>(c); }

inline constexpr std::string_view to_string(BoxClass c) {
  switch (c) {
    case BoxClass::Box1: return "box1";
    case BoxClass::Box2: return "box2";
    case BoxClass::Box3: return "box3";
  }
  return "unknown";
}

inline double squared_distance(const Color& a, const Color& b) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    sum += d * d;
  }
  return sum;
}

inline Color clip_unit(Color c) {
  for (double& v : c) v = std::clamp(v, 0.0, 1.0);
  return c;
}

inline bool in_unit_cube(const Color& c) {
  return std::all_of(c.begin(), c.end(),
                     [](double v) { return std::isfinite(v) && v >= 0.0 && v <= 1.0; });
}

// Rotation by `degrees` about the gray axis (1,1,1): a hue shift that keeps
// brightness. 120 degrees is the cyclic channel permutation r->g->b->r.
inline Color rotate_hue(const Color& c, double degrees) {
  const double theta = degrees * std::numbers::pi / 180.0;
  const double cos_t = std::cos(theta);
  const double sin_t = std::sin(theta);
  const double k = 1.0 / std::sqrt(3.0);
  const double dot = k * (c[0] + c[1] + c[2]);
  // Rodrigues: v cos + (k x v) sin + k (k.v)(1 - cos)
  const Color cross = {k * (c[2] - c[1]), k * (c[0] - c[2]), k * (c[1] - c[0])};
  Color out{};
  for (std::size_t i = 0; i < 3; ++i) {
    out[i] = c[i] * cos_t + cross[i] * sin_t + k * dot * (1.0 - cos_t);
  }
  return out;
}

}  // namespace resilience::sim
