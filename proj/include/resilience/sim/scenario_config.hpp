#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "resilience/core/config.hpp"
#include "resilience/sim/color.hpp"

namespace resilience::sim {

struct ScenarioConfig {
  std::size_t num_iterations = 208;
  std::array<Color, kClassCount> class_means = {{
      {0.8, 0.2, 0.2},
      {0.2, 0.8, 0.2},
      {0.2, 0.2, 0.8},
  }};
  double sensor_noise_sigma = 0.05;
  // Lights off: brightness gain plus a hue shift of the remaining ambient
  // light. A gain alone keeps every class nearest its own prototype.
  double lights_off_gain = 0.6;
  double lights_off_hue_shift_deg = 150.0;
  std::size_t disrupt_at = 37;
  std::size_t fix_at = 119;
  double softmax_temperature = 0.05;
  double ema_rate = 0.08;
  std::uint64_t seed = 7;
  MonitorConfig monitor{};

  bool lights_off_at(std::size_t index) const { return disrupt_at <= index && index < fix_at; }

  // Throws std::invalid_argument naming the offending field.
  void validate() const {
    auto fail = [](const std::string& what) { throw std::invalid_argument(what); };
    if (disrupt_at > num_iterations) {
      fail("disrupt_at (" + std::to_string(disrupt_at) + ") exceeds num_iterations (" +
           std::to_string(num_iterations) + ")");
    }
    if (fix_at > num_iterations) {
      fail("fix_at (" + std::to_string(fix_at) + ") exceeds num_iterations (" +
           std::to_string(num_iterations) + ")");
    }
    if (fix_at < disrupt_at || (fix_at == disrupt_at && disrupt_at != num_iterations)) {
      fail("fix_at must come after disrupt_at");
    }
    for (const auto& mean : class_means) {
      if (!in_unit_cube(mean)) fail("class_means must lie in [0,1]^3");
    }
    if (!std::isfinite(sensor_noise_sigma) || sensor_noise_sigma < 0.0) {
      fail("sensor_noise_sigma must be >= 0");
    }
    if (!std::isfinite(lights_off_gain) || lights_off_gain < 0.0 || lights_off_gain > 1.0) {
      fail("lights_off_gain must lie in [0,1]");
    }
    if (!std::isfinite(lights_off_hue_shift_deg)) fail("lights_off_hue_shift_deg must be finite");
    if (!std::isfinite(softmax_temperature) || softmax_temperature <= 0.0) {
      fail("softmax_temperature must be > 0");
    }
    if (!std::isfinite(ema_rate) || ema_rate <= 0.0 || ema_rate > 1.0) {
      fail("ema_rate must lie in (0,1]");
    }
    monitor.validate();
  }
};

}  // namespace resilience::sim
