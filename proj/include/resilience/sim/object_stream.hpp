#pragma once

#include <cstddef>

#include "resilience/sim/color.hpp"
#include "resilience/sim/rng.hpp"
#include "resilience/sim/scenario_config.hpp"

namespace resilience::sim {

struct ObjectSample {
  BoxClass true_class = BoxClass::Box1;
  Color observed_features{};
};

// Objects arrive sorted red, green, blue in equal quantities.
inline BoxClass class_at(std::size_t index) {
  return static_cast<BoxClass>(index % kClassCount);
}

// Noise-free appearance of a class at a given iteration.
inline Color lit_appearance(const ScenarioConfig& config, BoxClass c, std::size_t index) {
  Color mean = config.class_means[to_index(c)];
  if (!config.lights_off_at(index)) return mean;
  Color dark = rotate_hue(mean, config.lights_off_hue_shift_deg);
  for (double& v : dark) v *= config.lights_off_gain;
  return dark;
}

// Always draws three normals so the noise stream does not depend on sigma.
inline ObjectSample next_object(std::size_t index, const ScenarioConfig& config,
                                GaussianSource& noise) {
  ObjectSample sample;
  sample.true_class = class_at(index);
  Color features = lit_appearance(config, sample.true_class, index);
  for (double& v : features) v += noise.next(config.sensor_noise_sigma);
  sample.observed_features = clip_unit(features);
  return sample;
}

}  // namespace resilience::sim
