#pragma once

#include <array>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <type_traits>

#include "json.hpp"

#include "resilience/core/config.hpp"
#include "resilience/sim/scenario_config.hpp"

namespace resilience::io {

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Config document:
//   { "scenario": { ...ScenarioConfig fields... },
//     "monitor":  { "window_size", "k_threshold",
//                   "degradation_trigger", "recovery_comparison" } }
// Both sections and every key are optional; unknown keys are errors.
namespace detail {

inline void reject_unknown(const nlohmann::json& section, const std::set<std::string>& known,
                           const std::string& where) {
  for (const auto& [key, value] : section.items()) {
    if (!known.contains(key)) throw ConfigError("unknown key '" + key + "' in " + where);
  }
}

template <typename T>
void read_field(const nlohmann::json& section, const char* key, T& out, const std::string& where) {
  auto it = section.find(key);
  if (it == section.end()) return;
  try {
    if constexpr (std::is_unsigned_v<T>) {
      if (!it->is_number_unsigned()) throw ConfigError("");
    } else if constexpr (std::is_floating_point_v<T>) {
      if (!it->is_number()) throw ConfigError("");
    }
    out = it->get<T>();
  } catch (const std::exception&) {
    throw ConfigError("bad value for '" + std::string(key) + "' in " + where);
  }
}

}  // namespace detail

inline void apply_monitor_section(const nlohmann::json& j, MonitorConfig& config) {
  const std::string where = "monitor";
  if (!j.is_object()) throw ConfigError("'monitor' must be an object");
  detail::reject_unknown(
      j, {"window_size", "k_threshold", "degradation_trigger", "recovery_comparison"}, where);
  detail::read_field(j, "window_size", config.window_size, where);
  detail::read_field(j, "k_threshold", config.k_threshold, where);
  if (auto it = j.find("degradation_trigger"); it != j.end()) {
    const auto parsed = it->is_string() ? parse_trigger(it->get<std::string>()) : std::nullopt;
    if (!parsed) throw ConfigError("degradation_trigger must be exact_zero or below_threshold");
    config.degradation_trigger = *parsed;
  }
  if (auto it = j.find("recovery_comparison"); it != j.end()) {
    const auto parsed = it->is_string() ? parse_comparison(it->get<std::string>()) : std::nullopt;
    if (!parsed) {
      throw ConfigError("recovery_comparison must be greater_or_equal or strictly_greater");
    }
    config.recovery_comparison = *parsed;
  }
}

inline void apply_scenario_section(const nlohmann::json& j, sim::ScenarioConfig& config) {
  const std::string where = "scenario";
  if (!j.is_object()) throw ConfigError("'scenario' must be an object");
  detail::reject_unknown(j,
                         {"num_iterations", "class_means", "sensor_noise_sigma", "lights_off_gain",
                          "lights_off_hue_shift_deg", "disrupt_at", "fix_at",
                          "softmax_temperature", "ema_rate", "seed"},
                         where);
  detail::read_field(j, "num_iterations", config.num_iterations, where);
  if (auto it = j.find("class_means"); it != j.end()) {
    try {
      config.class_means = it->get<std::array<sim::Color, sim::kClassCount>>();
    } catch (const std::exception&) {
      throw ConfigError("class_means must be three [r,g,b] triples");
    }
  }
  detail::read_field(j, "sensor_noise_sigma", config.sensor_noise_sigma, where);
  detail::read_field(j, "lights_off_gain", config.lights_off_gain, where);
  detail::read_field(j, "lights_off_hue_shift_deg", config.lights_off_hue_shift_deg, where);
  detail::read_field(j, "disrupt_at", config.disrupt_at, where);
  detail::read_field(j, "fix_at", config.fix_at, where);
  detail::read_field(j, "softmax_temperature", config.softmax_temperature, where);
  detail::read_field(j, "ema_rate", config.ema_rate, where);
  detail::read_field(j, "seed", config.seed, where);
}

// Starts from the defaults and applies whatever the document sets.
inline sim::ScenarioConfig parse_config(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(std::string("invalid config JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  detail::reject_unknown(j, {"scenario", "monitor"}, "config");
  sim::ScenarioConfig config;
  if (auto it = j.find("scenario"); it != j.end()) apply_scenario_section(*it, config);
  if (auto it = j.find("monitor"); it != j.end()) apply_monitor_section(*it, config.monitor);
  return config;
}

inline std::string write_config(const sim::ScenarioConfig& config) {
  nlohmann::ordered_json j;
  auto& s = j["scenario"];
  s["num_iterations"] = config.num_iterations;
  s["class_means"] = config.class_means;
  s["sensor_noise_sigma"] = config.sensor_noise_sigma;
  s["lights_off_gain"] = config.lights_off_gain;
  s["lights_off_hue_shift_deg"] = config.lights_off_hue_shift_deg;
  s["disrupt_at"] = config.disrupt_at;
  s["fix_at"] = config.fix_at;
  s["softmax_temperature"] = config.softmax_temperature;
  s["ema_rate"] = config.ema_rate;
  s["seed"] = config.seed;
  auto& m = j["monitor"];
  m["window_size"] = config.monitor.window_size;
  m["k_threshold"] = config.monitor.k_threshold;
  m["degradation_trigger"] = std::string(to_string(config.monitor.degradation_trigger));
  m["recovery_comparison"] = std::string(to_string(config.monitor.recovery_comparison));
  return j.dump(2) + "\n";
}

}  // namespace resilience::io
