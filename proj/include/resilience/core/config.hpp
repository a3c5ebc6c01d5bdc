#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "resilience/core/iteration.hpp"

namespace resilience {

// Condition that opens a disruptive phase.
enum class DegradationTrigger {
  ExactZero,       // ACR == 0
  BelowThreshold,  // ACR < K in the first episode, ACR < ACR Threshold in the second
};

// How a point is compared against the ACR Threshold to count as recovered.
enum class RecoveryComparison { GreaterOrEqual, StrictlyGreater };

struct MonitorConfig {
  std::size_t window_size = 5;
  double k_threshold = 0.40;
  DegradationTrigger degradation_trigger = DegradationTrigger::ExactZero;
  RecoveryComparison recovery_comparison = RecoveryComparison::GreaterOrEqual;

  void validate() const {
    if (window_size < 1) throw std::invalid_argument("window_size must be >= 1");
    if (!in_unit_interval(k_threshold)) {
      throw std::invalid_argument("k_threshold must lie in [0,1]");
    }
  }

  friend bool operator==(const MonitorConfig&, const MonitorConfig&) = default;
};

inline bool qualifies(double acr, double threshold, RecoveryComparison comparison) {
  return comparison == RecoveryComparison::GreaterOrEqual ? acr >= threshold
                                                          : acr > threshold;
}

inline std::string_view to_string(DegradationTrigger trigger) {
  return trigger == DegradationTrigger::ExactZero ? "exact_zero" : "below_threshold";
}

inline std::string_view to_string(RecoveryComparison comparison) {
  return comparison == RecoveryComparison::GreaterOrEqual ? "greater_or_equal"
                                                          : "strictly_greater";
}

inline std::optional<DegradationTrigger> parse_trigger(std::string_view name) {
  if (name == "exact_zero") return DegradationTrigger::ExactZero;
  if (name == "below_threshold") return DegradationTrigger::BelowThreshold;
  return std::nullopt;
}

inline std::optional<RecoveryComparison> parse_comparison(std::string_view name) {
  if (name == "greater_or_equal") return RecoveryComparison::GreaterOrEqual;
  if (name == "strictly_greater") return RecoveryComparison::StrictlyGreater;
  return std::nullopt;
}

}  // namespace resilience
