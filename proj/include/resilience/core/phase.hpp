#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace resilience {

// Declaration order is the admissible transition order.
enum class Phase {
  InitialLearning,
  FirstSteady,
  FirstDisruptive,
  Recovered,
  SecondDisruptive,
  SecondSteady,
};

inline constexpr std::array<Phase, 6> kAllPhases = {
    Phase::InitialLearning, Phase::FirstSteady,      Phase::FirstDisruptive,
    Phase::Recovered,       Phase::SecondDisruptive, Phase::SecondSteady,
};

inline constexpr std::string_view to_string(Phase phase) {
  switch (phase) {
    case Phase::InitialLearning: return "initial_learning";
    case Phase::FirstSteady: return "first_steady";
    case Phase::FirstDisruptive: return "first_disruptive";
    case Phase::Recovered: return "recovered";
    case Phase::SecondDisruptive: return "second_disruptive";
    case Phase::SecondSteady: return "second_steady";
  }
  return "unknown";
}

inline std::optional<Phase> parse_phase(std::string_view name) {
  for (Phase phase : kAllPhases) {
    if (to_string(phase) == name) return phase;
  }
  return std::nullopt;
}

inline constexpr bool is_disruptive(Phase phase) {
  return phase == Phase::FirstDisruptive || phase == Phase::SecondDisruptive;
}

// One label per consumed iteration. Labels inside an unbroken run of
// qualifying points in a disruptive phase stay provisional until the run is
// either broken or long enough to confirm recovery.
struct PhaseLabel {
  std::size_t index = 0;
  Phase phase = Phase::InitialLearning;
  bool provisional = false;

  friend bool operator==(const PhaseLabel&, const PhaseLabel&) = default;
};

}  // namespace resilience
