#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace resilience {

// Final mode of an iteration after any human correction.
enum class Mode { Learning, Operating };

// Mode right after the confidence check. An OperatingPending iteration can
// still be turned into Learning by a human correcting a false positive.
enum class PendingMode { Learning, OperatingPending };

// One slot of the ACR window: 1 for an autonomous completion, 0 otherwise.
enum class Contribution : unsigned char { Zero = 0, One = 1 };

struct IterationEvent {
  std::size_t index = 0;
  double epsilon = 0.0;  // confidence level of prediction
  Mode mode = Mode::Learning;
  bool human_intervened = true;
  bool fix_event = false;

  friend bool operator==(const IterationEvent&, const IterationEvent&) = default;
};

struct EventFragment {
  Mode mode;
  bool human_intervened;
  Contribution contribution;

  friend bool operator==(const EventFragment&, const EventFragment&) = default;
};

inline std::string_view to_string(Mode mode) {
  return mode == Mode::Operating ? "operating" : "learning";
}

inline bool in_unit_interval(double value) {
  return std::isfinite(value) && value >= 0.0 && value <= 1.0;
}

inline Contribution contribution_of(Mode mode) {
  return mode == Mode::Operating ? Contribution::One : Contribution::Zero;
}

// The human is prompted iff epsilon < K (strict).
inline PendingMode decide_mode(double epsilon, double k_threshold) {
  if (!in_unit_interval(epsilon)) {
    throw std::out_of_range("epsilon must lie in [0,1], got " + std::to_string(epsilon));
  }
  if (!in_unit_interval(k_threshold)) {
    throw std::out_of_range("k_threshold must lie in [0,1], got " +
                            std::to_string(k_threshold));
  }
  return epsilon < k_threshold ? PendingMode::Learning : PendingMode::OperatingPending;
}

// A corrected false positive is recorded as Learning and contributes 0.
inline EventFragment finalize_event(PendingMode pending, bool human_corrected) {
  if (pending == PendingMode::Learning) {
    if (human_corrected) {
      throw std::invalid_argument(
          "finalize_event: a Learning iteration cannot carry a false-positive correction");
    }
    return {Mode::Learning, true, Contribution::Zero};
  }
  if (human_corrected) {
    return {Mode::Learning, true, Contribution::Zero};
  }
  return {Mode::Operating, false, Contribution::One};
}

// Checks the per-event invariants; contiguity is the caller's concern.
inline void validate(const IterationEvent& event) {
  if (!in_unit_interval(event.epsilon)) {
    throw std::out_of_range("event " + std::to_string(event.index) +
                            ": epsilon outside [0,1]");
  }
  if (event.mode == Mode::Operating && event.human_intervened) {
    throw std::invalid_argument("event " + std::to_string(event.index) +
                                ": operating mode cannot have a human intervention");
  }
}

}  // namespace resilience
