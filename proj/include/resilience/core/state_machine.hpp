#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "resilience/core/acr_window.hpp"
#include "resilience/core/config.hpp"
#include "resilience/core/iteration.hpp"
#include "resilience/core/phase.hpp"

namespace resilience {

enum class AnomalyKind {
  FixBeforeRecovery,  // fix_event seen before the Recovered phase
  FixAfterFinalState  // fix_event seen once the second episode has started
};

inline std::string_view to_string(AnomalyKind kind) {
  return kind == AnomalyKind::FixBeforeRecovery ? "fix_before_recovery"
                                                : "fix_after_final_state";
}

struct Anomaly {
  std::size_t index = 0;
  AnomalyKind kind = AnomalyKind::FixBeforeRecovery;

  friend bool operator==(const Anomaly&, const Anomaly&) = default;
};

// Labels each iteration with a resilience phase.
//
//   InitialLearning -> FirstSteady       first full autonomous frame (ACR == 1)
//   FirstSteady -> FirstDisruptive       degradation trigger; freezes the ACR
//                                        Threshold and the State Length
//   FirstDisruptive -> Recovered         State Length consecutive qualifying
//                                        points, back-dated to the point after
//                                        the last one under the threshold
//   Recovered -> SecondDisruptive        degradation trigger at or after a fix
//   SecondDisruptive -> SecondSteady     same rule as recovery
//
// Single writer; one instance per event stream.
class ResilienceStateMachine {
 public:
  explicit ResilienceStateMachine(MonitorConfig config) : config_(config) {
    config_.validate();
  }

  Phase step(const AcrPoint& point, const IterationEvent& event) {
    const std::size_t i = history_.size();
    if (event.index != i || point.index != i) {
      throw std::invalid_argument("state machine expects iteration " + std::to_string(i) +
                                  ", got event " + std::to_string(event.index) +
                                  " / point " + std::to_string(point.index));
    }

    if (event.fix_event) {
      if (phase_ == Phase::Recovered) {
        fix_armed_ = true;
      } else {
        anomalies_.push_back({i, phase_ < Phase::Recovered ? AnomalyKind::FixBeforeRecovery
                                                           : AnomalyKind::FixAfterFinalState});
      }
    }

    switch (phase_) {
      case Phase::InitialLearning:
        if (point.acr == 1.0) {
          phase_ = Phase::FirstSteady;
        }
        break;
      case Phase::FirstSteady:
        if (degraded(point.acr, config_.k_threshold)) {
          acr_threshold_ = steady_min_;
          steady_length_ = steady_count_;
          enter_disruptive(Phase::FirstDisruptive);
        }
        break;
      case Phase::Recovered:
        if (fix_armed_ && degraded(point.acr, *acr_threshold_)) {
          enter_disruptive(Phase::SecondDisruptive);
        }
        break;
      default:
        break;
    }

    if (phase_ == Phase::FirstSteady) {
      steady_min_ = steady_count_ == 0 ? point.acr : std::min(steady_min_, point.acr);
      ++steady_count_;
    }

    if (is_disruptive(phase_)) {
      track_recovery(i, point.acr);
    } else {
      history_.push_back({i, phase_, false});
    }
    return phase_;
  }

  const MonitorConfig& config() const { return config_; }
  Phase current_phase() const { return phase_; }
  std::optional<double> acr_threshold() const { return acr_threshold_; }
  std::optional<std::size_t> steady_length() const { return steady_length_; }
  std::optional<std::size_t> last_below_index() const { return last_below_index_; }
  std::span<const PhaseLabel> phase_history() const { return history_; }
  std::span<const Anomaly> anomalies() const { return anomalies_; }

 private:
  bool degraded(double acr, double below_bar) const {
    return config_.degradation_trigger == DegradationTrigger::ExactZero ? acr == 0.0
                                                                          : acr < below_bar;
  }

  void enter_disruptive(Phase phase) {
    phase_ = phase;
    qualifying_run_ = 0;
  }

  void track_recovery(std::size_t i, double acr) {
    if (qualifies(acr, *acr_threshold_, config_.recovery_comparison)) {
      ++qualifying_run_;
      history_.push_back({i, phase_, true});
    } else {
      qualifying_run_ = 0;
      last_below_index_ = i;
      for (auto it = history_.rbegin(); it != history_.rend() && it->provisional; ++it) {
        it->provisional = false;
      }
      history_.push_back({i, phase_, false});
    }

    if (qualifying_run_ == *steady_length_) {
      const Phase next = phase_ == Phase::FirstDisruptive ? Phase::Recovered
                                                          : Phase::SecondSteady;
      for (std::size_t j = i + 1 - qualifying_run_; j <= i; ++j) {
        history_[j] = {j, next, false};
      }
      phase_ = next;
      qualifying_run_ = 0;
    }
  }

  MonitorConfig config_;
  Phase phase_ = Phase::InitialLearning;
  std::optional<double> acr_threshold_;
  std::optional<std::size_t> steady_length_;
  std::optional<std::size_t> last_below_index_;
  double steady_min_ = 1.0;
  std::size_t steady_count_ = 0;
  std::size_t qualifying_run_ = 0;
  bool fix_armed_ = false;
  std::vector<PhaseLabel> history_;
  std::vector<Anomaly> anomalies_;
};

}  // namespace resilience
