#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "resilience/core/acr_window.hpp"
#include "resilience/core/config.hpp"
#include "resilience/core/iteration.hpp"
#include "resilience/core/phase.hpp"
#include "resilience/core/report.hpp"
#include "resilience/core/state_machine.hpp"

namespace resilience {

struct TimelineRow {
  IterationEvent event;
  AcrPoint point;
  PhaseLabel label;

  friend bool operator==(const TimelineRow&, const TimelineRow&) = default;
};

struct MonitorResult {
  std::vector<TimelineRow> timeline;
  ResilienceReport report;
};

// Online monitor: ACR window + phase tracker over one event stream.
class Monitor {
 public:
  explicit Monitor(MonitorConfig config) : window_(config.window_size), machine_(config) {}

  // Returns the (possibly provisional) phase of this iteration.
  Phase push(const IterationEvent& event) {
    if (event.index != events_.size()) {
      throw std::invalid_argument("monitor expects event index " +
                                  std::to_string(events_.size()) + ", got " +
                                  std::to_string(event.index));
    }
    validate(event);
    const AcrPoint point = window_.push(contribution_of(event.mode));
    events_.push_back(event);
    points_.push_back(point);
    return machine_.step(point, event);
  }

  const ResilienceStateMachine& machine() const { return machine_; }
  std::span<const AcrPoint> acr_series() const { return points_; }
  std::span<const IterationEvent> events() const { return events_; }

  MonitorResult finish() const {
    MonitorResult result;
    const auto labels = machine_.phase_history();
    result.timeline.reserve(events_.size());
    for (std::size_t i = 0; i < events_.size(); ++i) {
      result.timeline.push_back({events_[i], points_[i], labels[i]});
    }
    result.report =
        compute_report(labels, points_, events_, machine_.config().recovery_comparison);
    const auto anomalies = machine_.anomalies();
    result.report.anomalies.assign(anomalies.begin(), anomalies.end());
    return result;
  }

 private:
  AcrWindow window_;
  ResilienceStateMachine machine_;
  std::vector<IterationEvent> events_;
  std::vector<AcrPoint> points_;
};

inline MonitorResult run_monitor(std::span<const IterationEvent> events,
                                 const MonitorConfig& config) {
  Monitor monitor(config);
  for (const auto& event : events) monitor.push(event);
  return monitor.finish();
}

}  // namespace resilience
