#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "resilience/core/acr_window.hpp"
#include "resilience/core/config.hpp"
#include "resilience/core/iteration.hpp"
#include "resilience/core/phase.hpp"
#include "resilience/core/state_machine.hpp"

namespace resilience {

// Resilience measures over one disruptive episode (its disruptive phase plus
// the phase it recovers into).
struct EpisodeMeasures {
  std::size_t span_length = 0;
  std::size_t put = 0;  // points under the ACR Threshold
  std::size_t pat = 0;  // points at/above it, per the recovery comparison
  std::size_t human_interventions = 0;
  std::optional<double> put_ratio;  // absent for an empty span
  std::optional<double> pat_ratio;
  std::optional<double> hi_average;
  bool recovered = false;

  friend bool operator==(const EpisodeMeasures&, const EpisodeMeasures&) = default;
};

struct ResilienceReport {
  // False when the stream never reached FirstSteady; threshold-dependent
  // fields are then absent.
  bool complete = false;
  std::optional<double> acr_threshold;
  std::optional<std::size_t> steady_length;
  std::array<std::size_t, kAllPhases.size()> state_lengths{};
  std::optional<EpisodeMeasures> first_episode;
  std::optional<EpisodeMeasures> second_episode;
  std::vector<Anomaly> anomalies;

  std::size_t length_of(Phase phase) const {
    return state_lengths[static_cast<std::size_t>(phase)];
  }

  friend bool operator==(const ResilienceReport&, const ResilienceReport&) = default;
};

inline EpisodeMeasures measure_episode(std::size_t put, std::size_t pat,
                                       std::size_t interventions, bool recovered) {
  EpisodeMeasures m;
  m.put = put;
  m.pat = pat;
  m.span_length = put + pat;
  m.human_interventions = interventions;
  m.recovered = recovered;
  if (m.span_length > 0) {
    const auto total = static_cast<double>(m.span_length);
    m.put_ratio = static_cast<double>(put) / total;
    m.pat_ratio = static_cast<double>(pat) / total;
    m.hi_average = static_cast<double>(interventions) / total;
  }
  return m;
}

// Pure function of the finished labels, ACR series and events.
inline ResilienceReport compute_report(std::span<const PhaseLabel> phases,
                                       std::span<const AcrPoint> acr_series,
                                       std::span<const IterationEvent> events,
                                       RecoveryComparison comparison) {
  if (phases.size() != acr_series.size() || phases.size() != events.size()) {
    throw std::invalid_argument("compute_report: phase, ACR and event sequences differ in length");
  }

  ResilienceReport report;
  std::optional<double> threshold;
  for (std::size_t i = 0; i < phases.size(); ++i) {
    ++report.state_lengths[static_cast<std::size_t>(phases[i].phase)];
    if (phases[i].phase == Phase::FirstSteady) {
      const double acr = acr_series[i].acr;
      threshold = threshold ? std::min(*threshold, acr) : acr;
    }
  }
  if (!threshold) return report;

  report.complete = true;
  report.acr_threshold = threshold;
  report.steady_length = report.length_of(Phase::FirstSteady);

  struct Tally {
    std::size_t put = 0, pat = 0, hi = 0;
  };
  Tally first, second;
  for (std::size_t i = 0; i < phases.size(); ++i) {
    const Phase p = phases[i].phase;
    Tally* tally = nullptr;
    if (p == Phase::FirstDisruptive || p == Phase::Recovered) tally = &first;
    if (p == Phase::SecondDisruptive || p == Phase::SecondSteady) tally = &second;
    if (!tally) continue;
    if (qualifies(acr_series[i].acr, *threshold, comparison)) {
      ++tally->pat;
    } else {
      ++tally->put;
    }
    if (events[i].human_intervened) ++tally->hi;
  }
  report.first_episode = measure_episode(first.put, first.pat, first.hi,
                                         report.length_of(Phase::Recovered) > 0);
  report.second_episode = measure_episode(second.put, second.pat, second.hi,
                                          report.length_of(Phase::SecondSteady) > 0);
  return report;
}

}  // namespace resilience
