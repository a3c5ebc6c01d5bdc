#pragma once

#include <cstddef>
#include <vector>

#include "resilience/core/iteration.hpp"
#include "resilience/core/monitor.hpp"
#include "resilience/sim/classifier.hpp"
#include "resilience/sim/object_stream.hpp"
#include "resilience/sim/rng.hpp"
#include "resilience/sim/scenario_config.hpp"

namespace resilience::sim {

// Simulator-side detail of one iteration, alongside the monitored event.
struct SimStep {
  ObjectSample sample;
  Prediction prediction;
  bool learned = false;
};

struct ScenarioResult {
  std::vector<SimStep> steps;
  MonitorResult monitor;

  std::vector<IterationEvent> events() const {
    std::vector<IterationEvent> out;
    out.reserve(monitor.timeline.size());
    for (const auto& row : monitor.timeline) out.push_back(row.event);
    return out;
  }
};

// Runs the online learning loop: predict, compare epsilon with K, let the
// human label the object when prompted or when the robot picked the wrong
// box, and feed every finalized iteration to the monitor.
inline ScenarioResult run_scenario(const ScenarioConfig& config) {
  config.validate();
  GaussianSource noise(config.seed);
  IncrementalClassifier classifier;
  Monitor monitor(config.monitor);

  ScenarioResult result;
  result.steps.reserve(config.num_iterations);
  for (std::size_t i = 0; i < config.num_iterations; ++i) {
    SimStep step;
    step.sample = next_object(i, config, noise);
    step.prediction = classifier.predict(step.sample.observed_features,
                                         config.softmax_temperature);

    PendingMode pending = decide_mode(step.prediction.epsilon, config.monitor.k_threshold);
    // No learned action exists for a class that was never taught.
    if (!classifier.knows(step.prediction.predicted_class)) pending = PendingMode::Learning;

    const bool false_positive = pending == PendingMode::OperatingPending &&
                                step.prediction.predicted_class != step.sample.true_class;
    const EventFragment fragment = finalize_event(pending, false_positive);
    if (fragment.human_intervened) {
      classifier.learn(step.sample.observed_features, step.sample.true_class, config.ema_rate);
      step.learned = true;
    }

    IterationEvent event;
    event.index = i;
    event.epsilon = step.prediction.epsilon;
    event.mode = fragment.mode;
    event.human_intervened = fragment.human_intervened;
    event.fix_event = i == config.fix_at;
    monitor.push(event);
    result.steps.push_back(step);
  }
  result.monitor = monitor.finish();
  return result;
}

}  // namespace resilience::sim
