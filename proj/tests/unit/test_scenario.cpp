#include <catch_amalgamated.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <set>
#include <vector>

#include "resilience/sim/scenario.hpp"

using namespace resilience;
using namespace resilience::sim;

namespace {

std::vector<Phase> phase_sequence(const MonitorResult& result) {
  std::vector<Phase> seq;
  for (const auto& row : result.timeline) {
    if (seq.empty() || seq.back() != row.label.phase) seq.push_back(row.label.phase);
  }
  return seq;
}

}  // namespace

TEST_CASE("default scenario passes through all six phases", "[scenario]") {
  const auto result = run_scenario(ScenarioConfig{});
  const auto seq = phase_sequence(result.monitor);
  CHECK(seq == std::vector<Phase>(kAllPhases.begin(), kAllPhases.end()));

  // Frozen from the seed-7 run after checking the curve against the
  // expected shape (learn, steady, drop, recover, drop after the fix, steady).
  const auto& r = result.monitor.report;
  CHECK(r.length_of(Phase::InitialLearning) == 7);
  CHECK(r.length_of(Phase::FirstSteady) == 34);
  CHECK(r.length_of(Phase::FirstDisruptive) == 36);
  CHECK(r.length_of(Phase::Recovered) == 46);
  CHECK(r.length_of(Phase::SecondDisruptive) == 3);
  CHECK(r.length_of(Phase::SecondSteady) == 82);
  CHECK(r.first_episode->span_length == 82);
}

TEST_CASE("a run that never disrupts stays steady", "[scenario]") {
  ScenarioConfig config;
  config.disrupt_at = config.num_iterations;
  config.fix_at = config.num_iterations;
  const auto result = run_scenario(config);
  CHECK(phase_sequence(result.monitor) ==
        std::vector<Phase>{Phase::InitialLearning, Phase::FirstSteady});
  const auto& r = result.monitor.report;
  REQUIRE(r.first_episode);
  CHECK(r.first_episode->span_length == 0);
  CHECK_FALSE(r.first_episode->hi_average);
}

TEST_CASE("noise-free run reaches steady state within 3 + W iterations", "[scenario]") {
  ScenarioConfig config;
  config.sensor_noise_sigma = 0.0;
  config.disrupt_at = config.num_iterations;
  config.fix_at = config.num_iterations;
  const auto result = run_scenario(config);
  std::size_t first_steady = result.monitor.timeline.size();
  for (const auto& row : result.monitor.timeline) {
    if (row.label.phase == Phase::FirstSteady) {
      first_steady = row.event.index;
      break;
    }
  }
  CHECK(first_steady + 1 <= 3 + config.monitor.window_size);
}

TEST_CASE("identical configs give identical runs", "[scenario]") {
  ScenarioConfig config;
  config.seed = 1234;
  const auto a = run_scenario(config);
  const auto b = run_scenario(config);
  CHECK(a.monitor.timeline == b.monitor.timeline);
  CHECK(a.monitor.report == b.monitor.report);
}

TEST_CASE("simulated human and classifier invariants over many seeds", "[scenario][property]") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    ScenarioConfig config;
    config.seed = seed;
    const auto result = run_scenario(config);
    REQUIRE(result.steps.size() == config.num_iterations);

    std::set<BoxClass> taught;
    for (std::size_t i = 0; i < result.steps.size(); ++i) {
      const auto& step = result.steps[i];
      const auto& event = result.monitor.timeline[i].event;
      const auto& p = step.prediction;

      const double sum = std::accumulate(p.probabilities.begin(), p.probabilities.end(), 0.0);
      REQUIRE(std::abs(sum - 1.0) < 1e-9);
      REQUIRE(p.epsilon == *std::max_element(p.probabilities.begin(), p.probabilities.end()));
      REQUIRE(event.epsilon == p.epsilon);

      const bool autonomous = p.predicted_class == step.sample.true_class &&
                              p.epsilon >= config.monitor.k_threshold &&
                              taught.contains(p.predicted_class);
      REQUIRE((event.mode == Mode::Operating) == autonomous);
      // The human teaches exactly when they intervene, always with the true class.
      REQUIRE(step.learned == event.human_intervened);
      if (step.learned) taught.insert(step.sample.true_class);
      REQUIRE(event.fix_event == (i == config.fix_at));
    }
  }
}

TEST_CASE("invalid scenario configs are rejected before running", "[scenario]") {
  auto rejects = [](auto mutate) {
    ScenarioConfig config;
    mutate(config);
    CHECK_THROWS_AS(run_scenario(config), std::invalid_argument);
  };
  rejects([](ScenarioConfig& c) { c.disrupt_at = c.num_iterations + 1; });
  rejects([](ScenarioConfig& c) { c.fix_at = c.num_iterations + 1; });
  rejects([](ScenarioConfig& c) { c.fix_at = c.disrupt_at; });
  rejects([](ScenarioConfig& c) { c.fix_at = c.disrupt_at - 1; });
  rejects([](ScenarioConfig& c) { c.ema_rate = 0.0; });
  rejects([](ScenarioConfig& c) { c.ema_rate = 1.5; });
  rejects([](ScenarioConfig& c) { c.softmax_temperature = 0.0; });
  rejects([](ScenarioConfig& c) { c.sensor_noise_sigma = -1.0; });
  rejects([](ScenarioConfig& c) { c.lights_off_gain = 1.2; });
  rejects([](ScenarioConfig& c) { c.class_means[1] = {0.2, 1.4, 0.2}; });
  rejects([](ScenarioConfig& c) { c.monitor.window_size = 0; });
  rejects([](ScenarioConfig& c) { c.monitor.k_threshold = 1.1; });
}
