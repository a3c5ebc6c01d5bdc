#include <catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

#include "resilience/core/acr_window.hpp"
#include "resilience/core/state_machine.hpp"

using namespace resilience;

namespace {

// Drives a state machine with a scripted ACR series. Fix events are given by
// iteration index.
struct Script {
  explicit Script(MonitorConfig config = {}) : sm(config) {}

  Phase feed(double acr, bool fix = false) {
    const std::size_t i = sm.phase_history().size();
    IterationEvent e{i, 0.5, acr > 0 ? Mode::Operating : Mode::Learning, acr == 0, fix};
    if (e.mode == Mode::Operating) e.human_intervened = false;
    return sm.step({i, acr}, e);
  }

  void feed_n(std::size_t n, double acr) {
    for (std::size_t k = 0; k < n; ++k) feed(acr);
  }

  Phase label(std::size_t i) const { return sm.phase_history()[i].phase; }

  ResilienceStateMachine sm;
};

}  // namespace

TEST_CASE("first full autonomous frame opens the steady phase", "[fsm]") {
  // Hand-labelled: W=5, learning until the all-ones frame at index 12.
  Script s;
  const std::vector<double> series{0, 0, 0, 0, 0, 0, 0, 0, 0.2, 0.4, 0.6, 0.8, 1.0, 1.0};
  for (double a : series) s.feed(a);
  for (std::size_t i = 0; i < 12; ++i) CHECK(s.label(i) == Phase::InitialLearning);
  CHECK(s.label(12) == Phase::FirstSteady);
  CHECK(s.label(13) == Phase::FirstSteady);
  CHECK_FALSE(s.sm.acr_threshold());
  CHECK_FALSE(s.sm.steady_length());
}

TEST_CASE("ACR of zero ends the steady phase and freezes the threshold", "[fsm]") {
  Script s;
  for (double a : {1.0, 0.8, 0.4, 0.6, 1.0}) s.feed(a);
  CHECK(s.sm.current_phase() == Phase::FirstSteady);
  CHECK(s.feed(0.0) == Phase::FirstDisruptive);
  REQUIRE(s.sm.acr_threshold());
  CHECK(*s.sm.acr_threshold() == 0.4);
  CHECK(*s.sm.steady_length() == 5);
  // Later dips never move the threshold.
  s.feed(0.2);
  s.feed(1.0);
  CHECK(*s.sm.acr_threshold() == 0.4);
}

TEST_CASE("recovery is confirmed after State Length qualifying points and back-dated",
          "[fsm]") {
  Script s;
  s.feed(1.0);
  s.feed_n(32, 1.0);
  s.feed(0.4);  // steady: 34 points, min 0.4
  REQUIRE(s.sm.current_phase() == Phase::FirstSteady);
  s.feed(0.0);  // 34: disruptive
  REQUIRE(*s.sm.steady_length() == 34);
  s.feed_n(5, 0.2);  // 35..39 below
  REQUIRE(*s.sm.last_below_index() == 39);

  s.feed_n(33, 0.6);  // 40..72 qualifying, not yet enough
  CHECK(s.sm.current_phase() == Phase::FirstDisruptive);
  CHECK(s.sm.phase_history()[72].provisional);
  CHECK(s.sm.phase_history()[40].provisional);
  CHECK_FALSE(s.sm.phase_history()[39].provisional);

  CHECK(s.feed(0.6) == Phase::Recovered);  // 73: 34th qualifying point
  for (std::size_t i = 34; i <= 39; ++i) CHECK(s.label(i) == Phase::FirstDisruptive);
  for (std::size_t i = 40; i <= 73; ++i) {
    CHECK(s.label(i) == Phase::Recovered);
    CHECK_FALSE(s.sm.phase_history()[i].provisional);
  }
}

TEST_CASE("a broken qualifying run restarts the count and confirms its labels", "[fsm]") {
  Script s;
  s.feed_n(3, 1.0);
  s.feed(0.0);  // State Length 3, threshold 1.0
  s.feed_n(2, 1.0);
  CHECK(s.sm.phase_history()[5].provisional);
  s.feed(0.8);  // breaks the run
  CHECK_FALSE(s.sm.phase_history()[4].provisional);
  CHECK_FALSE(s.sm.phase_history()[5].provisional);
  CHECK(*s.sm.last_below_index() == 6);
  s.feed_n(2, 1.0);
  CHECK(s.sm.current_phase() == Phase::FirstDisruptive);
  s.feed(1.0);
  CHECK(s.sm.current_phase() == Phase::Recovered);
  CHECK(s.label(6) == Phase::FirstDisruptive);
  CHECK(s.label(7) == Phase::Recovered);
}

TEST_CASE("second disruptive phase needs a fix event seen while recovered", "[fsm]") {
  Script s;
  s.feed_n(2, 1.0);
  s.feed(0.0, /*fix=*/true);  // fix before recovery: anomaly only
  REQUIRE(s.sm.anomalies().size() == 1);
  CHECK(s.sm.anomalies()[0] == Anomaly{2, AnomalyKind::FixBeforeRecovery});
  s.feed_n(2, 1.0);
  REQUIRE(s.sm.current_phase() == Phase::Recovered);

  s.feed(0.0);  // no fix yet: stays recovered
  CHECK(s.sm.current_phase() == Phase::Recovered);
  s.feed(0.6, true);  // fix arms the trigger
  CHECK(s.sm.current_phase() == Phase::Recovered);
  CHECK(s.feed(0.0) == Phase::SecondDisruptive);
  s.feed(1.0);
  CHECK(s.feed(1.0) == Phase::SecondSteady);
  CHECK(s.feed(0.0, true) == Phase::SecondSteady);
  REQUIRE(s.sm.anomalies().size() == 2);
  CHECK(s.sm.anomalies()[1].kind == AnomalyKind::FixAfterFinalState);
}

TEST_CASE("fix and trigger on the same iteration opens the second episode", "[fsm]") {
  Script s;
  s.feed(1.0);
  s.feed(0.0);
  s.feed(1.0);
  REQUIRE(s.sm.current_phase() == Phase::Recovered);
  CHECK(s.feed(0.0, true) == Phase::SecondDisruptive);
}

TEST_CASE("below-threshold trigger uses K first and the ACR Threshold second", "[fsm]") {
  MonitorConfig config;
  config.degradation_trigger = DegradationTrigger::BelowThreshold;
  Script s(config);
  s.feed(1.0);
  s.feed(0.6);
  s.feed(0.4);  // not below K = 0.4
  CHECK(s.sm.current_phase() == Phase::FirstSteady);
  CHECK(s.feed(0.2) == Phase::FirstDisruptive);
  CHECK(*s.sm.acr_threshold() == 0.4);
  s.feed_n(3, 0.4);
  REQUIRE(s.sm.current_phase() == Phase::Recovered);
  s.feed(0.4, true);
  CHECK(s.sm.current_phase() == Phase::Recovered);
  CHECK(s.feed(0.2) == Phase::SecondDisruptive);
}

TEST_CASE("strict comparison does not count points equal to the threshold", "[fsm]") {
  MonitorConfig config;
  config.recovery_comparison = RecoveryComparison::StrictlyGreater;
  Script s(config);
  s.feed(1.0);
  s.feed(0.6);
  s.feed(0.0);  // threshold 0.6, State Length 2
  s.feed_n(5, 0.6);
  CHECK(s.sm.current_phase() == Phase::FirstDisruptive);
  s.feed_n(2, 0.8);
  CHECK(s.sm.current_phase() == Phase::Recovered);
}

TEST_CASE("events must arrive in index order", "[fsm]") {
  ResilienceStateMachine sm(MonitorConfig{});
  IterationEvent e{1, 0.2, Mode::Learning, true, false};
  CHECK_THROWS_AS(sm.step({1, 0.0}, e), std::invalid_argument);
  e.index = 0;
  CHECK_THROWS_AS(sm.step({1, 0.0}, e), std::invalid_argument);
  CHECK_THROWS_AS(ResilienceStateMachine(MonitorConfig{0, 0.4}), std::invalid_argument);
}

TEST_CASE("phase history invariants hold on random streams", "[fsm][property]") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 300; ++trial) {
    MonitorConfig config;
    config.window_size = 1 + rng() % 7;
    config.degradation_trigger =
        rng() & 1u ? DegradationTrigger::ExactZero : DegradationTrigger::BelowThreshold;
    config.recovery_comparison =
        rng() & 1u ? RecoveryComparison::GreaterOrEqual : RecoveryComparison::StrictlyGreater;
    ResilienceStateMachine sm(config);
    AcrWindow window(config.window_size);

    // Bursty bits so every phase has a chance to appear.
    const std::size_t n = 50 + rng() % 400;
    double p_one = 0.5;
    std::vector<AcrPoint> points;
    std::optional<double> frozen;
    for (std::size_t i = 0; i < n; ++i) {
      if (rng() % 20 == 0) p_one = static_cast<double>(rng() % 101) / 100.0;
      const bool one = static_cast<double>(rng() % 1000) / 1000.0 < p_one;
      const AcrPoint point = window.push(one ? Contribution::One : Contribution::Zero);
      IterationEvent e{i, 0.5, one ? Mode::Operating : Mode::Learning, !one, rng() % 40 == 0};
      sm.step(point, e);
      points.push_back(point);
      if (sm.acr_threshold()) {
        if (frozen) REQUIRE(*frozen == *sm.acr_threshold());
        frozen = sm.acr_threshold();
      }
    }

    const auto history = sm.phase_history();
    REQUIRE(history.size() == n);
    for (std::size_t i = 1; i < n; ++i) REQUIRE(history[i - 1].phase <= history[i].phase);

    std::optional<double> steady_min;
    std::size_t steady_count = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (history[i].phase == Phase::FirstSteady) {
        steady_min = steady_min ? std::min(*steady_min, points[i].acr) : points[i].acr;
        ++steady_count;
      }
    }
    if (sm.acr_threshold()) {
      REQUIRE(*sm.acr_threshold() == *steady_min);
      REQUIRE(*sm.steady_length() == steady_count);
    }
    // Provisional labels only form a tail inside a disruptive phase.
    bool seen_provisional = false;
    for (const auto& label : history) {
      if (label.provisional) {
        REQUIRE(is_disruptive(label.phase));
        seen_provisional = true;
      } else {
        REQUIRE_FALSE(seen_provisional);
      }
    }
  }
}
