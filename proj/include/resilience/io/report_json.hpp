#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "resilience/core/phase.hpp"
#include "resilience/core/report.hpp"
#include "resilience/core/state_machine.hpp"

namespace resilience::io {

class ReportError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline void put_episode(nlohmann::ordered_json& j, const EpisodeMeasures& m) {
  j["disruptive_span"] = m.span_length;
  j["put"] = m.put;
  j["pat"] = m.pat;
  if (m.put_ratio) j["put_ratio"] = *m.put_ratio;
  if (m.pat_ratio) j["pat_ratio"] = *m.pat_ratio;
  j["human_interventions"] = m.human_interventions;
  if (m.hi_average) j["hi_average"] = *m.hi_average;
}

inline std::optional<double> optional_number(const nlohmann::json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) return std::nullopt;
  if (!it->is_number()) throw ReportError(std::string("'") + key + "' must be a number");
  return it->get<double>();
}

inline std::size_t count(const nlohmann::json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end() || !it->is_number_unsigned()) {
    throw ReportError(std::string("'") + key + "' must be a non-negative integer");
  }
  return it->get<std::size_t>();
}

inline EpisodeMeasures get_episode(const nlohmann::json& j, bool recovered) {
  EpisodeMeasures m;
  m.span_length = count(j, "disruptive_span");
  m.put = count(j, "put");
  m.pat = count(j, "pat");
  m.human_interventions = count(j, "human_interventions");
  m.put_ratio = optional_number(j, "put_ratio");
  m.pat_ratio = optional_number(j, "pat_ratio");
  m.hi_average = optional_number(j, "hi_average");
  m.recovered = recovered;
  return m;
}

}  // namespace detail

// Key order is fixed. First-episode measures sit at the top level; the second
// episode is nested. Threshold-dependent keys are omitted for an incomplete
// report and ratios are omitted for an empty span.
inline std::string write_report(const ResilienceReport& report) {
  nlohmann::ordered_json j;
  j["complete"] = report.complete;
  if (report.acr_threshold) j["acr_threshold"] = *report.acr_threshold;
  if (report.steady_length) j["steady_length"] = *report.steady_length;
  auto& lengths = j["state_lengths"];
  lengths = nlohmann::ordered_json::object();
  for (Phase phase : kAllPhases) lengths[std::string(to_string(phase))] = report.length_of(phase);
  if (report.first_episode) detail::put_episode(j, *report.first_episode);
  j["recovered"] = {
      {"first_episode", report.first_episode && report.first_episode->recovered},
      {"second_episode", report.second_episode && report.second_episode->recovered},
  };
  if (report.second_episode) {
    auto& second = j["second_episode"];
    second = nlohmann::ordered_json::object();
    detail::put_episode(second, *report.second_episode);
  }
  auto& anomalies = j["anomalies"];
  anomalies = nlohmann::ordered_json::array();
  for (const auto& a : report.anomalies) {
    anomalies.push_back({{"index", a.index}, {"kind", std::string(to_string(a.kind))}});
  }
  return j.dump(2) + "\n";
}

inline ResilienceReport read_report(const std::string& text) {
  using nlohmann::json;
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ReportError(std::string("invalid report JSON: ") + e.what());
  }
  if (!j.is_object()) throw ReportError("report must be a JSON object");

  ResilienceReport report;
  auto complete = j.find("complete");
  if (complete == j.end() || !complete->is_boolean()) {
    throw ReportError("'complete' must be a boolean");
  }
  report.complete = complete->get<bool>();

  auto lengths = j.find("state_lengths");
  if (lengths == j.end() || !lengths->is_object()) {
    throw ReportError("'state_lengths' must be an object");
  }
  for (Phase phase : kAllPhases) {
    report.state_lengths[static_cast<std::size_t>(phase)] =
        detail::count(*lengths, std::string(to_string(phase)).c_str());
  }

  bool first_recovered = false;
  bool second_recovered = false;
  if (auto rec = j.find("recovered"); rec != j.end() && rec->is_object()) {
    first_recovered = rec->value("first_episode", false);
    second_recovered = rec->value("second_episode", false);
  }

  if (report.complete) {
    report.acr_threshold = detail::optional_number(j, "acr_threshold");
    if (!report.acr_threshold) throw ReportError("complete report lacks 'acr_threshold'");
    report.steady_length = detail::count(j, "steady_length");
    report.first_episode = detail::get_episode(j, first_recovered);
    auto second = j.find("second_episode");
    if (second == j.end() || !second->is_object()) {
      throw ReportError("complete report lacks 'second_episode'");
    }
    report.second_episode = detail::get_episode(*second, second_recovered);
  }

  if (auto anomalies = j.find("anomalies"); anomalies != j.end()) {
    if (!anomalies->is_array()) throw ReportError("'anomalies' must be an array");
    for (const auto& a : *anomalies) {
      Anomaly anomaly;
      anomaly.index = detail::count(a, "index");
      const auto kind = a.value("kind", std::string());
      if (kind == "fix_before_recovery") {
        anomaly.kind = AnomalyKind::FixBeforeRecovery;
      } else if (kind == "fix_after_final_state") {
        anomaly.kind = AnomalyKind::FixAfterFinalState;
      } else {
        throw ReportError("unknown anomaly kind '" + kind + "'");
      }
      report.anomalies.push_back(anomaly);
    }
  }
  return report;
}

}  // namespace resilience::io
