#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "resilience/resilience.hpp"

namespace resilience::cli {

enum ExitCode : int { kSuccess = 0, kRuntimeFailure = 1, kUsageError = 2 };

// Usage/validation problems map to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct MonitorOverrides {
  std::optional<double> k;
  std::optional<std::size_t> window_size;
  std::optional<std::string> degradation_trigger;
  std::optional<std::string> recovery_comparison;

  void add_to(CLI::App& cmd) {
    cmd.add_option("--k", k, "Desired confidence level K in [0,1]");
    cmd.add_option("--window-size", window_size, "Iterations per ACR time frame");
    cmd.add_option("--degradation-trigger", degradation_trigger,
                   "exact_zero | below_threshold");
    cmd.add_option("--recovery-comparison", recovery_comparison,
                   "greater_or_equal | strictly_greater");
  }

  void apply(MonitorConfig& config) const {
    if (k) config.k_threshold = *k;
    if (window_size) config.window_size = *window_size;
    if (degradation_trigger) {
      auto parsed = parse_trigger(*degradation_trigger);
      if (!parsed) throw UsageError("unknown degradation trigger '" + *degradation_trigger + "'");
      config.degradation_trigger = *parsed;
    }
    if (recovery_comparison) {
      auto parsed = parse_comparison(*recovery_comparison);
      if (!parsed) throw UsageError("unknown recovery comparison '" + *recovery_comparison + "'");
      config.recovery_comparison = *parsed;
    }
  }
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
  if (!out) throw std::runtime_error("failed to write '" + path.string() + "'");
}

inline sim::ScenarioConfig load_config(const std::string& path) {
  if (path.empty()) return {};
  try {
    return io::parse_config(read_file(path));
  } catch (const io::ConfigError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

inline std::string phase_summary(const ResilienceReport& report) {
  std::string out = "phases:";
  bool first = true;
  for (Phase phase : kAllPhases) {
    if (report.length_of(phase) == 0) continue;
    out += first ? " " : " -> ";
    out += std::string(to_string(phase)) + "(" + std::to_string(report.length_of(phase)) + ")";
    first = false;
  }
  if (first) out += " none";
  return out;
}

inline void write_outputs(const std::filesystem::path& dir, const MonitorResult& result) {
  std::filesystem::create_directories(dir);
  write_file(dir / "timeline.csv", io::write_timeline(result.timeline));
  write_file(dir / "report.json", io::write_report(result.report));
  if (!result.timeline.empty()) {
    std::vector<AcrPoint> points;
    std::vector<PhaseLabel> labels;
    for (const auto& row : result.timeline) {
      points.push_back(row.point);
      labels.push_back(row.label);
    }
    write_file(dir / "plot.svg", io::render_plot(points, labels, result.report.acr_threshold));
  }
}

inline std::string fmt2(std::optional<double> v) {
  if (!v) return "n/a";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", *v);
  return buf;
}

inline std::string format_report_table(const ResilienceReport& report) {
  std::ostringstream out;
  auto row = [&out](const std::string& name, const std::string& value) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "%-26s %s\n", name.c_str(), value.c_str());
    out << buf;
  };
  auto count = [](const std::optional<EpisodeMeasures>& m, std::size_t EpisodeMeasures::*field) {
    return m ? std::to_string((*m).*field) : std::string("n/a");
  };
  auto ratio = [](const std::optional<EpisodeMeasures>& m,
                  std::optional<double> EpisodeMeasures::*field) {
    return m ? fmt2((*m).*field) : std::string("n/a");
  };
  auto flag = [](const std::optional<EpisodeMeasures>& m) {
    return m ? std::string(m->recovered ? "yes" : "no") : std::string("n/a");
  };

  row("measure", "value");
  row("complete", report.complete ? "yes" : "no");
  row("acr_threshold", fmt2(report.acr_threshold));
  row("state_length", report.steady_length ? std::to_string(*report.steady_length) : "n/a");
  for (const auto& [label, m] : {std::pair{"first episode", &report.first_episode},
                                 std::pair{"second episode", &report.second_episode}}) {
    const std::string p = std::string(label) + " ";
    row(p + "span", count(*m, &EpisodeMeasures::span_length));
    row(p + "PUT", count(*m, &EpisodeMeasures::put));
    row(p + "PAT", count(*m, &EpisodeMeasures::pat));
    row(p + "PUT ratio", ratio(*m, &EpisodeMeasures::put_ratio));
    row(p + "PAT ratio", ratio(*m, &EpisodeMeasures::pat_ratio));
    row(p + "HI average", ratio(*m, &EpisodeMeasures::hi_average));
    row(p + "recovered", flag(*m));
  }
  for (Phase phase : kAllPhases) {
    row("length " + std::string(to_string(phase)), std::to_string(report.length_of(phase)));
  }
  if (!report.anomalies.empty()) row("anomalies", std::to_string(report.anomalies.size()));
  return out.str();
}

// Entry point shared by the binary and the tests.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Resilience monitor for collaborative AI systems learning online", "resilience"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir = ".";
  std::optional<std::uint64_t> seed;
  std::string export_trace;
  MonitorOverrides sim_overrides;
  auto* simulate = app.add_subcommand("simulate", "Run the case-study simulator");
  simulate->add_option("--config", config_path, "Config file (JSON)");
  simulate->add_option("--out", out_dir, "Output directory");
  simulate->add_option("--seed", seed, "RNG seed override");
  simulate->add_option("--export-trace", export_trace, "Also write the event trace (JSONL)");
  sim_overrides.add_to(*simulate);

  std::string trace_path;
  std::string monitor_config_path;
  std::string monitor_out = ".";
  MonitorOverrides mon_overrides;
  auto* monitor = app.add_subcommand("monitor", "Monitor an external event trace");
  monitor->add_option("--trace", trace_path, "Event trace (JSONL)")->required();
  monitor->add_option("--config", monitor_config_path, "Config file; its monitor section is used");
  monitor->add_option("--out", monitor_out, "Output directory");
  mon_overrides.add_to(*monitor);

  std::string report_path;
  auto* report = app.add_subcommand("report", "Print the measures of a report.json");
  report->add_option("report", report_path, "Report file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (*simulate) {
      sim::ScenarioConfig config = load_config(config_path);
      if (seed) config.seed = *seed;
      sim_overrides.apply(config.monitor);
      try {
        config.validate();
      } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("invalid configuration: ") + e.what());
      }
      const auto result = sim::run_scenario(config);
      write_outputs(out_dir, result.monitor);
      if (!export_trace.empty()) write_file(export_trace, io::write_trace(result.events()));
      out << phase_summary(result.monitor.report) << "\n";
    } else if (*monitor) {
      MonitorConfig config = load_config(monitor_config_path).monitor;
      mon_overrides.apply(config);
      try {
        config.validate();
      } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("invalid configuration: ") + e.what());
      }
      std::ifstream in(trace_path, std::ios::binary);
      if (!in) throw UsageError("cannot open trace '" + trace_path + "'");
      std::vector<IterationEvent> events;
      try {
        events = io::read_trace(in);
      } catch (const io::TraceError& e) {
        throw UsageError(trace_path + ": " + e.what());
      }
      const auto result = run_monitor(events, config);
      write_outputs(monitor_out, result);
      out << phase_summary(result.report) << "\n";
    } else if (*report) {
      ResilienceReport parsed;
      try {
        parsed = io::read_report(read_file(report_path));
      } catch (const io::ReportError& e) {
        throw UsageError(report_path + ": " + e.what());
      }
      out << format_report_table(parsed);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kRuntimeFailure;
  }
  return kSuccess;
}

}  // namespace resilience::cli
