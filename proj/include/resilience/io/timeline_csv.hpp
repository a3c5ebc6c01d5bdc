#pragma once

#include <charconv>
#include <cstddef>
#include <cstdio>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "resilience/core/config.hpp"
#include "resilience/core/monitor.hpp"
#include "resilience/core/phase.hpp"

namespace resilience::io {

inline constexpr std::string_view kTimelineHeader =
    "index,epsilon,mode,human_intervened,acr,phase";

class TimelineError : public std::runtime_error {
 public:
  TimelineError(std::size_t line, const std::string& reason)
      : std::runtime_error("timeline line " + std::to_string(line) + ": " + reason),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Shortest representation that parses back to the same double.
inline std::string format_shortest(double value) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

inline std::string format_fixed6(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", value);
  return buf;
}

inline std::string write_timeline(std::span<const TimelineRow> timeline) {
  std::string out(kTimelineHeader);
  out += '\n';
  for (const auto& row : timeline) {
    out += std::to_string(row.event.index);
    out += ',';
    out += format_shortest(row.event.epsilon);
    out += ',';
    out += to_string(row.event.mode);
    out += ',';
    out += row.event.human_intervened ? "true" : "false";
    out += ',';
    out += format_fixed6(row.point.acr);
    out += ',';
    out += to_string(row.label.phase);
    out += '\n';
  }
  return out;
}

// Parses a timeline and re-derives ACR and phases with the monitor; the file's
// derived columns must agree. The format has no fix_event column, so a fix
// is placed on the first second_disruptive row, the earliest position
// consistent with the labels.
inline std::vector<TimelineRow> read_timeline(std::string_view text, const MonitorConfig& config) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  if (!std::getline(in, line) || line != kTimelineHeader) {
    throw TimelineError(1, "expected header '" + std::string(kTimelineHeader) + "'");
  }
  ++line_no;

  struct Parsed {
    IterationEvent event;
    std::string acr;
    Phase phase;
    std::size_t line;
  };
  std::vector<Parsed> rows;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::string field;
    std::istringstream cells(line);
    while (std::getline(cells, field, ',')) fields.push_back(field);
    if (fields.size() != 6) throw TimelineError(line_no, "expected 6 columns");

    Parsed p;
    p.line = line_no;
    const auto& idx = fields[0];
    if (std::from_chars(idx.data(), idx.data() + idx.size(), p.event.index).ec != std::errc{}) {
      throw TimelineError(line_no, "bad index '" + idx + "'");
    }
    const auto& eps = fields[1];
    if (std::from_chars(eps.data(), eps.data() + eps.size(), p.event.epsilon).ec != std::errc{}) {
      throw TimelineError(line_no, "bad epsilon '" + eps + "'");
    }
    if (fields[2] == "learning") {
      p.event.mode = Mode::Learning;
    } else if (fields[2] == "operating") {
      p.event.mode = Mode::Operating;
    } else {
      throw TimelineError(line_no, "bad mode '" + fields[2] + "'");
    }
    if (fields[3] != "true" && fields[3] != "false") {
      throw TimelineError(line_no, "bad human_intervened '" + fields[3] + "'");
    }
    p.event.human_intervened = fields[3] == "true";
    p.acr = fields[4];
    const auto phase = parse_phase(fields[5]);
    if (!phase) throw TimelineError(line_no, "bad phase '" + fields[5] + "'");
    p.phase = *phase;
    rows.push_back(std::move(p));
  }

  for (auto& p : rows) {
    if (p.phase == Phase::SecondDisruptive) {
      p.event.fix_event = true;
      break;
    }
  }

  Monitor monitor(config);
  for (const auto& p : rows) {
    try {
      monitor.push(p.event);
    } catch (const std::exception& e) {
      throw TimelineError(p.line, e.what());
    }
  }
  const auto result = monitor.finish();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& row = result.timeline[i];
    if (format_fixed6(row.point.acr) != rows[i].acr) {
      throw TimelineError(rows[i].line, "acr column disagrees with recomputed value " +
                                            format_fixed6(row.point.acr));
    }
    if (row.label.phase != rows[i].phase) {
      throw TimelineError(rows[i].line, "phase column disagrees with recomputed phase " +
                                            std::string(to_string(row.label.phase)));
    }
  }
  return result.timeline;
}

}  // namespace resilience::io
