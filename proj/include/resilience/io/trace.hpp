#pragma once

#include <cstddef>
#include <istream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "resilience/core/iteration.hpp"

namespace resilience::io {

enum class TraceErrorKind { MalformedLine, NonContiguousIndex, OutOfRangeEpsilon };

inline std::string_view to_string(TraceErrorKind kind) {
  switch (kind) {
    case TraceErrorKind::MalformedLine: return "MalformedLine";
    case TraceErrorKind::NonContiguousIndex: return "NonContiguousIndex";
    case TraceErrorKind::OutOfRangeEpsilon: return "OutOfRangeEpsilon";
  }
  return "Unknown";
}

class TraceError : public std::runtime_error {
 public:
  TraceError(TraceErrorKind kind, std::size_t line, const std::string& reason)
      : std::runtime_error("line " + std::to_string(line) + ": " +
                           std::string(to_string(kind)) + ": " + reason),
        kind_(kind),
        line_(line) {}

  TraceErrorKind kind() const { return kind_; }
  std::size_t line() const { return line_; }

 private:
  TraceErrorKind kind_;
  std::size_t line_;
};

namespace detail {

inline IterationEvent parse_trace_line(std::string_view text, std::size_t line,
                                       std::size_t expected_index) {
  using nlohmann::json;
  auto malformed = [line](const std::string& why) {
    return TraceError(TraceErrorKind::MalformedLine, line, why);
  };

  json record;
  try {
    record = json::parse(text);
  } catch (const json::parse_error& e) {
    throw malformed(std::string("invalid JSON: ") + e.what());
  }
  if (!record.is_object()) throw malformed("record is not an object");

  auto require = [&](const char* key) -> const json& {
    auto it = record.find(key);
    if (it == record.end()) throw malformed(std::string("missing field '") + key + "'");
    return *it;
  };

  const json& index = require("index");
  if (!index.is_number_unsigned()) throw malformed("'index' must be a non-negative integer");
  const json& epsilon = require("epsilon");
  if (!epsilon.is_number()) throw malformed("'epsilon' must be a number");
  const json& mode = require("mode");
  if (!mode.is_string()) throw malformed("'mode' must be a string");
  const json& human = require("human_intervened");
  if (!human.is_boolean()) throw malformed("'human_intervened' must be a boolean");

  IterationEvent event;
  event.index = index.get<std::size_t>();
  event.epsilon = epsilon.get<double>();
  const auto mode_name = mode.get<std::string>();
  if (mode_name == "learning") {
    event.mode = Mode::Learning;
  } else if (mode_name == "operating") {
    event.mode = Mode::Operating;
  } else {
    throw malformed("unknown mode '" + mode_name + "'");
  }
  event.human_intervened = human.get<bool>();
  if (auto fix = record.find("fix_event"); fix != record.end()) {
    if (!fix->is_boolean()) throw malformed("'fix_event' must be a boolean");
    event.fix_event = fix->get<bool>();
  }

  if (!in_unit_interval(event.epsilon)) {
    throw TraceError(TraceErrorKind::OutOfRangeEpsilon, line,
                     "epsilon " + epsilon.dump() + " outside [0,1]");
  }
  if (event.mode == Mode::Operating && event.human_intervened) {
    throw malformed("operating iteration cannot have human_intervened=true");
  }
  if (event.index != expected_index) {
    throw TraceError(TraceErrorKind::NonContiguousIndex, line,
                     "expected index " + std::to_string(expected_index) + ", got " +
                         std::to_string(event.index));
  }
  return event;
}

}  // namespace detail

// One JSON object per line; blank lines are skipped but still counted.
// Fails on the first bad line.
inline std::vector<IterationEvent> read_trace(std::istream& in) {
  std::vector<IterationEvent> events;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    if (text.find_first_not_of(" \t") == std::string::npos) continue;
    events.push_back(detail::parse_trace_line(text, line, events.size()));
  }
  return events;
}

inline std::string write_trace(std::span<const IterationEvent> events) {
  std::string out;
  for (const auto& e : events) {
    nlohmann::ordered_json record;
    record["index"] = e.index;
    record["epsilon"] = e.epsilon;
    record["mode"] = std::string(to_string(e.mode));
    record["human_intervened"] = e.human_intervened;
    record["fix_event"] = e.fix_event;
    out += record.dump();
    out += '\n';
  }
  return out;
}

}  // namespace resilience::io
