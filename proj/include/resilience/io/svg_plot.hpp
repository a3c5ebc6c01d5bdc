#pragma once

#include <array>
#include <cstddef>
#include <cstdio>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>

#include "resilience/core/acr_window.hpp"
#include "resilience/core/phase.hpp"

namespace resilience::io {

struct PlotLayout {
  double width = 960.0;
  double height = 360.0;
  double left = 60.0;
  double right = 20.0;
  double top = 40.0;
  double bottom = 40.0;

  double plot_width() const { return width - left - right; }
  double plot_height() const { return height - top - bottom; }
  // Value axis: 0 at the bottom edge, 1 at the top edge.
  double y_of(double value) const { return top + (1.0 - value) * plot_height(); }
};

namespace detail {

inline std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

inline constexpr std::array<const char*, 6> kBandFill = {
    "#e8e8e8", "#d9f0d3", "#fddbc7", "#d1e5f0", "#f4a582", "#a6dba0",
};

}  // namespace detail

// ACR curve over iterations with phase bands and the ACR Threshold line.
// Output depends only on the inputs.
inline std::string render_plot(std::span<const AcrPoint> series,
                               std::span<const PhaseLabel> phases,
                               std::optional<double> threshold,
                               const PlotLayout& layout = {}) {
  using detail::num;
  if (series.empty()) throw std::invalid_argument("render_plot: empty ACR series");
  if (phases.size() != series.size()) {
    throw std::invalid_argument("render_plot: phase history and ACR series differ in length");
  }

  const double slot = layout.plot_width() / static_cast<double>(series.size());
  auto x_of = [&](std::size_t i) { return layout.left + (static_cast<double>(i) + 0.5) * slot; };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(layout.width) +
         "\" height=\"" + num(layout.height) + "\" viewBox=\"0 0 " + num(layout.width) + " " +
         num(layout.height) + "\">\n";
  svg += "<rect x=\"0\" y=\"0\" width=\"" + num(layout.width) + "\" height=\"" +
         num(layout.height) + "\" fill=\"white\"/>\n";

  svg += "<g class=\"bands\">\n";
  for (std::size_t start = 0; start < phases.size();) {
    std::size_t end = start;
    while (end + 1 < phases.size() && phases[end + 1].phase == phases[start].phase) ++end;
    const Phase phase = phases[start].phase;
    const double x = layout.left + static_cast<double>(start) * slot;
    const double w = static_cast<double>(end - start + 1) * slot;
    svg += "<rect class=\"band\" data-phase=\"" + std::string(to_string(phase)) + "\" x=\"" +
           num(x) + "\" y=\"" + num(layout.top) + "\" width=\"" + num(w) + "\" height=\"" +
           num(layout.plot_height()) + "\" fill=\"" +
           detail::kBandFill[static_cast<std::size_t>(phase)] + "\"/>\n";
    svg += "<text x=\"" + num(x + w / 2.0) + "\" y=\"" + num(layout.top - 8.0) +
           "\" font-size=\"10\" text-anchor=\"middle\">" + std::string(to_string(phase)) +
           "</text>\n";
    start = end + 1;
  }
  svg += "</g>\n";

  const double x_end = layout.left + layout.plot_width();
  const double y_base = layout.y_of(0.0);
  svg += "<g class=\"axes\" stroke=\"black\" stroke-width=\"1\">\n";
  svg += "<line x1=\"" + num(layout.left) + "\" y1=\"" + num(y_base) + "\" x2=\"" + num(x_end) +
         "\" y2=\"" + num(y_base) + "\"/>\n";
  svg += "<line x1=\"" + num(layout.left) + "\" y1=\"" + num(layout.y_of(1.0)) + "\" x2=\"" +
         num(layout.left) + "\" y2=\"" + num(y_base) + "\"/>\n";
  svg += "</g>\n";
  for (double tick : {0.0, 0.5, 1.0}) {
    svg += "<text x=\"" + num(layout.left - 6.0) + "\" y=\"" + num(layout.y_of(tick) + 4.0) +
           "\" font-size=\"10\" text-anchor=\"end\">" + num(tick) + "</text>\n";
  }
  svg += "<text x=\"" + num(layout.left + layout.plot_width() / 2.0) + "\" y=\"" +
         num(layout.height - 8.0) + "\" font-size=\"11\" text-anchor=\"middle\">iteration (" +
         std::to_string(series.size()) + ")</text>\n";

  if (threshold) {
    const double y = layout.y_of(*threshold);
    svg += "<line class=\"threshold\" x1=\"" + num(layout.left) + "\" y1=\"" + num(y) +
           "\" x2=\"" + num(x_end) + "\" y2=\"" + num(y) +
           "\" stroke=\"#b2182b\" stroke-width=\"1\" stroke-dasharray=\"6 4\"/>\n";
  }

  svg += "<polyline class=\"acr\" fill=\"none\" stroke=\"#2166ac\" stroke-width=\"1.5\" points=\"";
  for (std::size_t i = 0; i < series.size(); ++i) {
    if (i) svg += ' ';
    svg += num(x_of(i)) + "," + num(layout.y_of(series[i].acr));
  }
  svg += "\"/>\n";
  svg += "</svg>\n";
  return svg;
}

}  // namespace resilience::io
