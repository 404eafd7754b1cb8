#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "quadgait/simulator.hpp"
#include "quadgait/trace_io.hpp"

namespace quadgait {

struct PlotSeries {
  std::string label;
  std::string color;
  std::vector<double> x;
  std::vector<double> y;
};

struct PlotPanel {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<PlotSeries> series;
};

/// Keeps the first, the minimum and the maximum point of each bucket so
/// extremes survive; returns indices in increasing order.
std::vector<std::size_t> decimate(const std::vector<double>& y, std::size_t max_points);

/// Evenly spaced "nice" tick values covering [lo, hi].
std::vector<double> nice_ticks(double lo, double hi, int target = 6);

/// Standalone SVG document with the panels stacked vertically.
std::string render_svg(const std::vector<PlotPanel>& panels, const std::string& title);

struct PlotFiles {
  std::filesystem::path trajectories;
  std::filesystem::path margin;
};

/// Writes <prefix>_trajectories.svg (x, y and z of the body, leg 1 and leg 2
/// over time) and <prefix>_margin.svg. Throws std::invalid_argument for an
/// empty table and IoError when a file cannot be written.
PlotFiles write_plots_svg(const TraceTable& table, const std::filesystem::path& prefix);
PlotFiles write_plots_svg(const SimTrace& trace, const std::filesystem::path& prefix);

}  // namespace quadgait
