#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace csr::io {

struct PlotLine {
  std::string label;
  std::vector<double> y;
  double stroke_width = 1.0;
  std::string color = "#334155";
};

struct PlotOptions {
  int width = 960;
  int height = 320;
  std::string title;
};

// One SVG 1.1 document: a frame, min/max axis labels, and one polyline per
// entry in lines. x and every line must have equal lengths.
void write_line_plot(const std::filesystem::path& path, std::span<const double> x,
                     const std::vector<PlotLine>& lines, const PlotOptions& opts);

// Color for the i-th series of a plot; cycles a small fixed palette.
std::string series_color(int i);

} // namespace csr::io
