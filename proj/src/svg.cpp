#include "csr/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "csr/csv.hpp"
#include "csr/errors.hpp"

namespace csr::io {

namespace {

constexpr double kMarginLeft = 56.0;
constexpr double kMarginRight = 16.0;
constexpr double kMarginTop = 28.0;
constexpr double kMarginBottom = 36.0;

std::string px(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

} // namespace

std::string series_color(int i) {
  static const char* palette[] = {"#b91c1c", "#1d4ed8", "#047857", "#7c3aed",
                                  "#b45309", "#0e7490", "#be185d", "#4d7c0f"};
  return palette[i % 8];
}

void write_line_plot(const std::filesystem::path& path, std::span<const double> x,
                     const std::vector<PlotLine>& lines, const PlotOptions& opts) {
  if (x.size() < 2) throw DataError("plot needs at least two samples");
  for (const PlotLine& line : lines)
    if (line.y.size() != x.size())
      throw DataError("plot line '" + line.label + "' length does not match x");

  double xmin = x.front(), xmax = x.back();
  double ymin = 0.0, ymax = 1.0;
  bool first = true;
  for (const PlotLine& line : lines)
    for (double v : line.y) {
      if (!std::isfinite(v)) throw DataError("non-finite value in plot line");
      if (first) {
        ymin = ymax = v;
        first = false;
      } else {
        ymin = std::min(ymin, v);
        ymax = std::max(ymax, v);
      }
    }
  if (ymin == ymax) {
    ymin -= 1.0;
    ymax += 1.0;
  }

  const double w = opts.width - kMarginLeft - kMarginRight;
  const double h = opts.height - kMarginTop - kMarginBottom;
  auto sx = [&](double v) { return kMarginLeft + (v - xmin) / (xmax - xmin) * w; };
  auto sy = [&](double v) { return kMarginTop + (ymax - v) / (ymax - ymin) * h; };

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
      << opts.width << "\" height=\"" << opts.height << "\" viewBox=\"0 0 " << opts.width
      << " " << opts.height << "\">\n"
      << "  <rect width=\"" << opts.width << "\" height=\"" << opts.height
      << "\" fill=\"white\"/>\n"
      << "  <rect x=\"" << px(kMarginLeft) << "\" y=\"" << px(kMarginTop) << "\" width=\""
      << px(w) << "\" height=\"" << px(h)
      << "\" fill=\"none\" stroke=\"#94a3b8\" stroke-width=\"1\"/>\n";
  if (!opts.title.empty())
    svg << "  <text x=\"" << px(kMarginLeft) << "\" y=\"18\" font-family=\"sans-serif\""
        << " font-size=\"13\" fill=\"#0f172a\">" << opts.title << "</text>\n";

  for (const PlotLine& line : lines) {
    svg << "  <polyline fill=\"none\" stroke=\"" << line.color << "\" stroke-width=\""
        << line.stroke_width << "\" points=\"";
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (j) svg << ' ';
      svg << px(sx(x[j])) << ',' << px(sy(line.y[j]));
    }
    svg << "\"/>\n";
  }

  svg << "  <text x=\"" << px(kMarginLeft) << "\" y=\"" << px(opts.height - 12.0)
      << "\" font-family=\"sans-serif\" font-size=\"11\" fill=\"#475569\">"
      << format_double(xmin) << "</text>\n"
      << "  <text x=\"" << px(opts.width - kMarginRight - 60.0) << "\" y=\""
      << px(opts.height - 12.0)
      << "\" font-family=\"sans-serif\" font-size=\"11\" fill=\"#475569\">"
      << format_double(xmax) << "</text>\n"
      << "  <text x=\"6\" y=\"" << px(kMarginTop + 10.0)
      << "\" font-family=\"sans-serif\" font-size=\"11\" fill=\"#475569\">"
      << px(ymax) << "</text>\n"
      << "  <text x=\"6\" y=\"" << px(kMarginTop + h)
      << "\" font-family=\"sans-serif\" font-size=\"11\" fill=\"#475569\">" << px(ymin)
      << "</text>\n"
      << "</svg>\n";
  write_text_atomic(path, svg.str());
}

} // namespace csr::io
