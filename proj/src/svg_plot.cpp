#include "srsim/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <string>

#include "srsim/errors.hpp"

namespace srsim {

namespace {

constexpr int kWidth = 720;
constexpr int kHeight = 480;
constexpr double kLeft = 70, kRight = 20, kTop = 40, kBottom = 50;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c",
                          "#9467bd", "#ff7f0e", "#8c564b"};
constexpr int kPaletteSize = 6;

std::string fmt(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string fmt_tick(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

struct Scale {
  double lo = 0.0, hi = 1.0;     // padded data range
  double p0 = 0.0, p1 = 1.0;     // pixel range
  double to_px(double v) const { return p0 + (v - lo) / (hi - lo) * (p1 - p0); }
};

Scale make_scale(double lo, double hi, double p0, double p1) {
  if (!(hi > lo)) {
    // Flat or empty data: open a unit window around the value.
    const double mid = std::isfinite(lo) ? lo : 0.0;
    lo = mid - 0.5;
    hi = mid + 0.5;
  }
  const double pad = 0.05 * (hi - lo);
  return {lo - pad, hi + pad, p0, p1};
}

}  // namespace

void write_svg_plot(const std::filesystem::path& path,
                    const std::string& title, const std::string& x_label,
                    const std::string& y_label,
                    const std::vector<PlotSeries>& series) {
  double xlo = std::numeric_limits<double>::infinity(), xhi = -xlo;
  double ylo = xlo, yhi = -xlo;
  for (const PlotSeries& s : series)
    for (const auto& [x, y] : s.points) {
      if (!std::isfinite(x) || !std::isfinite(y)) continue;
      xlo = std::min(xlo, x);
      xhi = std::max(xhi, x);
      ylo = std::min(ylo, y);
      yhi = std::max(yhi, y);
    }
  if (!std::isfinite(xlo)) xlo = 0.0, xhi = 1.0, ylo = 0.0, yhi = 1.0;

  const Scale sx = make_scale(xlo, xhi, kLeft, kWidth - kRight);
  const Scale sy = make_scale(ylo, yhi, kHeight - kBottom, kTop);  // y down

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
         std::to_string(kWidth) + "\" height=\"" + std::to_string(kHeight) +
         "\" viewBox=\"0 0 " + std::to_string(kWidth) + ' ' +
         std::to_string(kHeight) + "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  // Frame.
  svg += "<rect x=\"" + fmt(kLeft) + "\" y=\"" + fmt(kTop) + "\" width=\"" +
         fmt(kWidth - kLeft - kRight) + "\" height=\"" +
         fmt(kHeight - kTop - kBottom) +
         "\" fill=\"none\" stroke=\"#444\"/>\n";

  // Ticks: 5 per axis across the padded range.
  for (int i = 0; i <= 4; ++i) {
    const double fx = sx.lo + (sx.hi - sx.lo) * i / 4.0;
    const double px = sx.to_px(fx);
    svg += "<line x1=\"" + fmt(px) + "\" y1=\"" + fmt(kHeight - kBottom) +
           "\" x2=\"" + fmt(px) + "\" y2=\"" + fmt(kHeight - kBottom + 5) +
           "\" stroke=\"#444\"/>\n";
    svg += "<text x=\"" + fmt(px) + "\" y=\"" + fmt(kHeight - kBottom + 18) +
           "\" font-size=\"11\" text-anchor=\"middle\">" + fmt_tick(fx) +
           "</text>\n";

    const double fy = sy.lo + (sy.hi - sy.lo) * i / 4.0;
    const double py = sy.to_px(fy);
    svg += "<line x1=\"" + fmt(kLeft - 5) + "\" y1=\"" + fmt(py) +
           "\" x2=\"" + fmt(kLeft) + "\" y2=\"" + fmt(py) +
           "\" stroke=\"#444\"/>\n";
    svg += "<text x=\"" + fmt(kLeft - 8) + "\" y=\"" + fmt(py + 4) +
           "\" font-size=\"11\" text-anchor=\"end\">" + fmt_tick(fy) +
           "</text>\n";
  }

  // Labels and title.
  svg += "<text x=\"" + fmt((kLeft + kWidth - kRight) / 2.0) + "\" y=\"" +
         fmt(kHeight - 12) + "\" font-size=\"13\" text-anchor=\"middle\">" +
         x_label + "</text>\n";
  svg += "<text x=\"16\" y=\"" + fmt((kTop + kHeight - kBottom) / 2.0) +
         "\" font-size=\"13\" text-anchor=\"middle\" transform=\"rotate(-90 "
         "16 " +
         fmt((kTop + kHeight - kBottom) / 2.0) + ")\">" + y_label +
         "</text>\n";
  svg += "<text x=\"" + fmt(kWidth / 2.0) +
         "\" y=\"24\" font-size=\"15\" text-anchor=\"middle\">" + title +
         "</text>\n";

  // Series: polyline plus optional point markers; legend top-right.
  int color = 0;
  double legend_y = kTop + 16;
  for (const PlotSeries& s : series) {
    const char* stroke = kPalette[color % kPaletteSize];
    ++color;
    if (s.points.size() > 1) {
      std::string pts;
      for (const auto& [x, y] : s.points) {
        if (!std::isfinite(x) || !std::isfinite(y)) continue;
        pts += fmt(sx.to_px(x)) + ',' + fmt(sy.to_px(y)) + ' ';
      }
      svg += "<polyline fill=\"none\" stroke=\"" + std::string(stroke) +
             "\" stroke-width=\"1.5\" points=\"" + pts + "\"/>\n";
    }
    if (s.markers)
      for (const auto& [x, y] : s.points) {
        if (!std::isfinite(x) || !std::isfinite(y)) continue;
        svg += "<circle cx=\"" + fmt(sx.to_px(x)) + "\" cy=\"" +
               fmt(sy.to_px(y)) + "\" r=\"3\" fill=\"" + stroke + "\"/>\n";
      }
    svg += "<line x1=\"" + fmt(kWidth - kRight - 150) + "\" y1=\"" +
           fmt(legend_y) + "\" x2=\"" + fmt(kWidth - kRight - 130) +
           "\" y2=\"" + fmt(legend_y) + "\" stroke=\"" + stroke +
           "\" stroke-width=\"2\"/>\n";
    svg += "<text x=\"" + fmt(kWidth - kRight - 125) + "\" y=\"" +
           fmt(legend_y + 4) + "\" font-size=\"11\">" + s.label +
           "</text>\n";
    legend_y += 16;
  }

  svg += "</svg>\n";

  if (!path.parent_path().empty()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << svg;
  if (!out) throw IoError("failed writing " + path.string());
}

}  // namespace srsim
