#ifndef SRSIM_SVG_PLOT_HPP
#define SRSIM_SVG_PLOT_HPP

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

namespace srsim {

struct PlotSeries {
  std::string label;
  std::vector<std::pair<double, double>> points;
  bool markers = false;  // draw circles at the data points
};

// Minimal static line plot (linear axes, ticks, legend). No third-party
// plotting stack; output is plain SVG.
void write_svg_plot(const std::filesystem::path& path,
                    const std::string& title, const std::string& x_label,
                    const std::string& y_label,
                    const std::vector<PlotSeries>& series);

}  // namespace srsim

#endif
