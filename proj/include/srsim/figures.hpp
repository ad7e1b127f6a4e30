#ifndef SRSIM_FIGURES_HPP
#define SRSIM_FIGURES_HPP

#include <filesystem>
#include <optional>
#include <string_view>
#include <vector>

#include "srsim/config.hpp"

namespace srsim {

// Bundled experiments. fig4: phi0 response at the reference coupling.
// fig5: phi0 response for the four coupling strengths g in
// {1.0, 1.5, 1.6, 1.7} MHz (chi0 scales as g^2). fig6: seed counts
// {0.1, 1, 10}. fig7: pump durations tau_end in {pi/3, 2pi/3, pi, 4pi/3}.
// logistic_baseline: rate-equation control with no phase memory.
// eq6_overlay: simulated points against the free sinusoid fit and the
// fixed-offset (delta = pi/2) prediction.
enum class FigurePreset {
  fig4,
  fig5,
  fig6,
  fig7,
  logistic_baseline,
  eq6_overlay,
};

const char* figure_preset_name(FigurePreset preset);
std::optional<FigurePreset> figure_preset_from_name(std::string_view name);
std::vector<FigurePreset> all_figure_presets();

struct FigureOptions {
  int parallelism = 4;
  // fig4 / eq6_overlay: use the apparatus phase grid (steps of 0.3*pi from
  // the 10 us generation-time increments) instead of 16 uniform points.
  bool experimental_spacing = false;
  bool mirror_family = false;
};

struct ArtifactBundle {
  std::vector<std::filesystem::path> files;
};

// 16 uniform points covering [0, 2*pi).
std::vector<double> phi0_grid_uniform(int n = 16);
// k * 0.3*pi for k = 0..6 (the 10 us generation-time steps).
std::vector<double> phi0_grid_experimental();

// Runs the preset's sweeps from the given base configuration and writes CSV
// tables, fit reports and an SVG plot under out_dir.
ArtifactBundle run_figure(FigurePreset preset, const SimConfig& base,
                          const std::filesystem::path& out_dir,
                          const FigureOptions& options = {});

}  // namespace srsim

#endif
