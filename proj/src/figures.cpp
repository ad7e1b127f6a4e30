#include "srsim/figures.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "srsim/csv.hpp"
#include "srsim/errors.hpp"
#include "srsim/reduced_models.hpp"
#include "srsim/svg_plot.hpp"
#include "srsim/sweep.hpp"

namespace srsim {

namespace fs = std::filesystem;

const char* figure_preset_name(FigurePreset preset) {
  switch (preset) {
    case FigurePreset::fig4: return "fig4";
    case FigurePreset::fig5: return "fig5";
    case FigurePreset::fig6: return "fig6";
    case FigurePreset::fig7: return "fig7";
    case FigurePreset::logistic_baseline: return "logistic_baseline";
    case FigurePreset::eq6_overlay: return "eq6_overlay";
  }
  return "?";
}

std::optional<FigurePreset> figure_preset_from_name(std::string_view name) {
  for (FigurePreset p : all_figure_presets())
    if (name == figure_preset_name(p)) return p;
  return std::nullopt;
}

std::vector<FigurePreset> all_figure_presets() {
  return {FigurePreset::fig4,
          FigurePreset::fig5,
          FigurePreset::fig6,
          FigurePreset::fig7,
          FigurePreset::logistic_baseline,
          FigurePreset::eq6_overlay};
}

std::vector<double> phi0_grid_uniform(int n) {
  if (n < 6) throw ConfigError("phi0 grid needs at least 6 points");
  std::vector<double> grid(n);
  for (int k = 0; k < n; ++k)
    grid[k] = 2.0 * std::numbers::pi * k / n;
  return grid;
}

std::vector<double> phi0_grid_experimental() {
  // Generation-time steps of 10 us shift phi0 by 0.3*pi per shot; seven
  // shots cover [0, 2*pi).
  std::vector<double> grid;
  for (int k = 0; k < 7; ++k) grid.push_back(0.3 * std::numbers::pi * k);
  return grid;
}

namespace {

struct Curve {
  std::string label;
  double param = 0.0;
  SweepResult sweep;
};

SweepResult phi0_sweep(const SimConfig& base, const std::vector<double>& grid,
                       const FigureOptions& opt) {
  SweepSpec spec;
  spec.base = base;
  spec.axis = SweepAxis::phi0;
  spec.values = grid;
  spec.parallelism = opt.parallelism;
  return run_sweep(spec, opt.mirror_family);
}

std::string summary_csv(const std::string& param_name,
                        const std::vector<Curve>& curves) {
  std::string out = "label," + param_name +
                    ",peak_backward,amplitude,baseline,maximizer,minimizer,"
                    "r_squared\n";
  for (const Curve& c : curves) {
    double peak = 0.0;
    for (const SweepRow& r : c.sweep.rows) peak = std::max(peak, r.backward);
    const PhaseFit& fit = c.sweep.fit.value();
    out += c.label + ',' + csv_number(c.param) + ',' + csv_number(peak) +
           ',' + csv_number(fit.amplitude) + ',' + csv_number(fit.baseline) +
           ',' + csv_number(fit.maximizer) + ',' + csv_number(fit.minimizer) +
           ',' + csv_number(fit.r_squared) + '\n';
  }
  return out;
}

std::vector<PlotSeries> curve_series(const std::vector<Curve>& curves) {
  std::vector<PlotSeries> series;
  for (const Curve& c : curves) {
    PlotSeries s;
    s.label = c.label;
    s.markers = true;
    for (const SweepRow& r : c.sweep.rows)
      s.points.emplace_back(r.axis_value, r.backward);
    series.push_back(std::move(s));
  }
  return series;
}

ArtifactBundle family_figure(const char* name, const std::string& param_name,
                             const std::vector<Curve>& curves,
                             const fs::path& out_dir) {
  ArtifactBundle bundle;
  for (const Curve& c : curves) {
    const fs::path p = out_dir / (std::string(name) + "_sweep_" + c.label +
                                  ".csv");
    write_text_file(p, sweep_csv(c.sweep));
    bundle.files.push_back(p);
  }
  const fs::path summary = out_dir / (std::string(name) + "_summary.csv");
  write_text_file(summary, summary_csv(param_name, curves));
  bundle.files.push_back(summary);

  const fs::path svg = out_dir / (std::string(name) + ".svg");
  write_svg_plot(svg, name, "phi0 [rad]", "backward fraction",
                 curve_series(curves));
  bundle.files.push_back(svg);
  return bundle;
}

ArtifactBundle figure_fig4(const SimConfig& base, const fs::path& out_dir,
                           const FigureOptions& opt) {
  const std::vector<double> grid = opt.experimental_spacing
                                       ? phi0_grid_experimental()
                                       : phi0_grid_uniform();
  const SweepResult sweep = phi0_sweep(base, grid, opt);
  const PhaseFit& fit = sweep.fit.value();

  ArtifactBundle bundle;
  const fs::path csv = out_dir / "fig4_sweep.csv";
  write_text_file(csv, sweep_csv(sweep));
  bundle.files.push_back(csv);

  const fs::path report = out_dir / "fig4_fit.txt";
  write_text_file(report, fit_report_text(fit));
  bundle.files.push_back(report);

  PlotSeries data{"simulated", {}, true};
  for (const SweepRow& r : sweep.rows)
    data.points.emplace_back(r.axis_value, r.backward);
  PlotSeries curve{"sinusoid fit", {}, false};
  if (!fit.degenerate) {
    for (int k = 0; k <= 256; ++k) {
      const double phi = 2.0 * std::numbers::pi * k / 256.0;
      curve.points.emplace_back(
          phi, eq6_prediction(fit.amplitude, fit.phase_offset, fit.baseline,
                              phi));
    }
  }
  const fs::path svg = out_dir / "fig4.svg";
  write_svg_plot(svg, "fig4", "phi0 [rad]", "backward fraction",
                 {data, curve});
  bundle.files.push_back(svg);
  return bundle;
}

ArtifactBundle figure_fig5(const SimConfig& base, const fs::path& out_dir,
                           const FigureOptions& opt) {
  // chi0 scales as g^2; labels carry the Rabi frequency in Hz.
  const double g_ref = 1.5e6;
  const std::vector<std::pair<const char*, double>> gs = {
      {"g1.0e6", 1.0e6}, {"g1.5e6", 1.5e6}, {"g1.6e6", 1.6e6},
      {"g1.7e6", 1.7e6}};
  std::vector<Curve> curves;
  for (const auto& [label, g] : gs) {
    SimConfig cfg = base;
    cfg.pump.chi0 = base.pump.chi0 * (g / g_ref) * (g / g_ref);
    curves.push_back(
        {label, g, phi0_sweep(cfg, phi0_grid_uniform(), opt)});
  }
  return family_figure("fig5", "g", curves, out_dir);
}

ArtifactBundle figure_fig6(const SimConfig& base, const fs::path& out_dir,
                           const FigureOptions& opt) {
  const std::vector<std::pair<const char*, double>> seeds = {
      {"seed0.1", 0.1}, {"seed1", 1.0}, {"seed10", 10.0}};
  std::vector<Curve> curves;
  for (const auto& [label, seed] : seeds) {
    SimConfig cfg = base;
    cfg.seed_forward = seed;
    cfg.seed_backward = seed;
    curves.push_back(
        {label, seed, phi0_sweep(cfg, phi0_grid_uniform(), opt)});
  }
  return family_figure("fig6", "seed_atoms", curves, out_dir);
}

ArtifactBundle figure_fig7(const SimConfig& base, const fs::path& out_dir,
                           const FigureOptions& opt) {
  // tau_end in fractions of the full beat cycle pi; labels give the lab-frame
  // pulse length for the 15 kHz beat.
  const std::vector<std::pair<const char*, double>> durations = {
      {"t22.22us", std::numbers::pi / 3.0},
      {"t44.44us", 2.0 * std::numbers::pi / 3.0},
      {"t66.67us", std::numbers::pi},
      {"t88.89us", 4.0 * std::numbers::pi / 3.0}};
  std::vector<Curve> curves;
  for (const auto& [label, tau_end] : durations) {
    SimConfig cfg = base;
    cfg.tau_end = tau_end;
    curves.push_back(
        {label, tau_end, phi0_sweep(cfg, phi0_grid_uniform(), opt)});
  }
  return family_figure("fig7", "tau_end", curves, out_dir);
}

ArtifactBundle figure_logistic(const SimConfig& base, const fs::path& out_dir) {
  LogisticParams params = make_default_logistic_params();
  params.n0 = base.total_atoms;

  std::string csv =
      "phi0,ns_full_cycle,fraction_full_cycle,ns_third_cycle,"
      "fraction_third_cycle\n";
  PlotSeries full{"t = T", {}, true}, third{"t = T/3", {}, true};
  for (double phi : phi0_grid_uniform()) {
    const double nf = logistic_closed_form(params, phi, 1.0);
    const double nt = logistic_closed_form(params, phi, 1.0 / 3.0);
    csv += csv_number(phi) + ',' + csv_number(nf) + ',' +
           csv_number(nf / params.n0) + ',' + csv_number(nt) + ',' +
           csv_number(nt / params.n0) + '\n';
    full.points.emplace_back(phi, nf / params.n0);
    third.points.emplace_back(phi, nt / params.n0);
  }

  ArtifactBundle bundle;
  const fs::path table = out_dir / "logistic_baseline.csv";
  write_text_file(table, csv);
  bundle.files.push_back(table);
  const fs::path svg = out_dir / "logistic_baseline.svg";
  write_svg_plot(svg, "logistic baseline", "phi0 [rad]", "scattered fraction",
                 {full, third});
  bundle.files.push_back(svg);
  return bundle;
}

ArtifactBundle figure_eq6(const SimConfig& base, const fs::path& out_dir,
                          const FigureOptions& opt) {
  const std::vector<double> grid = opt.experimental_spacing
                                       ? phi0_grid_experimental()
                                       : phi0_grid_uniform();
  const SweepResult sweep = phi0_sweep(base, grid, opt);
  const PhaseFit& fit = sweep.fit.value();

  // Fixed-offset variant: delta pinned to pi/2, i.e. y = a sin(phi) + b
  // fitted linearly.
  double ssin = 0, ssin2 = 0, sy = 0, ssy = 0;
  const int n = static_cast<int>(sweep.rows.size());
  for (const SweepRow& r : sweep.rows) {
    const double s = std::sin(r.axis_value);
    ssin += s;
    ssin2 += s * s;
    sy += r.backward;
    ssy += s * r.backward;
  }
  const double var = ssin2 - ssin * ssin / n;
  const double a_fixed = var > 0.0 ? (ssy - ssin * sy / n) / var : 0.0;
  const double b_fixed = sy / n - a_fixed * ssin / n;

  ArtifactBundle bundle;
  const fs::path points_csv = out_dir / "eq6_overlay_points.csv";
  write_text_file(points_csv, sweep_csv(sweep));
  bundle.files.push_back(points_csv);

  std::string curves_csv = "phi0,fit_free_offset,fit_fixed_offset\n";
  PlotSeries data{"simulated", {}, true};
  for (const SweepRow& r : sweep.rows)
    data.points.emplace_back(r.axis_value, r.backward);
  PlotSeries free_curve{"fit (free delta)", {}, false};
  PlotSeries fixed_curve{"delta = pi/2", {}, false};
  for (int k = 0; k <= 256; ++k) {
    const double phi = 2.0 * std::numbers::pi * k / 256.0;
    const double yf = eq6_prediction(fit.amplitude, fit.phase_offset,
                                     fit.baseline, phi);
    const double yp = a_fixed * std::sin(phi) + b_fixed;
    curves_csv += csv_number(phi) + ',' + csv_number(yf) + ',' +
                  csv_number(yp) + '\n';
    free_curve.points.emplace_back(phi, yf);
    fixed_curve.points.emplace_back(phi, yp);
  }
  const fs::path curves_path = out_dir / "eq6_overlay_curves.csv";
  write_text_file(curves_path, curves_csv);
  bundle.files.push_back(curves_path);

  const fs::path report = out_dir / "eq6_overlay_fit.txt";
  write_text_file(report, fit_report_text(fit));
  bundle.files.push_back(report);

  const fs::path svg = out_dir / "eq6_overlay.svg";
  write_svg_plot(svg, "eq6 overlay", "phi0 [rad]", "backward fraction",
                 {data, free_curve, fixed_curve});
  bundle.files.push_back(svg);
  return bundle;
}

}  // namespace

ArtifactBundle run_figure(FigurePreset preset, const SimConfig& base,
                          const fs::path& out_dir,
                          const FigureOptions& options) {
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec)
    throw IoError("cannot create output directory " + out_dir.string() +
                  ": " + ec.message());

  switch (preset) {
    case FigurePreset::fig4: return figure_fig4(base, out_dir, options);
    case FigurePreset::fig5: return figure_fig5(base, out_dir, options);
    case FigurePreset::fig6: return figure_fig6(base, out_dir, options);
    case FigurePreset::fig7: return figure_fig7(base, out_dir, options);
    case FigurePreset::logistic_baseline:
      return figure_logistic(base, out_dir);
    case FigurePreset::eq6_overlay: return figure_eq6(base, out_dir, options);
  }
  throw ConfigError("unknown figure preset");
}

}  // namespace srsim
