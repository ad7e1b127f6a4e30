// Command-line front end: simulate / sweep / figure / calibrate.
//
// Exit codes: 0 success, 2 configuration or usage error, 3 numerical
// failure, 4 I/O failure.

#include <cstdio>
#include <exception>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "srsim/config.hpp"
#include "srsim/config_io.hpp"
#include "srsim/csv.hpp"
#include "srsim/errors.hpp"
#include "srsim/figures.hpp"
#include "srsim/solver.hpp"
#include "srsim/sweep.hpp"

namespace fs = std::filesystem;
using namespace srsim;

namespace {

void print_warnings(const std::vector<std::string>& warnings) {
  for (const std::string& w : warnings)
    std::fprintf(stderr, "warning: %s\n", w.c_str());
}

SimConfig load_config(const std::string& path,
                      std::vector<std::string>& warnings) {
  if (path.empty()) {
    SimConfig cfg = make_default_config();
    warnings = validate(cfg);
    return cfg;
  }
  return parse_sim_config(fs::path(path), &warnings);
}

int cmd_simulate(const std::string& config_path, const std::string& out_dir,
                 int sample_every, bool mirror_family) {
  std::vector<std::string> warnings;
  const SimConfig cfg = load_config(config_path, warnings);
  print_warnings(warnings);

  const Trajectory traj = simulate(cfg, sample_every);
  const fs::path csv_path = fs::path(out_dir) / "trajectory.csv";
  write_text_file(csv_path, trajectory_csv(traj));

  const PopulationSample& last = traj.populations.back();
  const double factor = mirror_family ? 2.0 : 1.0;
  std::fprintf(stderr,
               "tau_end = %.6g  N00 = %.6g  N11 = %.6g  Nm1m1 = %.6g%s  "
               "drift = %.3g\n",
               traj.taus.back(), last.n00, last.n11, factor * last.nm1m1,
               mirror_family ? " (mirror doubled)" : "", traj.max_drift());
  std::fprintf(stderr, "wrote %s\n", csv_path.string().c_str());
  return 0;
}

int cmd_sweep(const std::string& config_path, const std::string& out_dir,
              int parallelism, bool mirror_family) {
  std::vector<std::string> warnings;
  SweepSpec spec = parse_sweep_spec(fs::path(config_path), &warnings);
  print_warnings(warnings);
  if (parallelism > 0) spec.parallelism = parallelism;

  const SweepResult result = run_sweep(spec, mirror_family);
  const fs::path csv_path = fs::path(out_dir) / "sweep.csv";
  write_text_file(csv_path, sweep_csv(result));
  std::fprintf(stderr, "wrote %s (%zu rows)\n", csv_path.string().c_str(),
               result.rows.size());
  if (result.fit) {
    const fs::path fit_path = fs::path(out_dir) / "fit_report.txt";
    write_text_file(fit_path, fit_report_text(*result.fit));
    std::fprintf(stderr, "wrote %s\n", fit_path.string().c_str());
  }
  return 0;
}

int cmd_figure(const std::string& preset_name, const std::string& config_path,
               const std::string& out_dir, const FigureOptions& options) {
  const std::optional<FigurePreset> preset =
      figure_preset_from_name(preset_name);
  if (!preset) throw ConfigError("unknown figure preset: " + preset_name);

  std::vector<std::string> warnings;
  const SimConfig base = load_config(config_path, warnings);
  print_warnings(warnings);

  const ArtifactBundle bundle =
      run_figure(*preset, base, fs::path(out_dir), options);
  for (const fs::path& f : bundle.files)
    std::fprintf(stderr, "wrote %s\n", f.string().c_str());
  return 0;
}

int cmd_calibrate(const std::string& config_path, double target,
                  const std::string& out_path) {
  std::vector<std::string> warnings;
  const SimConfig base = load_config(config_path, warnings);
  print_warnings(warnings);

  const CalibrationResult result = calibrate_coupling(base, target);
  const std::string report = calibration_report(result);
  std::fputs(report.c_str(), stdout);
  if (!out_path.empty()) write_text_file(fs::path(out_path), report);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Two-frequency-pumped superradiant scattering from an elongated "
      "condensate"};
  app.require_subcommand(1);

  std::string config_path, out_dir = "out";
  int sample_every = 10;
  bool mirror_family = false;

  CLI::App* sim = app.add_subcommand(
      "simulate", "Integrate one configuration and dump the trajectory");
  sim->add_option("--config", config_path, "key = value configuration file");
  sim->add_option("--out", out_dir, "output directory (default: out)");
  sim->add_option("--sample-every", sample_every,
                  "record every N-th step (default: 10)")
      ->check(CLI::PositiveNumber);
  sim->add_flag("--mirror-family", mirror_family,
                "double the reported backward fraction for the mirrored "
                "scattering family");

  std::string sweep_config, sweep_out = "out";
  int sweep_parallelism = 0;
  bool sweep_mirror = false;
  CLI::App* swp = app.add_subcommand(
      "sweep", "Run one simulation per value of a swept parameter");
  swp->add_option("--config", sweep_config,
                  "configuration file with sweep.axis / sweep.values")
      ->required();
  swp->add_option("--out", sweep_out, "output directory (default: out)");
  swp->add_option("--parallelism", sweep_parallelism,
                  "worker threads (overrides sweep.parallelism)");
  swp->add_flag("--mirror-family", sweep_mirror,
                "double the reported backward fraction");

  std::string fig_name, fig_config, fig_out = "out";
  FigureOptions fig_options;
  CLI::App* fig = app.add_subcommand(
      "figure", "Produce a bundled experiment (CSV tables + SVG plot)");
  fig->add_option("preset", fig_name,
                  "fig4 | fig5 | fig6 | fig7 | logistic_baseline | "
                  "eq6_overlay")
      ->required();
  fig->add_option("--config", fig_config, "base configuration file");
  fig->add_option("--out", fig_out, "output directory (default: out)");
  fig->add_option("--parallelism", fig_options.parallelism,
                  "worker threads (default: 4)")
      ->check(CLI::PositiveNumber);
  fig->add_flag("--experimental-spacing", fig_options.experimental_spacing,
                "use the seven 0.3*pi apparatus phases instead of 16 "
                "uniform points");
  fig->add_flag("--mirror-family", fig_options.mirror_family,
                "double the reported backward fraction");

  std::string cal_config, cal_out;
  double cal_target = 1.0e-2;
  CLI::App* cal = app.add_subcommand(
      "calibrate",
      "Find the coupling that reaches a target backward fraction at "
      "phi0 = pi/2");
  cal->add_option("--config", cal_config, "base configuration file");
  cal->add_option("--target", cal_target,
                  "backward fraction to hit (default: 0.01)")
      ->check(CLI::PositiveNumber);
  cal->add_option("--out", cal_out, "also write the report to this file");

  try {
    app.parse(argc, argv);
    if (sim->parsed())
      return cmd_simulate(config_path, out_dir, sample_every, mirror_family);
    if (swp->parsed())
      return cmd_sweep(sweep_config, sweep_out, sweep_parallelism,
                       sweep_mirror);
    if (fig->parsed()) return cmd_figure(fig_name, fig_config, fig_out,
                                         fig_options);
    if (cal->parsed()) return cmd_calibrate(cal_config, cal_target, cal_out);
    return 2;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const IoError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 4;
  } catch (const NumericError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  }
}
