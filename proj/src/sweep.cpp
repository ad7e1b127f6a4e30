#include "srsim/sweep.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <numbers>
#include <string>
#include <thread>
#include <utility>

#include "srsim/csv.hpp"
#include "srsim/errors.hpp"
#include "srsim/solver.hpp"

namespace srsim {

const char* axis_name(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::phi0: return "phi0";
    case SweepAxis::coupling: return "coupling";
    case SweepAxis::seed: return "seed";
    case SweepAxis::duration: return "duration";
  }
  return "?";
}

std::optional<SweepAxis> axis_from_name(std::string_view name) {
  if (name == "phi0") return SweepAxis::phi0;
  if (name == "coupling") return SweepAxis::coupling;
  if (name == "seed") return SweepAxis::seed;
  if (name == "duration") return SweepAxis::duration;
  return std::nullopt;
}

SimConfig apply_axis_value(SimConfig base, SweepAxis axis, double value) {
  switch (axis) {
    case SweepAxis::phi0: base.pump.phi0 = value; break;
    case SweepAxis::coupling: base.pump.chi0 = value; break;
    case SweepAxis::seed:
      base.seed_forward = value;
      base.seed_backward = value;
      break;
    case SweepAxis::duration: base.tau_end = value; break;
  }
  return base;
}

void validate_sweep_spec(const SweepSpec& spec) {
  if (spec.values.empty()) throw ConfigError("sweep.values must be non-empty");
  for (double v : spec.values)
    if (!std::isfinite(v))
      throw ConfigError("sweep.values must all be finite");
  for (size_t i = 1; i < spec.values.size(); ++i)
    if (!(spec.values[i] > spec.values[i - 1]))
      throw ConfigError("sweep.values must be strictly increasing");
  if (spec.parallelism < 1 || spec.parallelism > 1024)
    throw ConfigError("sweep.parallelism must be in [1, 1024]");
  validate(spec.base);
  for (double v : spec.values) {
    try {
      validate(apply_axis_value(spec.base, spec.axis, v));
    } catch (const ConfigError& e) {
      throw ConfigError(std::string("sweep value ") + csv_number(v) +
                        " on axis " + axis_name(spec.axis) +
                        " is out of range: " + e.what());
    }
  }
}

namespace {

SweepRow run_one(const SimConfig& cfg, double axis_value,
                 bool mirror_family) {
  // ~256 samples regardless of the step count; the mid-run reference is the
  // sample nearest tau_end/2.
  const long n_steps =
      static_cast<long>(std::ceil(cfg.tau_end / cfg.dtau - 1.0e-9));
  const int sample_every = static_cast<int>(std::max(1L, n_steps / 256));
  const Trajectory traj = simulate(cfg, sample_every);

  size_t mid = 0;
  double best = std::abs(traj.taus[0] - cfg.tau_end / 2.0);
  for (size_t k = 1; k < traj.taus.size(); ++k) {
    const double d = std::abs(traj.taus[k] - cfg.tau_end / 2.0);
    if (d < best) {
      best = d;
      mid = k;
    }
  }

  SweepRow row;
  row.axis_value = axis_value;
  const PopulationSample& last = traj.populations.back();
  row.backward = mirror_family ? 2.0 * last.nm1m1 : last.nm1m1;
  row.forward = last.n11;
  row.condensate = last.n00;
  row.delta_phi01_mid = traj.diagnostics[mid].delta_phi01;
  row.phase_valid = traj.diagnostics[mid].phase_valid;
  row.drift = traj.max_drift();
  row.drift_flagged = row.drift >= 1.0e-6;
  return row;
}

}  // namespace

SweepResult run_sweep(const SweepSpec& spec, bool mirror_family) {
  validate_sweep_spec(spec);
  const size_t n = spec.values.size();

  SweepResult result;
  result.axis = spec.axis;
  result.rows.resize(n);
  result.mirror_doubled = mirror_family;

  std::vector<std::exception_ptr> errors(n);
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      const size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        const SimConfig cfg =
            apply_axis_value(spec.base, spec.axis, spec.values[i]);
        result.rows[i] = run_one(cfg, spec.values[i], mirror_family);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };

  const size_t pool =
      std::min(static_cast<size_t>(spec.parallelism), n);
  if (pool <= 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    threads.reserve(pool);
    for (size_t t = 0; t < pool; ++t) threads.emplace_back(worker);
    for (std::thread& t : threads) t.join();
  }

  for (size_t i = 0; i < n; ++i) {
    if (!errors[i]) continue;
    const std::string where = std::string("sweep aborted at ") +
                              axis_name(spec.axis) + " = " +
                              csv_number(spec.values[i]) + ": ";
    try {
      std::rethrow_exception(errors[i]);
    } catch (const ConfigError& e) {
      throw ConfigError(where + e.what());
    } catch (const std::exception& e) {
      throw NumericError(where + e.what());
    }
  }

  if (spec.axis == SweepAxis::phi0 && n >= 6) {
    std::vector<std::pair<double, double>> pts;
    pts.reserve(n);
    for (const SweepRow& r : result.rows)
      pts.emplace_back(r.axis_value, r.backward);
    result.fit = fit_phase_response(pts);
  }
  return result;
}

std::string sweep_csv(const SweepResult& result) {
  std::string out = std::string(axis_name(result.axis)) +
                    ",backward_fraction,forward_fraction,"
                    "condensate_fraction,delta_phi01_mid,conservation_drift,"
                    "drift_flag\n";
  for (const SweepRow& r : result.rows) {
    out += csv_number(r.axis_value);
    out += ',';
    out += csv_number(r.backward);
    out += ',';
    out += csv_number(r.forward);
    out += ',';
    out += csv_number(r.condensate);
    out += ',';
    out += r.phase_valid
               ? csv_number(r.delta_phi01_mid)
               : std::string("nan");
    out += ',';
    out += csv_number(r.drift);
    out += ',';
    out += r.drift_flagged ? '1' : '0';
    out += '\n';
  }
  return out;
}

CalibrationResult calibrate_coupling(const SimConfig& base,
                                     double target_backward) {
  if (!(target_backward > 0.0) || !(target_backward < 1.0))
    throw ConfigError("calibrate: target must lie in (0, 1)");
  SimConfig cfg = base;
  cfg.pump.phi0 = std::numbers::pi / 2.0;

  int evaluations = 0;
  auto backward_at = [&](double chi0) {
    cfg.pump.chi0 = chi0;
    ++evaluations;
    const Trajectory t = simulate(cfg, 1 << 20);  // endpoints only
    return t.populations.back().nm1m1;
  };

  // Geometric bracketing, then bisection in log(chi0). The end-of-cycle
  // backward fraction grows monotonically with the coupling in the regime of
  // interest.
  double lo = 0.25, hi = 0.0;
  double lo_val = backward_at(lo);
  if (lo_val >= target_backward) {
    hi = lo;
    lo = 1.0e-4;
  } else {
    for (double chi0 = 0.5; chi0 <= 1024.0; chi0 *= 2.0) {
      const double v = backward_at(chi0);
      if (v >= target_backward) {
        hi = chi0;
        break;
      }
      lo = chi0;
      lo_val = v;
    }
    if (hi == 0.0)
      throw NumericError(
          "calibrate: target backward fraction not reached for chi0 <= 1024");
  }
  if (lo > 0.0) {
    for (int it = 0; it < 48; ++it) {
      const double mid = std::sqrt(lo * hi);
      if (backward_at(mid) >= target_backward)
        hi = mid;
      else
        lo = mid;
    }
  }

  cfg.pump.chi0 = hi;
  const Trajectory t = simulate(cfg, 64);
  CalibrationResult r;
  r.chi0 = hi;
  r.backward_fraction = t.populations.back().nm1m1;
  r.depletion = 1.0 - t.populations.back().n00;
  r.max_drift = t.max_drift();
  r.evaluations = evaluations;
  return r;
}

std::string calibration_report(const CalibrationResult& r) {
  std::string out;
  out += "chi0 = " + csv_number(r.chi0) + "\n";
  out += "backward_fraction = " + csv_number(r.backward_fraction) + "\n";
  out += "depletion = " + csv_number(r.depletion) + "\n";
  out += "max_drift = " + csv_number(r.max_drift) + "\n";
  out += "evaluations = " + std::to_string(r.evaluations) + "\n";
  return out;
}

}  // namespace srsim
