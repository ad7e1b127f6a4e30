#ifndef SRSIM_SWEEP_HPP
#define SRSIM_SWEEP_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "srsim/analysis.hpp"
#include "srsim/config.hpp"

namespace srsim {

enum class SweepAxis { phi0, coupling, seed, duration };

const char* axis_name(SweepAxis axis);
std::optional<SweepAxis> axis_from_name(std::string_view name);

struct SweepSpec {
  SimConfig base;
  SweepAxis axis = SweepAxis::phi0;
  std::vector<double> values;  // finite, strictly increasing
  int parallelism = 1;
};

// Throws ConfigError when the value list is empty, unsorted, non-finite or
// out of the axis domain.
void validate_sweep_spec(const SweepSpec& spec);

// phi0 -> pump.phi0, coupling -> pump.chi0, seed -> both seed counts,
// duration -> tau_end.
SimConfig apply_axis_value(SimConfig base, SweepAxis axis, double value);

struct SweepRow {
  double axis_value = 0.0;
  double backward = 0.0;    // N_{-1,-1}(tau_end), doubled under mirror_family
  double forward = 0.0;     // N_{1,1}(tau_end)
  double condensate = 0.0;  // N_{0,0}(tau_end)
  double delta_phi01_mid = 0.0;  // at the sample nearest tau_end/2
  bool phase_valid = false;
  double drift = 0.0;  // max conservation drift over the run
  bool drift_flagged = false;  // drift >= 1e-6
};

struct SweepResult {
  SweepAxis axis = SweepAxis::phi0;
  std::vector<SweepRow> rows;  // one per requested value, in request order
  // Present for phi0 sweeps with >= 6 values.
  std::optional<PhaseFit> fit;
  bool mirror_doubled = false;
};

// Runs one simulation per axis value on a bounded worker pool. Results are
// deterministic and independent of the worker count. mirror_family doubles
// the reported backward fraction to account for the (-1,1)/(1,-1) family
// that the model does not integrate.
SweepResult run_sweep(const SweepSpec& spec, bool mirror_family = false);

// Header: <axis>,backward_fraction,forward_fraction,condensate_fraction,
//         delta_phi01_mid,conservation_drift,drift_flag
std::string sweep_csv(const SweepResult& result);

struct CalibrationResult {
  double chi0 = 0.0;
  double backward_fraction = 0.0;
  double depletion = 0.0;  // 1 - N00(tau_end)
  double max_drift = 0.0;
  int evaluations = 0;
};

// Searches for the coupling that scatters target_backward of the atoms into
// the backward mode over one cycle at phi0 = pi/2 (geometric bracketing then
// bisection in log chi0).
CalibrationResult calibrate_coupling(const SimConfig& base,
                                     double target_backward = 1.0e-2);
std::string calibration_report(const CalibrationResult& r);

}  // namespace srsim

#endif
