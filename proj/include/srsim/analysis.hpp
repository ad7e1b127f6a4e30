#ifndef SRSIM_ANALYSIS_HPP
#define SRSIM_ANALYSIS_HPP

#include <utility>
#include <vector>

#include "srsim/config.hpp"
#include "srsim/state.hpp"

namespace srsim {

// Atom fraction in one mode.
double population(const ModeField& field);

// Spatially integrated second-order grating correlators,
//   c01  = integral psi00 psim1m1* [ suffix integral of psi00 psi11*   ]
//   cm10 = integral psi00 psim1m1* [ suffix integral of psim1m1 psi00* ]
// with the same suffix quadrature as the end-fire field, so the backward
// pumping rate written in terms of them is exact at the semi-discrete level.
// delta_phi01 = -arg(c01) in (-pi, pi] is the matter-wave relative phase
// 2 phi00 - phi11 - phim1m1 (phases taken as psi = |psi| e^{-i phi}).
struct GratingDiagnostics {
  double tau = 0.0;
  Complex c01{0.0, 0.0};
  Complex cm10{0.0, 0.0};
  double delta_phi01 = 0.0;
  bool phase_valid = false;  // false when |c01| == 0 and the arg is undefined
};

GratingDiagnostics grating_diagnostics(const SystemState& state);

// d N_{-1,-1} / d tau expressed through the grating correlators:
//   rate = -2 chi(tau) Re[ c01 e^{+2i tau} + cm10 ]
double backward_rate_eq4(const SystemState& state, const PumpConfig& pump);
double backward_rate_eq4(const GratingDiagnostics& diag,
                         const PumpConfig& pump);

// Least-squares fit of y = -amplitude * cos(phi0 + phase_offset) + baseline
// to (phi0, y) samples, via the linear reparameterization
// y = p cos(phi0) + q sin(phi0) + baseline. Exact on noiseless sinusoids.
struct PhaseFit {
  double amplitude = 0.0;     // >= 0
  double phase_offset = 0.0;  // in (-pi, pi]
  double baseline = 0.0;
  double r_squared = 0.0;
  double maximizer = 0.0;  // argmax over phi0 in [0, 2*pi)
  double minimizer = 0.0;  // argmin over phi0 in [0, 2*pi)
  bool degenerate = false;  // all-equal ordinates; amplitude forced to 0
  int n_points = 0;
};

// Requires >= 6 points whose phi0 values give a non-singular design; throws
// FitError otherwise. All-equal ordinates yield a degenerate result instead
// of an error.
PhaseFit fit_phase_response(
    const std::vector<std::pair<double, double>>& points);

}  // namespace srsim

#endif
