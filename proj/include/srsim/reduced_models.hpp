#ifndef SRSIM_REDUCED_MODELS_HPP
#define SRSIM_REDUCED_MODELS_HPP

namespace srsim {

// Mean-field rate-equation baseline: total scattered atom number N_s obeys
// the logistic equation dN_s/dt = G(t) (n0 - N_s) N_s with a time-dependent
// gain proportional to the pump intensity,
//   G(t) = gain_scale * (1 + cos(delta_omega t + phi0)),
// time measured in beat periods T = 2*pi/delta_omega. This model carries no
// phase memory, so over a full beat cycle the result cannot depend on phi0.
struct LogisticParams {
  double n0 = 2.0e5;         // total atom number (carrying capacity)
  double gain_scale = 0.0;   // gain per unit pump-intensity integral
  double ns0 = 1.0;          // initial scattered seed, 1 <= ns0 < n0
};

// Default gain chosen so that N_s(T)/n0 is roughly 5% after one full cycle,
// comparable to the coupled-mode runs.
LogisticParams make_default_logistic_params();

// Closed-form solution at t = t_over_T beat periods. Overflow-safe: the
// result saturates at n0 for arbitrarily large gains.
double logistic_closed_form(const LogisticParams& p, double phi0,
                            double t_over_T);

// Sinusoidal response of the one-cycle backward population to the pump
// relative phase: -amplitude * cos(phi0 + delta_phi01) + baseline.
// With delta_phi01 = pi/2 the maximum sits at phi0 = pi/2 and the minimum
// at phi0 = 3*pi/2.
double eq6_prediction(double amplitude, double delta_phi01, double baseline,
                      double phi0);

}  // namespace srsim

#endif
