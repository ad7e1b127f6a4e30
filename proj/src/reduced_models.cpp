#include "srsim/reduced_models.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "srsim/errors.hpp"

namespace srsim {

LogisticParams make_default_logistic_params() {
  // exp(n0 * gain_scale) ~ 1.05e4 puts N_s(T)/n0 at ~5% for n0 = 2e5.
  return LogisticParams{.n0 = 2.0e5, .gain_scale = 4.6308e-5, .ns0 = 1.0};
}

double logistic_closed_form(const LogisticParams& p, double phi0,
                            double t_over_T) {
  if (!(p.n0 > 1.0)) throw ConfigError("logistic: n0 must be > 1");
  if (!(p.gain_scale >= 0.0))
    throw ConfigError("logistic: gain_scale must be >= 0");
  if (!(p.ns0 >= 1.0) || !(p.ns0 < p.n0))
    throw ConfigError("logistic: ns0 must satisfy 1 <= ns0 < n0");
  if (!(t_over_T >= 0.0))
    throw ConfigError("logistic: t_over_T must be >= 0");

  // integral of (1 + cos(delta_omega t + phi0)) dt over [0, t], in units of
  // the beat period; the oscillatory part cancels exactly at full cycles.
  const double theta = 2.0 * std::numbers::pi * t_over_T;
  const double intensity_integral =
      t_over_T +
      (std::sin(theta + phi0) - std::sin(phi0)) / (2.0 * std::numbers::pi);
  const double exponent = p.n0 * p.gain_scale * intensity_integral;

  // N_s = n0 / (1 + (n0/ns0 - 1) e^{-exponent}): saturates at n0 for large
  // gains without ever forming e^{+exponent}.
  return p.n0 / (1.0 + (p.n0 / p.ns0 - 1.0) * std::exp(-exponent));
}

double eq6_prediction(double amplitude, double delta_phi01, double baseline,
                      double phi0) {
  if (!(amplitude >= 0.0))
    throw std::invalid_argument("eq6_prediction: amplitude must be >= 0");
  return -amplitude * std::cos(phi0 + delta_phi01) + baseline;
}

}  // namespace srsim
