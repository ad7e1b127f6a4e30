#include "srsim/solver.hpp"

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "srsim/endfire.hpp"
#include "srsim/errors.hpp"
#include "srsim/model.hpp"

namespace srsim {

// Coupled-mode equations in the recoil frame (xi = k_l z, tau = 2 omega_r t):
//
//   d psi11 / d tau    = +chi(tau) S*(xi) psi00
//   d psim1m1 / d tau  = -chi(tau) S(xi)  psi00 e^{+2i tau}
//   d psi00 / d tau    = -chi(tau) S(xi)  psi11
//                        +chi(tau) S*(xi) psim1m1 e^{-2i tau}
//
// chi(tau) = chi0 (1 + cos(2 tau + phi0)) is the pump-intensity beat and S
// the end-fire suffix integral. Each scattering term appears twice with
// opposite conjugation, so Re[sum_modes (d psi) psi*] vanishes identically:
// the family conserves atoms at every grid point separately.

StateDerivative rhs(const SystemState& state, const PumpConfig& pump) {
  const double chi = pump_beat(pump, state.tau());
  const int n = state.grid().n_points();
  const EndfireField ef = compute_endfire(state);
  const Complex rot = std::polar(1.0, 2.0 * state.tau());
  const Complex rot_c = std::conj(rot);

  const auto& p00 = state.psi00().values();
  const auto& p11 = state.psi11().values();
  const auto& pbk = state.psim1m1().values();

  StateDerivative d;
  d.d00.resize(n);
  d.d11.resize(n);
  d.dm1m1.resize(n);
  for (int j = 0; j < n; ++j) {
    const Complex s = ef.values[j];
    const Complex cs = std::conj(s);
    d.d11[j] = chi * cs * p00[j];
    d.dm1m1[j] = -chi * s * p00[j] * rot;
    d.d00[j] = -chi * s * p11[j] + chi * cs * pbk[j] * rot_c;
  }
  return d;
}

namespace {

std::vector<Complex> shifted(const std::vector<Complex>& base,
                             const std::vector<Complex>& k, double a) {
  std::vector<Complex> out(base.size());
  for (size_t j = 0; j < base.size(); ++j) out[j] = base[j] + a * k[j];
  return out;
}

SystemState stage_state(const SystemState& s, const StateDerivative& k,
                        double a) {
  const SpatialGrid& g = s.grid();
  return SystemState(
      s.tau() + a,
      ModeField(Mode::condensate, g, shifted(s.psi00().values(), k.d00, a)),
      ModeField(Mode::forward, g, shifted(s.psi11().values(), k.d11, a)),
      ModeField(Mode::backward, g, shifted(s.psim1m1().values(), k.dm1m1, a)));
}

}  // namespace

SystemState step_rk4(const SystemState& state, const PumpConfig& pump,
                     double dtau) {
  if (!(dtau > 0.0))
    throw std::invalid_argument("step_rk4: dtau must be > 0");

  const StateDerivative k1 = rhs(state, pump);
  const StateDerivative k2 = rhs(stage_state(state, k1, 0.5 * dtau), pump);
  const StateDerivative k3 = rhs(stage_state(state, k2, 0.5 * dtau), pump);
  const StateDerivative k4 = rhs(stage_state(state, k3, dtau), pump);

  const SpatialGrid& g = state.grid();
  const int n = g.n_points();
  const double w = dtau / 6.0;
  auto combine = [&](const std::vector<Complex>& base,
                     const std::vector<Complex>& a,
                     const std::vector<Complex>& b,
                     const std::vector<Complex>& c,
                     const std::vector<Complex>& d) {
    std::vector<Complex> out(n);
    for (int j = 0; j < n; ++j)
      out[j] = base[j] + w * (a[j] + 2.0 * b[j] + 2.0 * c[j] + d[j]);
    return out;
  };

  SystemState next(
      state.tau() + dtau,
      ModeField(Mode::condensate, g,
                combine(state.psi00().values(), k1.d00, k2.d00, k3.d00,
                        k4.d00)),
      ModeField(Mode::forward, g,
                combine(state.psi11().values(), k1.d11, k2.d11, k3.d11,
                        k4.d11)),
      ModeField(Mode::backward, g,
                combine(state.psim1m1().values(), k1.dm1m1, k2.dm1m1,
                        k3.dm1m1, k4.dm1m1)));

  if (!next.psi00().all_finite() || !next.psi11().all_finite() ||
      !next.psim1m1().all_finite())
    throw NumericError("numerical blowup: non-finite field values after the "
                       "step to tau = " +
                       std::to_string(next.tau()));
  return next;
}

double Trajectory::max_drift() const {
  double m = 0.0;
  for (const PopulationSample& p : populations) {
    const double d = std::abs(p.total() - initial_total);
    if (d > m) m = d;
  }
  return initial_total > 0.0 ? m / initial_total : m;
}

Trajectory simulate(const SimConfig& cfg, int sample_every) {
  validate(cfg);
  return simulate_state(seeded_initial_state(cfg), cfg.pump, cfg.tau_end,
                        cfg.dtau, sample_every);
}

Trajectory simulate_state(SystemState state, const PumpConfig& pump,
                          double tau_end, double dtau, int sample_every,
                          int snapshot_every) {
  if (!(tau_end > state.tau()))
    throw ConfigError("simulate: tau_end must exceed the initial tau");
  if (!(dtau > 0.0) || dtau > tau_end - state.tau())
    throw ConfigError(
        "simulate: dtau must be positive and no larger than the integration "
        "window");
  if (sample_every < 1)
    throw ConfigError("simulate: sample_every must be >= 1");

  const double window = tau_end - state.tau();
  long n_steps = static_cast<long>(std::ceil(window / dtau - 1.0e-9));
  if (n_steps < 1) n_steps = 1;

  Trajectory out;
  out.initial_total = state.total_norm();

  auto record = [&out](const SystemState& s) {
    out.taus.push_back(s.tau());
    out.populations.push_back(
        {s.psi00().norm(), s.psi11().norm(), s.psim1m1().norm()});
    out.diagnostics.push_back(grating_diagnostics(s));
  };

  record(state);
  for (long k = 1; k <= n_steps; ++k) {
    // Trim the last step so the trajectory lands on tau_end exactly.
    double h = (k == n_steps) ? tau_end - state.tau() : dtau;
    if (!(h > 0.0)) h = dtau * 1.0e-12;  // rounding guard; keeps tau monotone
    state = step_rk4(state, pump, h);
    if (k == n_steps || k % sample_every == 0) record(state);
    if (snapshot_every > 0 && k % snapshot_every == 0 && k != n_steps)
      out.snapshots.push_back(state);
  }
  out.snapshots.push_back(std::move(state));
  return out;
}

}  // namespace srsim
