#include "srsim/model.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "srsim/errors.hpp"

namespace srsim {

double pump_beat(const PumpConfig& pump, double tau) {
  const double envelope =
      1.0 + std::cos(pump.beat_multiplier * tau + pump.phi0);
  // The envelope is non-negative analytically; clamp rounding residue.
  return pump.chi0 * std::max(0.0, envelope);
}

ModeField thomas_fermi_profile(const SpatialGrid& grid, double half_length) {
  if (!(half_length > 0.0))
    throw ConfigError("thomas_fermi_profile: half_length must be > 0");
  if (half_length > grid.xi_max())
    throw ConfigError(
        "thomas_fermi_profile: condensate does not fit inside the grid "
        "(half_length " +
        std::to_string(half_length) + " > xi_max " +
        std::to_string(grid.xi_max()) + ")");

  const int n = grid.n_points();
  std::vector<Complex> v(n);
  double raw = 0.0;
  for (int j = 0; j < n; ++j) {
    const double u = grid.xi(j) / half_length;
    const double density = 1.0 - u * u;
    const double amp = density > 0.0 ? std::sqrt(density) : 0.0;
    v[j] = Complex(amp, 0.0);
    raw += amp * amp;
  }
  raw *= grid.spacing();
  const double scale = 1.0 / std::sqrt(raw);
  for (Complex& x : v) x *= scale;
  return ModeField(Mode::condensate, grid, std::move(v));
}

SystemState seeded_initial_state(const SimConfig& cfg) {
  validate(cfg);
  const ModeField base = thomas_fermi_profile(cfg.grid, cfg.tf_half_length_xi);

  auto seeded = [&](Mode mode, double atoms) {
    const double fraction = atoms / cfg.total_atoms;
    const Complex scale = std::polar(std::sqrt(fraction), cfg.seed_phase);
    std::vector<Complex> v(base.values());
    for (Complex& x : v) x *= scale;
    return ModeField(mode, cfg.grid, std::move(v));
  };

  ModeField psi00(Mode::condensate, cfg.grid, base.values());
  return SystemState(0.0, std::move(psi00),
                     seeded(Mode::forward, cfg.seed_forward),
                     seeded(Mode::backward, cfg.seed_backward));
}

}  // namespace srsim
