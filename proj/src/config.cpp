#include "srsim/config.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "srsim/errors.hpp"

namespace srsim {

SimConfig make_default_config() { return SimConfig{}; }

std::vector<std::string> validate(const SimConfig& cfg) {
  const double two_pi = 2.0 * std::numbers::pi;
  // The grid enforces its own invariants on construction.
  if (!(cfg.pump.chi0 >= 0.0) || !std::isfinite(cfg.pump.chi0))
    throw ConfigError("pump.chi0 must be finite and >= 0");
  if (!(cfg.pump.phi0 >= 0.0) || !(cfg.pump.phi0 < two_pi))
    throw ConfigError("pump.phi0 must lie in [0, 2*pi)");
  if (!(cfg.pump.beat_multiplier > 0.0))
    throw ConfigError("pump beat_multiplier must be > 0");
  if (!(cfg.total_atoms > 0.0) || !std::isfinite(cfg.total_atoms))
    throw ConfigError("sim.total_atoms must be finite and > 0");
  if (!(cfg.seed_forward >= 0.0) || !std::isfinite(cfg.seed_forward))
    throw ConfigError("sim.seed_forward must be finite and >= 0");
  if (!(cfg.seed_backward >= 0.0) || !std::isfinite(cfg.seed_backward))
    throw ConfigError("sim.seed_backward must be finite and >= 0");
  if (!(cfg.tau_end > 0.0) || !std::isfinite(cfg.tau_end))
    throw ConfigError("sim.tau_end must be finite and > 0");
  if (!(cfg.dtau > 0.0) || !(cfg.dtau <= cfg.tau_end / 100.0))
    throw ConfigError(
        "sim.dtau must be positive and no larger than tau_end/100");
  if (!(cfg.tf_half_length_xi > 0.0) ||
      !(cfg.tf_half_length_xi <= cfg.grid.xi_max()))
    throw ConfigError(
        "sim.tf_half_length_xi must be positive and fit inside the grid");
  if (!std::isfinite(cfg.seed_phase))
    throw ConfigError("sim.seed_phase must be finite");

  std::vector<std::string> warnings;
  const double max_seed_fraction = 1.0e-2;
  for (auto [atoms, name] : {std::pair{cfg.seed_forward, "seed_forward"},
                             std::pair{cfg.seed_backward, "seed_backward"}}) {
    if (atoms / cfg.total_atoms > max_seed_fraction)
      warnings.push_back(std::string("sim.") + name + " is " +
                         std::to_string(atoms / cfg.total_atoms * 100.0) +
                         "% of the atoms; the seeded-instability picture "
                         "assumes a much smaller fraction");
  }
  return warnings;
}

}  // namespace srsim
