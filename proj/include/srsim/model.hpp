#ifndef SRSIM_MODEL_HPP
#define SRSIM_MODEL_HPP

#include "srsim/config.hpp"
#include "srsim/state.hpp"

namespace srsim {

// Instantaneous pump intensity envelope times the coupling:
// chi(tau) = chi0 * (1 + cos(beat_multiplier * tau + phi0)), always >= 0.
double pump_beat(const PumpConfig& pump, double tau);

// Inverted-parabola density profile, discretely normalized so that
// norm() == 1: |psi|^2 proportional to max(0, 1 - (xi/half_length)^2).
ModeField thomas_fermi_profile(const SpatialGrid& grid, double half_length);

// State at tau = 0: unit-norm condensate plus seed_forward / seed_backward
// atoms (as fractions of total_atoms) in the side modes, all sharing the
// condensate profile. Seeds carry phase seed_phase relative to the
// condensate.
SystemState seeded_initial_state(const SimConfig& cfg);

}  // namespace srsim

#endif
