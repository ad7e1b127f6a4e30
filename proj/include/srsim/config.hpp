#ifndef SRSIM_CONFIG_HPP
#define SRSIM_CONFIG_HPP

#include <numbers>
#include <string>
#include <vector>

#include "srsim/grid.hpp"

namespace srsim {

// 87Rb condensate with Thomas-Fermi half length 50 um, pumped at 780 nm:
// half length in units of 1/k_l.
inline constexpr double kTfHalfLengthXi =
    2.0 * std::numbers::pi * 50.0e-6 / 780.0e-9;

// Grid margin beyond the condensate, so the end-fire integral sees the whole
// cloud plus empty space on both sides.
inline constexpr double kGridMargin = 1.2;

// Reference value of the dimensionless pump coupling chi0 (it scales as the
// square of the single-photon Rabi frequency g). Fixed by the calibration
// sweep (`srsim calibrate --target 2e-3`): a one-cycle run at phi0 = pi/2
// with one-atom seeds puts 2e-3 of the atoms in the backward mode at 0.9%
// condensate depletion. The target sits low in the admissible [1e-3, 1e-1]
// backward-fraction window so that the ten-atom seed variant of the phase
// sweep stays clear of saturation and its response extrema do not drift.
inline constexpr double kDefaultCoupling = 4.4399092042210535;

struct PumpConfig {
  double chi0 = kDefaultCoupling;  // dimensionless two-photon coupling
  double phi0 = 0.0;               // initial relative phase of the two pump
                                   // components, radians in [0, 2*pi)
  double beat_multiplier = 2.0;    // beat frequency in tau units; 2 puts the
                                   // beat on the delta_omega = 4 omega_r
                                   // resonance
};

struct SimConfig {
  SpatialGrid grid = SpatialGrid::symmetric(kGridMargin * kTfHalfLengthXi,
                                            512);
  PumpConfig pump;
  double seed_forward = 1.0;   // atoms seeded into the forward mode
  double seed_backward = 1.0;  // atoms seeded into the backward mode
  double total_atoms = 2.0e5;
  double tau_end = std::numbers::pi;        // one full beat cycle
  double dtau = std::numbers::pi / 2000.0;  // fixed RK4 step
  double tf_half_length_xi = kTfHalfLengthXi;
  double seed_phase = 0.0;  // phase of both seeds relative to the condensate
};

SimConfig make_default_config();

// Throws ConfigError on hard violations; returns human-readable warnings for
// legal but suspicious settings (e.g. seed fractions large enough to leave
// the undepleted-seed regime).
std::vector<std::string> validate(const SimConfig& cfg);

}  // namespace srsim

#endif
