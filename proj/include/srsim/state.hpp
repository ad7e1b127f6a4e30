#ifndef SRSIM_STATE_HPP
#define SRSIM_STATE_HPP

#include "srsim/mode_field.hpp"

namespace srsim {

// The full dynamical state: the three mode envelopes on one shared grid at
// dimensionless time tau = 2 * omega_r * t.
class SystemState {
 public:
  SystemState(double tau, ModeField psi00, ModeField psi11, ModeField psim1m1);

  double tau() const { return tau_; }
  const ModeField& psi00() const { return psi00_; }
  const ModeField& psi11() const { return psi11_; }
  const ModeField& psim1m1() const { return psim1m1_; }
  const SpatialGrid& grid() const { return psi00_.grid(); }

  // Conserved atom fraction: sum of the three mode norms.
  double total_norm() const;

 private:
  double tau_;
  ModeField psi00_;
  ModeField psi11_;
  ModeField psim1m1_;
};

}  // namespace srsim

#endif
