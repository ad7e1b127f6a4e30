#ifndef SRSIM_SOLVER_HPP
#define SRSIM_SOLVER_HPP

#include <vector>

#include "srsim/analysis.hpp"
#include "srsim/config.hpp"
#include "srsim/state.hpp"

namespace srsim {

struct StateDerivative {
  std::vector<Complex> d00;
  std::vector<Complex> d11;
  std::vector<Complex> dm1m1;
};

// Coupled-mode right-hand side; conserves sum_modes |psi|^2 pointwise.
StateDerivative rhs(const SystemState& state, const PumpConfig& pump);

// One classical RK4 step; the end-fire field is recomputed at every stage.
// Throws NumericError if the step produces non-finite values.
SystemState step_rk4(const SystemState& state, const PumpConfig& pump,
                     double dtau);

struct PopulationSample {
  double n00 = 0.0;
  double n11 = 0.0;
  double nm1m1 = 0.0;
  double total() const { return n00 + n11 + nm1m1; }
};

struct Trajectory {
  std::vector<double> taus;
  std::vector<PopulationSample> populations;
  std::vector<GratingDiagnostics> diagnostics;
  // Sparse states; the final state is always the last entry.
  std::vector<SystemState> snapshots;
  double initial_total = 0.0;

  const SystemState& final_state() const { return snapshots.back(); }
  // max_k |total(tau_k) - total(0)| / total(0)
  double max_drift() const;
};

// Fixed-step integration of the seeded initial state over [0, tau_end].
// Samples (populations + grating diagnostics) are recorded at step 0, every
// sample_every-th step, and the final step. The final step is trimmed so the
// trajectory lands on tau_end exactly.
Trajectory simulate(const SimConfig& cfg, int sample_every = 1);

// Same integrator from an arbitrary initial state (used for symmetry and
// convergence audits). snapshot_every > 0 stores intermediate states too.
Trajectory simulate_state(SystemState initial, const PumpConfig& pump,
                          double tau_end, double dtau, int sample_every = 1,
                          int snapshot_every = 0);

}  // namespace srsim

#endif
