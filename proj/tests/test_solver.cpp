#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "srsim/config.hpp"
#include "srsim/errors.hpp"
#include "srsim/model.hpp"
#include "srsim/solver.hpp"

using namespace srsim;
namespace nums = std::numbers;

namespace {

// Small, fast configuration for structural checks.
SimConfig small_config() {
  SimConfig cfg = make_default_config();
  cfg.grid = SpatialGrid::symmetric(1.2 * 30.0, 129);
  cfg.tf_half_length_xi = 30.0;
  cfg.dtau = nums::pi / 400.0;
  return cfg;
}

SystemState scaled_phase(const SystemState& s, double alpha0, double alpha1,
                         double alpham1) {
  auto rot = [&](const ModeField& f, double a) {
    std::vector<Complex> v = f.values();
    const Complex ph = std::polar(1.0, a);
    for (Complex& c : v) c *= ph;
    return ModeField(f.mode(), f.grid(), std::move(v));
  };
  return SystemState(s.tau(), rot(s.psi00(), alpha0), rot(s.psi11(), alpha1),
                     rot(s.psim1m1(), alpham1));
}

double l2_distance(const SystemState& a, const SystemState& b) {
  double acc = 0.0;
  auto add = [&](const ModeField& x, const ModeField& y) {
    for (size_t j = 0; j < x.values().size(); ++j)
      acc += std::norm(x.values()[j] - y.values()[j]) * x.grid().spacing();
  };
  add(a.psi00(), b.psi00());
  add(a.psi11(), b.psi11());
  add(a.psim1m1(), b.psim1m1());
  return std::sqrt(acc);
}

}  // namespace

TEST_CASE("right-hand side conserves the density pointwise") {
  SimConfig cfg = small_config();
  cfg.pump.phi0 = 1.1;
  SystemState s = seeded_initial_state(cfg);
  // March a few steps so the modes pick up structure, then test the RHS.
  for (int k = 0; k < 25; ++k) s = step_rk4(s, cfg.pump, cfg.dtau);

  const StateDerivative d = rhs(s, cfg.pump);
  const auto& p00 = s.psi00().values();
  const auto& p11 = s.psi11().values();
  const auto& pm = s.psim1m1().values();
  for (size_t j = 0; j < p00.size(); ++j) {
    const double ddensity =
        2.0 * (d.d00[j] * std::conj(p00[j]) + d.d11[j] * std::conj(p11[j]) +
               d.dm1m1[j] * std::conj(pm[j]))
                  .real();
    CHECK(std::abs(ddensity) <= 1e-14);
  }
}

TEST_CASE("zero coupling freezes the state") {
  SimConfig cfg = small_config();
  cfg.pump.chi0 = 0.0;
  const SystemState s0 = seeded_initial_state(cfg);
  const SystemState s1 = step_rk4(s0, cfg.pump, cfg.dtau);
  CHECK(s1.tau() == doctest::Approx(cfg.dtau));
  for (size_t j = 0; j < s0.psi00().values().size(); ++j) {
    CHECK(s1.psi00().values()[j] == s0.psi00().values()[j]);
    CHECK(s1.psi11().values()[j] == s0.psi11().values()[j]);
    CHECK(s1.psim1m1().values()[j] == s0.psim1m1().values()[j]);
  }
}

TEST_CASE("one step conserves the total norm") {
  SimConfig cfg = small_config();
  const SystemState s0 = seeded_initial_state(cfg);
  const SystemState s1 = step_rk4(s0, cfg.pump, cfg.dtau);
  CHECK(std::abs(s1.total_norm() - s0.total_norm()) < 1e-12);
}

TEST_CASE("integrator converges at fourth order") {
  // Richardson: error(h) ~ C h^4 against a fine reference solution.
  SimConfig cfg = small_config();
  cfg.pump.phi0 = 0.8;
  const SystemState s0 = seeded_initial_state(cfg);
  const double tau_end = nums::pi / 8.0;

  auto run = [&](double h) {
    return simulate_state(s0, cfg.pump, tau_end, h).final_state();
  };
  const SystemState ref = run(tau_end / 2048.0);
  const double e1 = l2_distance(run(tau_end / 64.0), ref);
  const double e2 = l2_distance(run(tau_end / 128.0), ref);
  const double order = std::log2(e1 / e2);
  CHECK(order >= 3.8);
  CHECK(order <= 4.5);
}

TEST_CASE("full run keeps the drift below 1e-8") {
  SimConfig cfg = small_config();
  cfg.pump.phi0 = nums::pi / 2.0;
  const Trajectory t = simulate(cfg, 10);
  CHECK(t.max_drift() < 1e-8);
  CHECK(t.taus.back() == doctest::Approx(cfg.tau_end).epsilon(1e-12));
}

TEST_CASE("repeated runs are bitwise identical") {
  SimConfig cfg = small_config();
  cfg.pump.phi0 = 2.0;
  const Trajectory a = simulate(cfg, 25);
  const Trajectory b = simulate(cfg, 25);
  REQUIRE(a.populations.size() == b.populations.size());
  for (size_t k = 0; k < a.populations.size(); ++k) {
    CHECK(a.populations[k].n00 == b.populations[k].n00);
    CHECK(a.populations[k].n11 == b.populations[k].n11);
    CHECK(a.populations[k].nm1m1 == b.populations[k].nm1m1);
  }
}

TEST_CASE("global phase symmetry") {
  // The equations are invariant under a common phase on all three modes;
  // populations must agree to rounding.
  SimConfig cfg = small_config();
  const SystemState s0 = seeded_initial_state(cfg);
  const SystemState s0r = scaled_phase(s0, 0.9, 0.9, 0.9);
  const double tau_end = nums::pi / 4.0;

  const Trajectory a = simulate_state(s0, cfg.pump, tau_end, cfg.dtau, 50);
  const Trajectory b = simulate_state(s0r, cfg.pump, tau_end, cfg.dtau, 50);
  REQUIRE(a.populations.size() == b.populations.size());
  for (size_t k = 0; k < a.populations.size(); ++k) {
    CHECK(a.populations[k].n00 ==
          doctest::Approx(b.populations[k].n00).epsilon(1e-12));
    CHECK(a.populations[k].nm1m1 ==
          doctest::Approx(b.populations[k].nm1m1).epsilon(1e-12));
  }
  // The rotated run is the rotated solution, not merely norm-equal.
  const SystemState fa = scaled_phase(a.final_state(), 0.9, 0.9, 0.9);
  CHECK(l2_distance(fa, b.final_state()) <= 1e-12);
}

TEST_CASE("forward mode grows from the seed early in the pulse") {
  SimConfig cfg = small_config();
  cfg.pump.phi0 = 0.0;
  const Trajectory t = simulate(cfg, 5);
  double prev = -1.0;
  for (size_t k = 0; k < t.taus.size() && t.taus[k] <= nums::pi / 4.0; ++k) {
    CHECK(t.populations[k].n11 >= prev);
    prev = t.populations[k].n11;
  }
  CHECK(t.populations.back().n11 > t.populations.front().n11);
}

TEST_CASE("zero seeds stay dark") {
  SimConfig cfg = small_config();
  cfg.seed_forward = 0.0;
  cfg.seed_backward = 0.0;
  const Trajectory t = simulate(cfg, 100);
  CHECK(t.populations.back().n11 == 0.0);
  CHECK(t.populations.back().nm1m1 == 0.0);
  CHECK(t.populations.back().n00 ==
        doctest::Approx(t.populations.front().n00).epsilon(1e-12));
}

TEST_CASE("runaway coupling raises a numeric error") {
  SimConfig cfg = small_config();
  cfg.pump.chi0 = 1.0e8;
  CHECK_THROWS_AS(simulate(cfg, 100), NumericError);
}

TEST_CASE("trajectory sampling covers both endpoints") {
  SimConfig cfg = small_config();
  const Trajectory t = simulate(cfg, 7);
  REQUIRE(!t.taus.empty());
  CHECK(t.taus.front() == 0.0);
  CHECK(t.taus.back() == doctest::Approx(cfg.tau_end).epsilon(1e-12));
  for (size_t k = 1; k < t.taus.size(); ++k) CHECK(t.taus[k] > t.taus[k - 1]);
  CHECK(t.final_state().tau() == doctest::Approx(cfg.tau_end).epsilon(1e-12));
}
