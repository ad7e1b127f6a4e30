#include <cmath>
#include <numbers>
#include <utility>
#include <vector>

#include "doctest.h"
#include "srsim/analysis.hpp"
#include "srsim/config.hpp"
#include "srsim/errors.hpp"
#include "srsim/model.hpp"
#include "srsim/phase.hpp"
#include "srsim/solver.hpp"

using namespace srsim;
namespace nums = std::numbers;

namespace {

SimConfig small_config() {
  SimConfig cfg = make_default_config();
  cfg.grid = SpatialGrid::symmetric(1.2 * 30.0, 129);
  cfg.tf_half_length_xi = 30.0;
  cfg.dtau = nums::pi / 800.0;
  return cfg;
}

SystemState rotated(const SystemState& s, double a0, double a1, double am1) {
  auto rot = [&](const ModeField& f, double a) {
    std::vector<Complex> v = f.values();
    for (Complex& c : v) c *= std::polar(1.0, a);
    return ModeField(f.mode(), f.grid(), std::move(v));
  };
  return SystemState(s.tau(), rot(s.psi00(), a0), rot(s.psi11(), a1),
                     rot(s.psim1m1(), am1));
}

}  // namespace

TEST_CASE("relative phase tracks mode phase rotations") {
  // delta_phi01 = 2 phi00 - phi11 - phim1m1 with psi = |psi| e^{-i phi}:
  // multiplying psi_m by e^{i alpha_m} shifts phi_m by -alpha_m, so delta
  // shifts by -(2 a0 - a1 - am1).
  SimConfig cfg = small_config();
  cfg.pump.phi0 = 0.9;
  SystemState s = seeded_initial_state(cfg);
  for (int k = 0; k < 60; ++k) s = step_rk4(s, cfg.pump, cfg.dtau);

  const GratingDiagnostics base = grating_diagnostics(s);
  REQUIRE(base.phase_valid);

  const double a0 = 0.31, a1 = -0.55, am1 = 0.12;
  const GratingDiagnostics rot =
      grating_diagnostics(rotated(s, a0, a1, am1));
  REQUIRE(rot.phase_valid);
  const double expect = wrap_pi(base.delta_phi01 - (2.0 * a0 - a1 - am1));
  CHECK(circular_distance(rot.delta_phi01, expect) < 1e-10);
}

TEST_CASE("initial relative phase follows the seed phase") {
  SimConfig cfg = small_config();
  cfg.seed_phase = 0.4;
  const SystemState s = seeded_initial_state(cfg);
  const GratingDiagnostics d = grating_diagnostics(s);
  REQUIRE(d.phase_valid);
  // Both seeds carry e^{+i 0.4}, i.e. phi11 = phim1m1 = -0.4 in the
  // psi = |psi| e^{-i phi} convention, so delta = 2*0 - 2*(-0.4) = 0.8.
  CHECK(circular_distance(d.delta_phi01, 0.8) < 1e-12);
}

TEST_CASE("backward pumping rate matches a finite-difference derivative") {
  // Fourth-order centered stencil on N_{-1,-1}(tau) sampled every step.
  SimConfig cfg = small_config();
  cfg.pump.phi0 = nums::pi / 2.0;
  const Trajectory t = simulate(cfg, 1);

  const size_t n = t.taus.size();
  REQUIRE(n > 9);
  const double h = t.taus[1] - t.taus[0];
  double peak_rate = 0.0;
  std::vector<double> fd(n, 0.0), model(n, 0.0);
  for (size_t k = 2; k + 2 < n; ++k) {
    fd[k] = (-t.populations[k + 2].nm1m1 + 8.0 * t.populations[k + 1].nm1m1 -
             8.0 * t.populations[k - 1].nm1m1 + t.populations[k - 2].nm1m1) /
            (12.0 * h);
    model[k] = backward_rate_eq4(t.diagnostics[k], cfg.pump);
    peak_rate = std::max(peak_rate, std::abs(model[k]));
  }
  REQUIRE(peak_rate > 0.0);
  for (size_t k = 2; k + 2 < n; ++k)
    CHECK(std::abs(fd[k] - model[k]) <= 1e-6 * peak_rate);
}

TEST_CASE("integrated pumping rate reproduces the population change") {
  SimConfig cfg = small_config();
  cfg.pump.phi0 = 1.7;
  const Trajectory t = simulate(cfg, 1);

  double integral = 0.0;
  for (size_t k = 0; k + 1 < t.taus.size(); ++k) {
    const double r0 = backward_rate_eq4(t.diagnostics[k], cfg.pump);
    const double r1 = backward_rate_eq4(t.diagnostics[k + 1], cfg.pump);
    integral += 0.5 * (r0 + r1) * (t.taus[k + 1] - t.taus[k]);
  }
  const double change =
      t.populations.back().nm1m1 - t.populations.front().nm1m1;
  CHECK(integral ==
        doctest::Approx(change).epsilon(0.01));
}

TEST_CASE("sinusoid fit recovers exact parameters") {
  const double A = 0.37, delta = 1.2, B = 2.5;
  std::vector<std::pair<double, double>> pts;
  for (int k = 0; k < 16; ++k) {
    const double phi = 2.0 * nums::pi * k / 16.0;
    pts.emplace_back(phi, -A * std::cos(phi + delta) + B);
  }
  const PhaseFit fit = fit_phase_response(pts);
  CHECK(fit.amplitude == doctest::Approx(A).epsilon(1e-12));
  CHECK(fit.phase_offset == doctest::Approx(delta).epsilon(1e-12));
  CHECK(fit.baseline == doctest::Approx(B).epsilon(1e-12));
  CHECK(fit.r_squared == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(fit.maximizer ==
        doctest::Approx(wrap_two_pi(nums::pi - delta)).epsilon(1e-10));
  CHECK(fit.minimizer ==
        doctest::Approx(wrap_two_pi(2.0 * nums::pi - delta)).epsilon(1e-10));
  CHECK(!fit.degenerate);
  CHECK(fit.n_points == 16);
}

TEST_CASE("fit handles negative-amplitude parameterizations") {
  // y = +0.2 cos(phi) + 1 is the delta = pi case.
  std::vector<std::pair<double, double>> pts;
  for (int k = 0; k < 12; ++k) {
    const double phi = 2.0 * nums::pi * k / 12.0;
    pts.emplace_back(phi, 0.2 * std::cos(phi) + 1.0);
  }
  const PhaseFit fit = fit_phase_response(pts);
  CHECK(fit.amplitude == doctest::Approx(0.2).epsilon(1e-12));
  CHECK(circular_distance(fit.phase_offset, nums::pi) < 1e-10);
  CHECK(fit.maximizer == doctest::Approx(0.0).epsilon(1e-10));
}

TEST_CASE("constant data give a degenerate fit, not an error") {
  std::vector<std::pair<double, double>> pts;
  for (int k = 0; k < 8; ++k)
    pts.emplace_back(2.0 * nums::pi * k / 8.0, 5.0);
  const PhaseFit fit = fit_phase_response(pts);
  CHECK(fit.degenerate);
  CHECK(fit.amplitude == 0.0);
  CHECK(fit.baseline == doctest::Approx(5.0));
  CHECK(std::isnan(fit.maximizer));
  CHECK(std::isnan(fit.minimizer));
}

TEST_CASE("fit rejects unusable inputs") {
  std::vector<std::pair<double, double>> few = {
      {0.0, 1.0}, {1.0, 2.0}, {2.0, 0.5}, {3.0, 1.1}, {4.0, 0.2}};
  CHECK_THROWS_AS(fit_phase_response(few), FitError);

  // Six points all at the same phase cannot span a period.
  std::vector<std::pair<double, double>> stacked(
      6, std::pair<double, double>{1.0, 2.0});
  stacked[3].second = 3.0;
  CHECK_THROWS_AS(fit_phase_response(stacked), FitError);

  std::vector<std::pair<double, double>> bad;
  for (int k = 0; k < 8; ++k)
    bad.emplace_back(2.0 * nums::pi * k / 8.0, k == 3 ? std::nan("") : 1.0);
  CHECK_THROWS_AS(fit_phase_response(bad), FitError);
}

TEST_CASE("population helper equals the mode norm") {
  SimConfig cfg = small_config();
  const SystemState s = seeded_initial_state(cfg);
  CHECK(population(s.psi11()) == doctest::Approx(s.psi11().norm()));
}
