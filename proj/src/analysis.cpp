#include "srsim/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "srsim/endfire.hpp"
#include "srsim/errors.hpp"
#include "srsim/model.hpp"
#include "srsim/phase.hpp"

namespace srsim {

double population(const ModeField& field) { return field.norm(); }

GratingDiagnostics grating_diagnostics(const SystemState& state) {
  const SpatialGrid& grid = state.grid();
  const int n = grid.n_points();
  const double dxi = grid.spacing();

  const auto& p00 = state.psi00().values();
  const auto& p11 = state.psi11().values();
  const auto& pbk = state.psim1m1().values();

  std::vector<Complex> f01(n), fm10(n);
  for (int j = 0; j < n; ++j) {
    f01[j] = p00[j] * std::conj(p11[j]);
    fm10[j] = pbk[j] * std::conj(p00[j]);
  }
  const std::vector<Complex> t01 = detail::suffix_trapezoid(f01, dxi);
  const std::vector<Complex> tm10 = detail::suffix_trapezoid(fm10, dxi);

  // Outer integral as a plain sum * spacing, matching the norm quadrature:
  // then -2 chi Re[c01 e^{2i tau} + cm10] equals d(norm of psim1m1)/d tau of
  // the semi-discrete system exactly.
  Complex c01(0.0, 0.0), cm10(0.0, 0.0);
  for (int j = 0; j < n; ++j) {
    const Complex w = p00[j] * std::conj(pbk[j]);
    c01 += w * t01[j];
    cm10 += w * tm10[j];
  }
  c01 *= dxi;
  cm10 *= dxi;

  GratingDiagnostics diag;
  diag.tau = state.tau();
  diag.c01 = c01;
  diag.cm10 = cm10;
  diag.phase_valid = std::abs(c01) != 0.0;
  diag.delta_phi01 = diag.phase_valid ? wrap_pi(-std::arg(c01)) : 0.0;
  return diag;
}

double backward_rate_eq4(const GratingDiagnostics& diag,
                         const PumpConfig& pump) {
  const double chi = pump_beat(pump, diag.tau);
  const Complex rot = std::polar(1.0, 2.0 * diag.tau);
  return -2.0 * chi * (diag.c01 * rot + diag.cm10).real();
}

double backward_rate_eq4(const SystemState& state, const PumpConfig& pump) {
  return backward_rate_eq4(grating_diagnostics(state), pump);
}

namespace {

// Gaussian elimination with partial pivoting on the 3x3 normal system.
void solve3(double m[3][4]) {
  for (int col = 0; col < 3; ++col) {
    int pivot = col;
    for (int r = col + 1; r < 3; ++r)
      if (std::abs(m[r][col]) > std::abs(m[pivot][col])) pivot = r;
    if (pivot != col)
      for (int c = 0; c < 4; ++c) std::swap(m[col][c], m[pivot][c]);
    if (std::abs(m[col][col]) < 1.0e-12)
      throw FitError(
          "phase fit: phi0 samples do not span the period (singular normal "
          "equations)");
    for (int r = col + 1; r < 3; ++r) {
      const double f = m[r][col] / m[col][col];
      for (int c = col; c < 4; ++c) m[r][c] -= f * m[col][c];
    }
  }
  for (int col = 2; col >= 0; --col) {
    for (int r = 0; r < col; ++r) {
      const double f = m[r][col] / m[col][col];
      m[r][col] -= f * m[col][col];
      m[r][3] -= f * m[col][3];
    }
    m[col][3] /= m[col][col];
    m[col][col] = 1.0;
  }
}

}  // namespace

PhaseFit fit_phase_response(
    const std::vector<std::pair<double, double>>& points) {
  const int n = static_cast<int>(points.size());
  if (n < 6)
    throw FitError("phase fit requires at least 6 points, got " +
                   std::to_string(n));
  for (const auto& [phi, y] : points)
    if (!std::isfinite(phi) || !std::isfinite(y))
      throw FitError("phase fit: non-finite sample");

  double ymin = points[0].second, ymax = points[0].second;
  for (const auto& [phi, y] : points) {
    ymin = std::min(ymin, y);
    ymax = std::max(ymax, y);
  }
  if (ymax == ymin) {
    PhaseFit fit;
    fit.amplitude = 0.0;
    fit.phase_offset = 0.0;
    fit.baseline = ymin;
    fit.r_squared = 0.0;
    fit.maximizer = std::numeric_limits<double>::quiet_NaN();
    fit.minimizer = std::numeric_limits<double>::quiet_NaN();
    fit.degenerate = true;
    fit.n_points = n;
    return fit;
  }

  // y = p cos(phi) + q sin(phi) + B with p = -A cos(delta), q = A sin(delta).
  double scc = 0, scs = 0, sc = 0, sss = 0, ss = 0, sy = 0, scy = 0, ssy = 0;
  for (const auto& [phi, y] : points) {
    const double c = std::cos(phi), s = std::sin(phi);
    scc += c * c;
    scs += c * s;
    sc += c;
    sss += s * s;
    ss += s;
    sy += y;
    scy += c * y;
    ssy += s * y;
  }
  double m[3][4] = {{scc, scs, sc, scy},
                    {scs, sss, ss, ssy},
                    {sc, ss, double(n), sy}};
  solve3(m);
  const double p = m[0][3], q = m[1][3], b = m[2][3];

  PhaseFit fit;
  fit.amplitude = std::hypot(p, q);
  fit.phase_offset = fit.amplitude > 0.0 ? std::atan2(q, -p) : 0.0;
  fit.baseline = b;
  fit.n_points = n;

  double ss_res = 0.0, ss_tot = 0.0;
  const double ymean = sy / n;
  for (const auto& [phi, y] : points) {
    const double model = p * std::cos(phi) + q * std::sin(phi) + b;
    ss_res += (y - model) * (y - model);
    ss_tot += (y - ymean) * (y - ymean);
  }
  fit.r_squared = 1.0 - ss_res / ss_tot;

  fit.maximizer = wrap_two_pi(std::numbers::pi - fit.phase_offset);
  fit.minimizer = wrap_two_pi(2.0 * std::numbers::pi - fit.phase_offset);
  return fit;
}

}  // namespace srsim
