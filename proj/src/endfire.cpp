#include "srsim/endfire.hpp"

#include <cmath>

namespace srsim {

namespace detail {

std::vector<Complex> suffix_trapezoid(const std::vector<Complex>& f,
                                      double spacing) {
  const int n = static_cast<int>(f.size());
  std::vector<Complex> out(n);
  out[n - 1] = Complex(0.0, 0.0);
  for (int j = n - 2; j >= 0; --j)
    out[j] = out[j + 1] + 0.5 * spacing * (f[j] + f[j + 1]);
  return out;
}

}  // namespace detail

// The backward end-fire mode propagates toward -z, so the field seen at xi
// accumulates the gratings at all xi' >= xi. The forward grating
// psi00 psi11* radiates on resonance; the backward grating psim1m1 psi00*
// is detuned by the two-recoil shift, hence the e^{-2i tau} rotation.
EndfireField compute_endfire(const SystemState& state) {
  const SpatialGrid& grid = state.grid();
  const int n = grid.n_points();
  const Complex rot = std::polar(1.0, -2.0 * state.tau());

  const auto& p00 = state.psi00().values();
  const auto& p11 = state.psi11().values();
  const auto& pbk = state.psim1m1().values();

  std::vector<Complex> f(n);
  for (int j = 0; j < n; ++j)
    f[j] = p00[j] * std::conj(p11[j]) + pbk[j] * std::conj(p00[j]) * rot;

  return EndfireField{state.tau(),
                      detail::suffix_trapezoid(f, grid.spacing())};
}

}  // namespace srsim
