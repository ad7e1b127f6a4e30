#ifndef SRSIM_ENDFIRE_HPP
#define SRSIM_ENDFIRE_HPP

#include <vector>

#include "srsim/state.hpp"

namespace srsim {

// Scaled envelope of the backward-propagating end-fire field. The physical
// field is this suffix integral times a coupling that the solver folds into
// chi0:
//   S(xi) = integral_{xi' >= xi} [ psi00 psi11* + psim1m1 psi00* e^{-2i tau} ]
struct EndfireField {
  double tau = 0.0;
  std::vector<Complex> values;
};

EndfireField compute_endfire(const SystemState& state);

namespace detail {

// Reverse cumulative trapezoid: out[j] = trapezoid integral of f over
// [xi_j, xi_{n-1}]; out[n-1] == 0 exactly.
std::vector<Complex> suffix_trapezoid(const std::vector<Complex>& f,
                                      double spacing);

}  // namespace detail

}  // namespace srsim

#endif
