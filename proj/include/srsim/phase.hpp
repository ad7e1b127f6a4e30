#ifndef SRSIM_PHASE_HPP
#define SRSIM_PHASE_HPP

#include <cmath>
#include <numbers>

namespace srsim {

// Wrap an angle into [0, 2*pi).
inline double wrap_two_pi(double x) {
  const double tp = 2.0 * std::numbers::pi;
  double t = std::fmod(x, tp);
  if (t < 0.0) t += tp;
  if (t == tp) t = 0.0;
  return t;
}

// Wrap an angle into (-pi, pi].
inline double wrap_pi(double x) {
  const double tp = 2.0 * std::numbers::pi;
  double t = std::fmod(x + std::numbers::pi, tp);
  if (t <= 0.0) t += tp;
  return t - std::numbers::pi;
}

// Distance between two angles on the circle, in [0, pi].
inline double circular_distance(double a, double b) {
  return std::abs(wrap_pi(a - b));
}

}  // namespace srsim

#endif
