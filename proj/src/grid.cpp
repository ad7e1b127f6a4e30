#include "srsim/grid.hpp"

#include <string>

#include "srsim/errors.hpp"

namespace srsim {

SpatialGrid::SpatialGrid(double xi_min, double xi_max, int n_points)
    : xi_min_(xi_min), xi_max_(xi_max), n_points_(n_points) {
  if (!(xi_min < xi_max))
    throw ConfigError("grid: xi_min must be smaller than xi_max (got " +
                      std::to_string(xi_min) + " .. " + std::to_string(xi_max) +
                      ")");
  if (n_points < 16)
    throw ConfigError("grid: n_points must be >= 16 (got " +
                      std::to_string(n_points) + ")");
  spacing_ = (xi_max_ - xi_min_) / (n_points_ - 1);
}

SpatialGrid SpatialGrid::symmetric(double xi_max, int n_points) {
  return SpatialGrid(-xi_max, xi_max, n_points);
}

}  // namespace srsim
