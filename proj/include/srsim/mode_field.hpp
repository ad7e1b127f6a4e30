#ifndef SRSIM_MODE_FIELD_HPP
#define SRSIM_MODE_FIELD_HPP

#include <complex>
#include <utility>
#include <vector>

#include "srsim/grid.hpp"

namespace srsim {

using Complex = std::complex<double>;

// The three members of the diagonal mode family. Indices count photon
// recoils along the (end-fire, pump) axes: condensate (0,0), forward (1,1),
// backward (-1,-1).
enum class Mode { condensate, forward, backward };

std::pair<int, int> mode_indices(Mode m);
const char* mode_name(Mode m);

// Complex envelope psi(xi) of one mode at one instant. Mode norms are atom
// fractions: the unscattered condensate carries norm 1.
class ModeField {
 public:
  ModeField(Mode mode, const SpatialGrid& grid, std::vector<Complex> values);
  static ModeField zeros(Mode mode, const SpatialGrid& grid);

  Mode mode() const { return mode_; }
  const SpatialGrid& grid() const { return grid_; }
  const std::vector<Complex>& values() const { return values_; }

  // sum_j |psi(xi_j)|^2 * spacing
  double norm() const;
  bool all_finite() const;

 private:
  Mode mode_;
  SpatialGrid grid_;
  std::vector<Complex> values_;
};

}  // namespace srsim

#endif
