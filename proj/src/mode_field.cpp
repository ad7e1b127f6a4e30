#include "srsim/mode_field.hpp"

#include <cmath>
#include <string>

#include "srsim/errors.hpp"

namespace srsim {

std::pair<int, int> mode_indices(Mode m) {
  switch (m) {
    case Mode::condensate: return {0, 0};
    case Mode::forward: return {1, 1};
    case Mode::backward: return {-1, -1};
  }
  return {0, 0};
}

const char* mode_name(Mode m) {
  switch (m) {
    case Mode::condensate: return "condensate";
    case Mode::forward: return "forward";
    case Mode::backward: return "backward";
  }
  return "?";
}

ModeField::ModeField(Mode mode, const SpatialGrid& grid,
                     std::vector<Complex> values)
    : mode_(mode), grid_(grid), values_(std::move(values)) {
  if (static_cast<int>(values_.size()) != grid_.n_points())
    throw std::invalid_argument(
        std::string("ModeField: value count does not match the grid (") +
        std::to_string(values_.size()) + " vs " +
        std::to_string(grid_.n_points()) + ")");
}

ModeField ModeField::zeros(Mode mode, const SpatialGrid& grid) {
  return ModeField(mode, grid, std::vector<Complex>(grid.n_points()));
}

double ModeField::norm() const {
  double acc = 0.0;
  for (const Complex& v : values_) acc += std::norm(v);
  return acc * grid_.spacing();
}

bool ModeField::all_finite() const {
  for (const Complex& v : values_)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  return true;
}

}  // namespace srsim
