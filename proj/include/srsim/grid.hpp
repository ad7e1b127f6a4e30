#ifndef SRSIM_GRID_HPP
#define SRSIM_GRID_HPP

namespace srsim {

// Uniform 1-d grid in the dimensionless longitudinal coordinate xi = k_l * z.
class SpatialGrid {
 public:
  SpatialGrid(double xi_min, double xi_max, int n_points);
  static SpatialGrid symmetric(double xi_max, int n_points);

  double xi_min() const { return xi_min_; }
  double xi_max() const { return xi_max_; }
  int n_points() const { return n_points_; }
  double spacing() const { return spacing_; }
  double xi(int j) const { return xi_min_ + spacing_ * j; }

  friend bool operator==(const SpatialGrid& a, const SpatialGrid& b) {
    return a.xi_min_ == b.xi_min_ && a.xi_max_ == b.xi_max_ &&
           a.n_points_ == b.n_points_;
  }

 private:
  double xi_min_;
  double xi_max_;
  int n_points_;
  double spacing_;
};

}  // namespace srsim

#endif
