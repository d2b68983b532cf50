#pragma once

#include <array>
#include <cstddef>

#include "qslab/error.hpp"

namespace qslab {

enum class Boundary { Periodic, ZeroFlux };

// Uniform cell-centered grid in one or two dimensions.
// Cell i along an axis is centered at a + (i + 1/2) * dx.
class Grid {
public:
  Grid() = default;

  Grid(int n, double a, double b, Boundary bc = Boundary::ZeroFlux)
      : Grid(std::array<int, 2>{n, 1}, {a, 0.0}, {b, 1.0}, bc, 1) {}

  Grid(std::array<int, 2> n, std::array<double, 2> a, std::array<double, 2> b,
       Boundary bc = Boundary::ZeroFlux)
      : Grid(n, a, b, bc, 2) {}

  int dim() const { return dim_; }
  int n(int axis = 0) const { return n_[axis]; }
  std::size_t cells() const { return cells_; }
  double lo(int axis = 0) const { return lo_[axis]; }
  double hi(int axis = 0) const { return hi_[axis]; }
  double dx(int axis = 0) const { return dx_[axis]; }
  Boundary boundary() const { return bc_; }

  double min_dx() const { return dim_ == 2 && dx_[1] < dx_[0] ? dx_[1] : dx_[0]; }

  // Cell volume element: dx in 1D, dx*dy in 2D.
  double cell_volume() const { return dim_ == 1 ? dx_[0] : dx_[0] * dx_[1]; }

  double center(int axis, int i) const { return lo_[axis] + (i + 0.5) * dx_[axis]; }

  std::size_t index(int i, int j = 0) const {
    return static_cast<std::size_t>(i) * n_[1] + j;
  }

  bool operator==(const Grid&) const = default;

private:
  Grid(std::array<int, 2> n, std::array<double, 2> a, std::array<double, 2> b,
       Boundary bc, int dim)
      : dim_(dim), n_(n), lo_(a), hi_(b), bc_(bc) {
    for (int ax = 0; ax < dim_; ++ax) {
      if (n_[ax] < 8) raise(Errc::domain_error, "grid: need at least 8 cells per axis");
      if (!(hi_[ax] > lo_[ax])) raise(Errc::domain_error, "grid: domain extent must be positive");
      dx_[ax] = (hi_[ax] - lo_[ax]) / n_[ax];
    }
    if (dim_ == 1) {
      n_[1] = 1;
      dx_[1] = 1.0;
    }
    cells_ = static_cast<std::size_t>(n_[0]) * n_[1];
  }

  int dim_ = 1;
  std::array<int, 2> n_{8, 1};
  std::array<double, 2> lo_{0.0, 0.0};
  std::array<double, 2> hi_{1.0, 1.0};
  std::array<double, 2> dx_{0.125, 1.0};
  Boundary bc_ = Boundary::ZeroFlux;
  std::size_t cells_ = 8;
};

}  // namespace qslab
