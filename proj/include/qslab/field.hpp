#pragma once

#include <array>
#include <vector>

#include "qslab/grid.hpp"

namespace qslab {

// Scalar cell values plus the time they belong to. Row-major in 2D (x outer).
struct Field {
  Grid grid;
  std::vector<double> v;
  double time = 0.0;

  Field() = default;
  explicit Field(const Grid& g, double fill = 0.0, double t = 0.0)
      : grid(g), v(g.cells(), fill), time(t) {}

  double& operator()(int i, int j = 0) { return v[grid.index(i, j)]; }
  double operator()(int i, int j = 0) const { return v[grid.index(i, j)]; }
};

// One cell-centered component per axis.
struct VectorField {
  Grid grid;
  std::array<std::vector<double>, 2> comp;

  VectorField() = default;
  explicit VectorField(const Grid& g) : grid(g) {
    for (int ax = 0; ax < g.dim(); ++ax) comp[ax].assign(g.cells(), 0.0);
  }
};

// Sample a function of the cell center (1D).
template <class F>
Field sample1d(const Grid& g, F&& fn, double t = 0.0) {
  Field out(g, 0.0, t);
  for (int i = 0; i < g.n(0); ++i) out.v[i] = fn(g.center(0, i));
  return out;
}

// Sample a function of the cell center (2D).
template <class F>
Field sample2d(const Grid& g, F&& fn, double t = 0.0) {
  Field out(g, 0.0, t);
  for (int i = 0; i < g.n(0); ++i)
    for (int j = 0; j < g.n(1); ++j)
      out.v[g.index(i, j)] = fn(g.center(0, i), g.center(1, j));
  return out;
}

}  // namespace qslab
