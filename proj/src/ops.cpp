#include "qslab/ops.hpp"

#include <cmath>
#include <limits>

namespace qslab {

namespace {

// Neighbor cell index along one axis under the grid's boundary rule.
inline int neighbor(int i, int step, int n, Boundary bc) {
  int j = i + step;
  if (j >= 0 && j < n) return j;
  if (bc == Boundary::Periodic) return (j + n) % n;
  return i;  // mirror across the boundary face: ghost equals edge cell
}

}  // namespace

std::vector<double> flux_laplacian_values(const std::vector<double>& g, const Grid& grid) {
  if (g.size() != grid.cells()) raise(Errc::domain_error, "flux_laplacian: size mismatch");
  std::vector<double> out(grid.cells(), 0.0);
  const Boundary bc = grid.boundary();
  const int nx = grid.n(0);
  if (grid.dim() == 1) {
    const double inv = 1.0 / (grid.dx(0) * grid.dx(0));
    for (int i = 0; i < nx; ++i) {
      const double gc = g[i];
      const double fp = g[neighbor(i, +1, nx, bc)] - gc;
      const double fm = gc - g[neighbor(i, -1, nx, bc)];
      out[i] = (fp - fm) * inv;
    }
    return out;
  }
  const int ny = grid.n(1);
  const double invx = 1.0 / (grid.dx(0) * grid.dx(0));
  const double invy = 1.0 / (grid.dx(1) * grid.dx(1));
  for (int i = 0; i < nx; ++i) {
    const int ip = neighbor(i, +1, nx, bc);
    const int im = neighbor(i, -1, nx, bc);
    for (int j = 0; j < ny; ++j) {
      const int jp = neighbor(j, +1, ny, bc);
      const int jm = neighbor(j, -1, ny, bc);
      const double gc = g[grid.index(i, j)];
      double acc = ((g[grid.index(ip, j)] - gc) - (gc - g[grid.index(im, j)])) * invx;
      acc += ((g[grid.index(i, jp)] - gc) - (gc - g[grid.index(i, jm)])) * invy;
      out[grid.index(i, j)] = acc;
    }
  }
  return out;
}

Field flux_laplacian(const std::function<double(double)>& g, const Field& f) {
  std::vector<double> gv(f.v.size());
  for (std::size_t c = 0; c < f.v.size(); ++c) gv[c] = g(f.v[c]);
  Field out(f.grid, 0.0, f.time);
  out.v = flux_laplacian_values(gv, f.grid);
  return out;
}

VectorField gradient(const Field& f) {
  const Grid& grid = f.grid;
  VectorField out(grid);
  const Boundary bc = grid.boundary();
  const int nx = grid.n(0);
  if (grid.dim() == 1) {
    const double inv = 0.5 / grid.dx(0);
    for (int i = 0; i < nx; ++i)
      out.comp[0][i] = (f.v[neighbor(i, +1, nx, bc)] - f.v[neighbor(i, -1, nx, bc)]) * inv;
    return out;
  }
  const int ny = grid.n(1);
  const double invx = 0.5 / grid.dx(0);
  const double invy = 0.5 / grid.dx(1);
  for (int i = 0; i < nx; ++i) {
    const int ip = neighbor(i, +1, nx, bc);
    const int im = neighbor(i, -1, nx, bc);
    for (int j = 0; j < ny; ++j) {
      const int jp = neighbor(j, +1, ny, bc);
      const int jm = neighbor(j, -1, ny, bc);
      out.comp[0][grid.index(i, j)] = (f.v[grid.index(ip, j)] - f.v[grid.index(im, j)]) * invx;
      out.comp[1][grid.index(i, j)] = (f.v[grid.index(i, jp)] - f.v[grid.index(i, jm)]) * invy;
    }
  }
  return out;
}

std::vector<double> axis_derivative(const std::vector<double>& v, const Grid& grid, int axis) {
  if (v.size() != grid.cells()) raise(Errc::domain_error, "axis_derivative: size mismatch");
  if (axis < 0 || axis >= grid.dim()) raise(Errc::domain_error, "axis_derivative: bad axis");
  std::vector<double> out(grid.cells(), 0.0);
  const Boundary bc = grid.boundary();
  const int nx = grid.n(0);
  if (grid.dim() == 1) {
    const double inv = 0.5 / grid.dx(0);
    for (int i = 0; i < nx; ++i)
      out[i] = (v[neighbor(i, +1, nx, bc)] - v[neighbor(i, -1, nx, bc)]) * inv;
    return out;
  }
  const int ny = grid.n(1);
  const double inv = 0.5 / grid.dx(axis);
  for (int i = 0; i < nx; ++i) {
    const int ip = neighbor(i, +1, nx, bc);
    const int im = neighbor(i, -1, nx, bc);
    for (int j = 0; j < ny; ++j) {
      const int jp = neighbor(j, +1, ny, bc);
      const int jm = neighbor(j, -1, ny, bc);
      out[grid.index(i, j)] =
          axis == 0 ? (v[grid.index(ip, j)] - v[grid.index(im, j)]) * inv
                    : (v[grid.index(i, jp)] - v[grid.index(i, jm)]) * inv;
    }
  }
  return out;
}

Field divergence(const VectorField& vf) {
  const Grid& grid = vf.grid;
  Field out(grid);
  const Boundary bc = grid.boundary();
  const int nx = grid.n(0);
  if (grid.dim() == 1) {
    const double inv = 0.5 / grid.dx(0);
    for (int i = 0; i < nx; ++i)
      out.v[i] = (vf.comp[0][neighbor(i, +1, nx, bc)] - vf.comp[0][neighbor(i, -1, nx, bc)]) * inv;
    return out;
  }
  const int ny = grid.n(1);
  const double invx = 0.5 / grid.dx(0);
  const double invy = 0.5 / grid.dx(1);
  for (int i = 0; i < nx; ++i) {
    const int ip = neighbor(i, +1, nx, bc);
    const int im = neighbor(i, -1, nx, bc);
    for (int j = 0; j < ny; ++j) {
      const int jp = neighbor(j, +1, ny, bc);
      const int jm = neighbor(j, -1, ny, bc);
      out.v[grid.index(i, j)] =
          (vf.comp[0][grid.index(ip, j)] - vf.comp[0][grid.index(im, j)]) * invx +
          (vf.comp[1][grid.index(i, jp)] - vf.comp[1][grid.index(i, jm)]) * invy;
    }
  }
  return out;
}

Field curl2d(const VectorField& vf) {
  const Grid& grid = vf.grid;
  if (grid.dim() != 2) raise(Errc::domain_error, "curl2d: grid must be 2D");
  Field out(grid);
  const Boundary bc = grid.boundary();
  const int nx = grid.n(0);
  const int ny = grid.n(1);
  const double invx = 0.5 / grid.dx(0);
  const double invy = 0.5 / grid.dx(1);
  for (int i = 0; i < nx; ++i) {
    const int ip = neighbor(i, +1, nx, bc);
    const int im = neighbor(i, -1, nx, bc);
    for (int j = 0; j < ny; ++j) {
      const int jp = neighbor(j, +1, ny, bc);
      const int jm = neighbor(j, -1, ny, bc);
      out.v[grid.index(i, j)] =
          (vf.comp[1][grid.index(ip, j)] - vf.comp[1][grid.index(im, j)]) * invx -
          (vf.comp[0][grid.index(i, jp)] - vf.comp[0][grid.index(i, jm)]) * invy;
    }
  }
  return out;
}

double lp_norm(const std::vector<double>& v, const Grid& g, double p) {
  if (std::isinf(p)) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
  }
  if (!(p >= 1.0)) raise(Errc::domain_error, "lp_norm: p must be >= 1");
  double s = 0.0;
  if (p == 1.0) {
    for (double x : v) s += std::abs(x);
  } else if (p == 2.0) {
    for (double x : v) s += x * x;
  } else {
    for (double x : v) s += std::pow(std::abs(x), p);
  }
  return std::pow(g.cell_volume() * s, 1.0 / p);
}

double lp_norm(const Field& f, double p) { return lp_norm(f.v, f.grid, p); }

double integrate(const std::vector<double>& v, const Grid& g) {
  double s = 0.0;
  for (double x : v) s += x;
  return g.cell_volume() * s;
}

double integrate(const Field& f) { return integrate(f.v, f.grid); }

double support_radius(const Field& f, double threshold) {
  const Grid& g = f.grid;
  double mass = 0.0;
  double cx = 0.0, cy = 0.0;
  for (int i = 0; i < g.n(0); ++i)
    for (int j = 0; j < g.n(1); ++j) {
      const double v = f.v[g.index(i, j)];
      mass += v;
      cx += v * g.center(0, i);
      if (g.dim() == 2) cy += v * g.center(1, j);
    }
  if (mass <= 0.0) return 0.0;
  cx /= mass;
  cy /= mass;
  double r = 0.0;
  for (int i = 0; i < g.n(0); ++i)
    for (int j = 0; j < g.n(1); ++j) {
      if (f.v[g.index(i, j)] < threshold) continue;
      const double dx = g.center(0, i) - cx;
      const double dy = g.dim() == 2 ? g.center(1, j) - cy : 0.0;
      r = std::max(r, std::hypot(dx, dy));
    }
  return r;
}

}  // namespace qslab
