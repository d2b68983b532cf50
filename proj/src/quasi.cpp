#include "qslab/quasi.hpp"

#include <algorithm>
#include <cmath>

namespace qslab {

namespace {

// Erode the good-cell mask by one face-adjacent layer. Out-of-range neighbors
// wrap for Periodic and count as bad for ZeroFlux, so walls erode too.
std::vector<char> erode(const std::vector<char>& good, const Grid& grid) {
  std::vector<char> out(good.size(), 0);
  const Boundary bc = grid.boundary();
  const int nx = grid.n(0);
  const int ny = grid.dim() == 2 ? grid.n(1) : 1;
  auto ok = [&](int i, int j) {
    if (i < 0 || i >= nx) {
      if (bc != Boundary::Periodic) return false;
      i = (i + nx) % nx;
    }
    if (j < 0 || j >= ny) {
      if (bc != Boundary::Periodic) return false;
      j = (j + ny) % ny;
    }
    return good[grid.dim() == 1 ? static_cast<std::size_t>(i) : grid.index(i, j)] != 0;
  };
  for (int i = 0; i < nx; ++i)
    for (int j = 0; j < ny; ++j) {
      bool keep = ok(i, j) && ok(i - 1, j) && ok(i + 1, j);
      if (grid.dim() == 2) keep = keep && ok(i, j - 1) && ok(i, j + 1);
      out[grid.dim() == 1 ? static_cast<std::size_t>(i) : grid.index(i, j)] = keep ? 1 : 0;
    }
  return out;
}

double masked_l2(const std::vector<const std::vector<double>*>& comps,
                 const std::vector<char>& mask, const Grid& grid) {
  double s = 0.0;
  for (std::size_t c = 0; c < mask.size(); ++c) {
    if (!mask[c]) continue;
    for (const auto* comp : comps) s += (*comp)[c] * (*comp)[c];
  }
  return std::sqrt(grid.cell_volume() * s);
}

}  // namespace

VectorField velocity_from_density(const Field& rho, const ViscosityLaw& law) {
  if (law.dim() != rho.grid.dim())
    raise(Errc::domain_error, "velocity_from_density: law dim must match the grid dim");
  const double cut = law.vacuum_threshold();
  const VectorField grad = gradient(rho);
  VectorField u(rho.grid);
  for (std::size_t c = 0; c < rho.v.size(); ++c) {
    if (rho.v[c] <= cut) continue;
    const double factor = -law.phi_prime(rho.v[c]);
    for (int ax = 0; ax < rho.grid.dim(); ++ax) u.comp[ax][c] = factor * grad.comp[ax][c];
  }
  return u;
}

SnapshotTriple make_triple(const Field& rho_prev, const Field& rho_mid, const Field& rho_next,
                           const ViscosityLaw& law) {
  if (!(rho_prev.grid == rho_mid.grid) || !(rho_mid.grid == rho_next.grid))
    raise(Errc::inconsistent_triple, "make_triple: snapshots on different grids");
  const double h1 = rho_mid.time - rho_prev.time;
  const double h2 = rho_next.time - rho_mid.time;
  if (!(h1 > 0.0) || !(h2 > 0.0))
    raise(Errc::inconsistent_triple, "make_triple: times must increase");
  if (std::abs(h2 - h1) > 1e-9 * std::max(h1, h2))
    raise(Errc::inconsistent_triple, "make_triple: spacing is not uniform");
  SnapshotTriple t;
  t.rho_prev = rho_prev;
  t.rho_mid = rho_mid;
  t.rho_next = rho_next;
  t.u_prev = velocity_from_density(rho_prev, law);
  t.u_mid = velocity_from_density(rho_mid, law);
  t.u_next = velocity_from_density(rho_next, law);
  t.dt = h2;
  return t;
}

ResidualReport quasi_momentum_residual(const SnapshotTriple& triple, const ViscosityLaw& law) {
  const Grid& grid = triple.rho_mid.grid;
  if (law.dim() != grid.dim())
    raise(Errc::domain_error, "quasi_momentum_residual: law dim must match the grid dim");
  const int dim = grid.dim();
  const std::size_t cells = grid.cells();
  const double cut = law.vacuum_threshold();
  const double inv2dt = 0.5 / triple.dt;

  const std::vector<double>& rho = triple.rho_mid.v;
  std::vector<double> mu_v(cells), mu_p(cells), lam_v(cells);
  for (std::size_t c = 0; c < cells; ++c) {
    mu_v[c] = law.mu(rho[c]);
    mu_p[c] = rho[c] > cut ? law.mu_prime(rho[c]) : 0.0;
    lam_v[c] = law.lambda(rho[c]);
  }

  // d/dt (rho u) by a centered difference of the outer snapshots.
  std::array<std::vector<double>, 2> direct;
  for (int k = 0; k < dim; ++k) {
    direct[k].resize(cells);
    for (std::size_t c = 0; c < cells; ++c)
      direct[k][c] = (triple.rho_next.v[c] * triple.u_next.comp[k][c] -
                      triple.rho_prev.v[c] * triple.u_prev.comp[k][c]) *
                     inv2dt;
  }

  // Convective term div(rho u x u).
  std::vector<double> q(cells);
  for (int k = 0; k < dim; ++k)
    for (int j = 0; j < dim; ++j) {
      for (std::size_t c = 0; c < cells; ++c)
        q[c] = rho[c] * triple.u_mid.comp[j][c] * triple.u_mid.comp[k][c];
      const std::vector<double> dq = axis_derivative(q, grid, j);
      for (std::size_t c = 0; c < cells; ++c) direct[k][c] += dq[c];
    }

  // Viscous flux S = 2 mu D(u) + lambda (div u) I, subtracted as div S.
  std::array<std::array<std::vector<double>, 2>, 2> du;  // du[j][k] = d u_k / d x_j
  for (int j = 0; j < dim; ++j)
    for (int k = 0; k < dim; ++k) du[j][k] = axis_derivative(triple.u_mid.comp[k], grid, j);
  std::vector<double> divu(cells, 0.0);
  for (int k = 0; k < dim; ++k)
    for (std::size_t c = 0; c < cells; ++c) divu[c] += du[k][k][c];
  std::vector<double> s_jk(cells);
  for (int k = 0; k < dim; ++k)
    for (int j = 0; j < dim; ++j) {
      for (std::size_t c = 0; c < cells; ++c) {
        s_jk[c] = mu_v[c] * (du[j][k][c] + du[k][j][c]);
        if (j == k) s_jk[c] += lam_v[c] * divu[c];
      }
      const std::vector<double> ds = axis_derivative(s_jk, grid, j);
      for (std::size_t c = 0; c < cells; ++c) direct[k][c] -= ds[c];
    }

  // identity_field = -grad(2 mu'(rho) [d/dt rho - 2 lap mu(rho)]).
  const std::vector<double> lap_mu = flux_laplacian_values(mu_v, grid);
  std::vector<double> w(cells);
  for (std::size_t c = 0; c < cells; ++c) {
    const double pme_res =
        (triple.rho_next.v[c] - triple.rho_prev.v[c]) * inv2dt - 2.0 * lap_mu[c];
    w[c] = 2.0 * mu_p[c] * pme_res;
  }
  std::array<std::vector<double>, 2> identity;
  for (int k = 0; k < dim; ++k) {
    identity[k] = axis_derivative(w, grid, k);
    for (std::size_t c = 0; c < cells; ++c) identity[k][c] = -identity[k][c];
  }

  std::vector<char> good(cells);
  for (std::size_t c = 0; c < cells; ++c) good[c] = rho[c] >= 10.0 * cut ? 1 : 0;
  for (int pass = 0; pass < 3; ++pass) good = erode(good, grid);

  ResidualReport rep;
  rep.dx = grid.min_dx();
  rep.dt = triple.dt;
  for (std::size_t c = 0; c < cells; ++c)
    if (good[c]) ++rep.interior_cells;
  if (rep.interior_cells == 0)
    raise(Errc::domain_error, "quasi_momentum_residual: interior mask is empty");

  std::vector<const std::vector<double>*> dv, iv;
  for (int k = 0; k < dim; ++k) {
    dv.push_back(&direct[k]);
    iv.push_back(&identity[k]);
  }
  rep.direct = masked_l2(dv, good, grid);
  rep.identity = masked_l2(iv, good, grid);

  std::array<std::vector<double>, 2> diff;
  for (int k = 0; k < dim; ++k) {
    diff[k].resize(cells);
    for (std::size_t c = 0; c < cells; ++c) diff[k][c] = direct[k][c] - identity[k][c];
  }
  std::vector<const std::vector<double>*> mv;
  for (int k = 0; k < dim; ++k) mv.push_back(&diff[k]);
  rep.mismatch = masked_l2(mv, good, grid);
  return rep;
}

}  // namespace qslab
