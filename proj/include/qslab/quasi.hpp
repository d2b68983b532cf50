#pragma once

#include "qslab/field.hpp"
#include "qslab/ops.hpp"
#include "qslab/viscosity.hpp"

namespace qslab {

// u = -grad phi(rho), realized as -phi'(rho) * centered gradient of rho.
// Cells at or below the law's vacuum threshold get zero velocity.
VectorField velocity_from_density(const Field& rho, const ViscosityLaw& law);

// Three density snapshots at uniformly spaced times, with velocities computed
// from each snapshot. Input fields must share one grid and satisfy
// t_next - t_mid == t_mid - t_prev to relative 1e-9, else InconsistentTriple.
struct SnapshotTriple {
  Field rho_prev, rho_mid, rho_next;
  VectorField u_prev, u_mid, u_next;
  double dt = 0.0;  // half-spacing: t_next - t_mid
};

SnapshotTriple make_triple(const Field& rho_prev, const Field& rho_mid, const Field& rho_next,
                           const ViscosityLaw& law);

// Discrete L2 norms at the mid time, taken over interior cells: cells whose
// density clears 10x the vacuum threshold and that sit more than three cells
// (Chebyshev) from any cell that does not, and from zero-flux walls.
//   direct   : d/dt(rho u) + div(rho u x u) - div(2 mu D(u)) - grad(lambda div u)
//   identity : -grad(2 mu'(rho) [d/dt rho - 2 lap mu(rho)])
//   mismatch : pointwise difference of the two, which vanishes with dx and dt
//              for any smooth density when u = -grad phi(rho).
struct ResidualReport {
  double direct = 0.0;
  double identity = 0.0;
  double mismatch = 0.0;
  double dx = 0.0;
  double dt = 0.0;
  std::size_t interior_cells = 0;
};

ResidualReport quasi_momentum_residual(const SnapshotTriple& triple, const ViscosityLaw& law);

}  // namespace qslab
