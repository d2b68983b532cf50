#pragma once

#include <vector>

#include "qslab/field.hpp"
#include "qslab/viscosity.hpp"

namespace qslab::pme {

// Explicit conservative solver for d/dt rho = 2 lap mu(rho).
struct Config {
  ViscosityLaw law;
  Grid grid;
  double t_end = 1.0;
  double cfl = 0.5;
  std::vector<double> snapshot_times;
  double vacuum_floor = 0.0;
  // Support radius threshold, relative to the initial max density.
  double support_threshold_rel = 1e-12;
};

struct SeriesPoint {
  double t, dt, mass, l1, l2, linf, support_radius;
};

struct Snapshot {
  double t;
  Field rho;
};

struct StepStats {
  double min_preclamp = 0.0;
  double clamped_mass = 0.0;
};

struct Trajectory {
  std::vector<Snapshot> snapshots;
  std::vector<SeriesPoint> series;
  Field final_state;
  double initial_mass = 0.0;
  double min_preclamp = 0.0;       // most negative cell value seen before clamping
  double clamped_mass_total = 0.0;
  double max_mass_drift_rel = 0.0;
  std::size_t steps = 0;
};

// cfl * dx^2 / (4 dim D_max) with D_max = max over cells of 2 mu'(rho), floored
// at 1e-30. A factor-2 margin under the linear stability limit, which also
// makes the update monotone. May return infinity (no diffusion); callers cap
// at the remaining time. Unbounded diffusivity (vacuum cells with alpha < 1)
// raises StabilityViolation: such runs need a vacuum floor.
double stable_dt(const Field& rho, const ViscosityLaw& law, double cfl);

// One forward-Euler step. Negative undershoots are clamped to vacuum_floor and
// the deficit is taken proportionally from the remaining cells, so the cell
// sum is preserved exactly.
Field step(const Field& rho, const ViscosityLaw& law, double dt, double vacuum_floor = 0.0,
           StepStats* stats = nullptr);

// Adaptive-dt run from rho0.time to t_end, landing exactly on each requested
// snapshot time.
Trajectory run(const Config& cfg, const Field& rho0);

struct ContractionTrial {
  double lhs = 0.0;                // || a(t) - b(t) ||_1
  double rhs = 0.0;                // || a0 - b0 ||_1
  double positive_part_lhs = 0.0;  // || (a(t) - b(t))_+ ||_1
  double positive_part_rhs = 0.0;
};

// Evolves both fields with a shared dt (the smaller of the two stability
// bounds) so the discrete comparison principle applies step by step.
ContractionTrial l1_contraction_trial(const Field& a0, const Field& b0, const ViscosityLaw& law,
                                      double t, double cfl = 0.5);

// integral of psi(rho), the entropy dissipated by the flow.
double psi_integral(const Field& rho, const ViscosityLaw& law);

// Face-difference form of integral |grad mu(rho)|^2; summation by parts makes
//   psi_integral(after) - psi_integral(before) + 2 dt dissipation(before)
// an O(dt^2) identity for the explicit step.
double dissipation(const Field& rho, const ViscosityLaw& law);

}  // namespace qslab::pme
