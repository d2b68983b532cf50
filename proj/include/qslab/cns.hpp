#pragma once

#include <string>
#include <vector>

#include "qslab/field.hpp"
#include "qslab/pme.hpp"
#include "qslab/viscosity.hpp"

namespace qslab::cns {

// Integrability windows for the adiabatic exponent given the two-sided
// viscosity constants. In 3D two overlapping windows share the lower edge
// 5/6 + nu2/12; the first upper edge switches form at nu1 = 2. In 2D the
// window is one-sided: gamma > 1/4 + nu2/8. All inequalities strict.
struct Admissibility {
  bool admissible = false;
  std::vector<std::string> windows_hit;
};

Admissibility gamma_window(double gamma, double nu1, double nu2, int dim);

// Barotropic pressure eps * a * rho^gamma.
struct PressureSpec {
  double eps = 0.0;
  double a = 1.0;
  double gamma = 2.0;
};

// Conservative 1D state: density and momentum per cell.
struct State {
  Grid grid;
  std::vector<double> rho, mom;
  double time = 0.0;
};

State make_state(const Field& rho, const Field& u);
Field density_field(const State& s);
Field velocity_field(const State& s, double rho_min);

struct Config {
  ViscosityLaw law;
  Grid grid;
  PressureSpec pressure;
  double t_end = 1.0;
  double cfl = 0.4;  // must stay in (0, 1/2] so the upwind update is monotone
  std::vector<double> snapshot_times;
  double rho_min = 1e-12;  // velocity reconstruction floor u = m / max(rho, rho_min)
};

struct EnergyPoint {
  double t = 0.0, dt = 0.0;
  double mass = 0.0, momentum = 0.0;
  double energy = 0.0;          // 1/2 rho u^2 + eps a/(gamma-1) rho^gamma
  double bd = 0.0;              // energy with u replaced by u + grad phi(rho)
  double mv = 0.0;              // rho (1+u^2)/2 ln(1+u^2)
  double pressure_l1 = 0.0;     // eps a |rho^gamma|_L1 at this time
  double pressure_cross = 0.0;  // eps a sum of face increment products, >= 0
};

struct Snapshot {
  double t = 0.0;
  Field rho;
  Field u;
};

struct RunResult {
  std::vector<Snapshot> snapshots;
  std::vector<EnergyPoint> series;  // initial state first, then one per step
  State final_state;
  double initial_mass = 0.0;
  double initial_momentum = 0.0;
  double max_mass_drift_rel = 0.0;
  double max_momentum_drift_abs = 0.0;
  double pressure_l1l1 = 0.0;     // time integral of pressure_l1
  double pressure_linf_l1 = 0.0;  // sup over time of pressure_l1
  double pressure_l53 = 0.0;      // space-time L^(5/3) norm of eps a rho^gamma
  double min_density = 0.0;
  std::size_t steps = 0;
};

// cfl * min(dx / max(|u| + c), dx^2 / (2 max nu_kin)) with the sound speed
// c = sqrt(eps a gamma rho^(gamma-1)) and nu_kin = (2 mu + lambda) / rho.
double stable_dt(const State& s, const ViscosityLaw& law, const PressureSpec& pr, double cfl,
                 double rho_min);

// One forward Euler step: upwind mass and momentum advection with face
// velocity 1/2(u_L + u_R), arithmetic face averages for the pressure and the
// viscous coefficient 2 mu + lambda. Periodic faces wrap; zero-flux walls
// mirror the density and negate the velocity, closing the wall mass flux.
State step(const State& s, const ViscosityLaw& law, const PressureSpec& pr, double dt,
           double rho_min);

RunResult run(const Config& cfg, const State& init);

// Runs the same initial density through the momentum solver at each pressure
// strength, starting from u = -grad phi(rho0), and through the diffusion
// solver once, comparing densities at the shared snapshot times.
struct SweepConfig {
  ViscosityLaw law;
  Grid grid;
  Field rho0;
  std::vector<double> eps_values;
  double a = 1.0;
  double gamma = 2.0;
  double t_end = 1.0;
  double cfl = 0.4;
  std::vector<double> snapshot_times;
  double rho_min = 1e-12;
};

struct SweepRow {
  double eps = 0.0;
  double sup_l1_dist = 0.0;    // over snapshot times and the final time
  double final_l1_dist = 0.0;
  double final_l2_dist = 0.0;
  double support_excess = 0.0; // momentum-solver support radius minus reference
  double pressure_l1l1 = 0.0;
  double pressure_linf_l1 = 0.0;
};

struct SweepResult {
  std::vector<SweepRow> rows;  // in eps_values order
  pme::Trajectory reference;
};

SweepResult vanishing_pressure_sweep(const SweepConfig& cfg);

}  // namespace qslab::cns
