#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "qslab/error.hpp"
#include "qslab/exact.hpp"
#include "qslab/field.hpp"
#include "qslab/grid.hpp"
#include "qslab/ops.hpp"
#include "qslab/pme.hpp"
#include "qslab/viscosity.hpp"

using namespace qslab;

namespace {

Field bump(const Grid& g, double amp = 1.0) {
  return sample1d(g, [amp](double x) { return amp * std::exp(-2.0 * x * x); });
}

}  // namespace

TEST_CASE("stable step of the heat law is dx^2 / 4") {
  const Grid g(8, 0.0, 1.0);
  const auto law = ViscosityLaw::power_law(0.5, 1.0, 1);
  const Field f(g, 2.0);
  // 2 mu' = 1, so the parabolic bound is dx^2 / (4 * 1 * 1).
  CHECK(pme::stable_dt(f, law, 1.0) == g.dx(0) * g.dx(0) / 4.0);
  CHECK(pme::stable_dt(f, law, 0.5) == g.dx(0) * g.dx(0) / 8.0);
  CHECK_THROWS_AS((void)pme::stable_dt(f, law, 0.0), Error);
  CHECK_THROWS_AS((void)pme::stable_dt(f, law, 1.5), Error);
}

TEST_CASE("a step conserves mass to rounding") {
  const auto law = ViscosityLaw::power_law(0.5, 2.0, 1);
  for (Boundary bc : {Boundary::Periodic, Boundary::ZeroFlux}) {
    const Grid g(64, -4.0, 4.0, bc);
    Field f = bump(g);
    const double before = integrate(f);
    const double dt = pme::stable_dt(f, law, 0.9);
    const Field next = pme::step(f, law, dt);
    CHECK(integrate(next) == doctest::Approx(before).epsilon(1e-14));
    CHECK(next.time == f.time + dt);
  }
}

TEST_CASE("a step beyond the parabolic bound raises") {
  const Grid g(64, -4.0, 4.0);
  const auto law = ViscosityLaw::power_law(0.5, 2.0, 1);
  const Field f = bump(g);
  const double dt = 2.0 * pme::stable_dt(f, law, 1.0);
  try {
    (void)pme::step(f, law, dt);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::stability_violation);
  }
}

TEST_CASE("vacuum floor lifts cells while preserving the cell sum") {
  const Grid g(32, -2.0, 2.0);
  const auto law = ViscosityLaw::power_law(0.5, 2.0, 1);
  Field f = bump(g);
  const double before = integrate(f);
  const double dt = pme::stable_dt(f, law, 0.5);
  const Field next = pme::step(f, law, dt, 0.05);
  double lowest = 1e300;
  for (double v : next.v) lowest = std::min(lowest, v);
  CHECK(lowest >= 0.05);
  CHECK(integrate(next) == doctest::Approx(before).epsilon(1e-13));
}

TEST_CASE("run lands snapshots and the final time exactly") {
  const Grid g(64, -4.0, 4.0);
  pme::Config cfg;
  cfg.law = ViscosityLaw::power_law(0.5, 2.0, 1);
  cfg.grid = g;
  cfg.t_end = 0.25;
  cfg.snapshot_times = {0.1, 0.2};
  const pme::Trajectory traj = pme::run(cfg, bump(g));
  REQUIRE(traj.snapshots.size() == 2);
  CHECK(traj.snapshots[0].t == 0.1);
  CHECK(traj.snapshots[0].rho.time == 0.1);
  CHECK(traj.snapshots[1].t == 0.2);
  CHECK(traj.final_state.time == 0.25);
  CHECK(traj.max_mass_drift_rel <= 1e-12);
  CHECK(traj.min_preclamp >= -1e-15);
  CHECK(!traj.series.empty());
  CHECK(traj.series.front().t <= 0.1);
  CHECK(traj.series.back().t == 0.25);
}

TEST_CASE("run validates its inputs") {
  const Grid g(64, -4.0, 4.0);
  pme::Config cfg;
  cfg.law = ViscosityLaw::power_law(0.5, 2.0, 1);
  cfg.grid = g;
  cfg.t_end = -1.0;
  CHECK_THROWS_AS((void)pme::run(cfg, bump(g)), Error);

  cfg.t_end = 0.1;
  cfg.snapshot_times = {0.5};
  CHECK_THROWS_AS((void)pme::run(cfg, bump(g)), Error);

  cfg.snapshot_times = {};
  Field neg = bump(g);
  neg.v[3] = -0.1;
  CHECK_THROWS_AS((void)pme::run(cfg, neg), Error);

  pme::Config mismatch = cfg;
  mismatch.law = ViscosityLaw::power_law(0.5, 2.0, 2);
  CHECK_THROWS_AS((void)pme::run(mismatch, bump(g)), Error);
}

TEST_CASE("two ordered states stay ordered and contract in L1") {
  const Grid g(128, -4.0, 4.0);
  const auto law = ViscosityLaw::power_law(0.5, 2.0, 1);
  const Field lo = bump(g, 0.8);
  Field hi = bump(g, 0.8);
  for (auto& v : hi.v) v += 0.3;
  const auto trial = pme::l1_contraction_trial(lo, hi, law, 0.05, 0.45);
  CHECK(trial.lhs <= trial.rhs * (1.0 + 1e-12));
  CHECK(trial.positive_part_rhs == 0.0);
  CHECK(trial.positive_part_lhs <= 1e-12);
}

TEST_CASE("contraction trial rejects mismatched grids") {
  const auto law = ViscosityLaw::power_law(0.5, 2.0, 1);
  const Grid a(64, -4.0, 4.0), b(128, -4.0, 4.0);
  CHECK_THROWS_AS((void)pme::l1_contraction_trial(bump(a), bump(b), law, 0.05, 0.45), Error);
}

TEST_CASE("summation by parts links the psi integral to the dissipation") {
  const auto law = ViscosityLaw::power_law(0.5, 2.0, 1);
  for (Boundary bc : {Boundary::Periodic, Boundary::ZeroFlux}) {
    const Grid g(64, -4.0, 4.0, bc);
    const Field f = bump(g);
    // sum mu(rho) * Lap_h mu(rho) * vol == -dissipation(rho) for the
    // mirrored and wrapped ghost rules alike.
    std::vector<double> mu(f.v.size());
    for (std::size_t i = 0; i < mu.size(); ++i) mu[i] = law.mu(f.v[i]);
    const std::vector<double> lap = flux_laplacian_values(mu, g);
    double lhs = 0.0;
    for (std::size_t i = 0; i < mu.size(); ++i) lhs += mu[i] * lap[i] * g.cell_volume();
    const double rhs = -pme::dissipation(f, law);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
  }
}

TEST_CASE("psi integral of a constant state") {
  const Grid g(8, 0.0, 1.0);
  const auto law = ViscosityLaw::power_law(1.0, 2.0, 1);
  const Field f(g, 2.0);
  CHECK(pme::psi_integral(f, law) == doctest::Approx(8.0 / 3.0).epsilon(1e-14));
}
