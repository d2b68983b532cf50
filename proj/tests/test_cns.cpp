#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "qslab/cns.hpp"
#include "qslab/error.hpp"
#include "qslab/exact.hpp"
#include "qslab/field.hpp"
#include "qslab/grid.hpp"
#include "qslab/ops.hpp"
#include "qslab/viscosity.hpp"

using namespace qslab;

namespace {

cns::State bump_state(const Grid& g, double u0 = 0.0) {
  const Field rho = sample1d(g, [](double x) { return 0.2 + std::exp(-2.0 * x * x); });
  const Field u(g, u0);
  return cns::make_state(rho, u);
}

double sum(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s;
}

}  // namespace

TEST_CASE("adiabatic windows for known exponents") {
  CHECK(cns::gamma_window(2.0, 2.0, 2.0, 3).admissible);
  CHECK(cns::gamma_window(1.05, 2.0, 2.0, 2).admissible);
  CHECK_FALSE(cns::gamma_window(4.0, 2.0, 2.0, 3).admissible);
  CHECK_FALSE(cns::gamma_window(0.3, 2.0, 2.0, 2).admissible);

  const auto hit = cns::gamma_window(2.0, 2.0, 2.0, 3);
  CHECK(!hit.windows_hit.empty());
  CHECK(hit.windows_hit.front().find("3d") != std::string::npos);

  // The edges themselves are excluded: in 3D with nu2 = 2 the lower edge is 1.
  CHECK_FALSE(cns::gamma_window(1.0, 2.0, 2.0, 3).admissible);
  // In 2D with nu2 = 2 the window is gamma > 1/2.
  CHECK_FALSE(cns::gamma_window(0.5, 2.0, 2.0, 2).admissible);
  CHECK(cns::gamma_window(0.5 + 1e-9, 2.0, 2.0, 2).admissible);
}

TEST_CASE("adiabatic window rejects bad arguments") {
  CHECK_THROWS_AS((void)cns::gamma_window(2.0, 2.0, 2.0, 1), Error);
  CHECK_THROWS_AS((void)cns::gamma_window(2.0, -1.0, 2.0, 3), Error);
  CHECK_THROWS_AS((void)cns::gamma_window(2.0, 3.0, 2.0, 3), Error);
  const double inf = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS((void)cns::gamma_window(inf, 2.0, 2.0, 3), Error);
}

TEST_CASE("state round trip preserves density and velocity") {
  const Grid g(64, -4.0, 4.0);
  const Field rho = sample1d(g, [](double x) { return 0.5 + 0.1 * x; });
  const Field u = sample1d(g, [](double x) { return std::sin(x); });
  const cns::State s = cns::make_state(rho, u);
  const Field rho2 = cns::density_field(s);
  const Field u2 = cns::velocity_field(s, 1e-12);
  for (std::size_t i = 0; i < rho.v.size(); ++i) {
    CHECK(rho2.v[i] == rho.v[i]);
    CHECK(u2.v[i] == doctest::Approx(u.v[i]).epsilon(1e-14));
  }
}

TEST_CASE("a periodic step conserves mass and momentum") {
  const Grid g(64, -4.0, 4.0, Boundary::Periodic);
  const auto law = ViscosityLaw::power_law(0.5, 2.0, 1);
  const cns::PressureSpec pr{0.1, 1.0, 2.0};
  cns::State s = bump_state(g, 0.3);
  const double m0 = sum(s.rho), p0 = sum(s.mom);
  const double dt = cns::stable_dt(s, law, pr, 0.4, 1e-12);
  const cns::State next = cns::step(s, law, pr, dt, 1e-12);
  CHECK(sum(next.rho) == doctest::Approx(m0).epsilon(1e-14));
  CHECK(sum(next.mom) == doctest::Approx(p0).epsilon(1e-12));
  CHECK(next.time == s.time + dt);
}

TEST_CASE("zero-flux walls close the mass flux") {
  const Grid g(64, -4.0, 4.0, Boundary::ZeroFlux);
  const auto law = ViscosityLaw::power_law(0.5, 2.0, 1);
  const cns::PressureSpec pr{0.1, 1.0, 2.0};
  cns::State s = bump_state(g, 0.2);
  const double m0 = sum(s.rho);
  const double dt = cns::stable_dt(s, law, pr, 0.4, 1e-12);
  const cns::State next = cns::step(s, law, pr, dt, 1e-12);
  CHECK(sum(next.rho) == doctest::Approx(m0).epsilon(1e-14));
}

TEST_CASE("density stays nonnegative under the monotone cfl") {
  const Grid g(64, -4.0, 4.0);
  const auto law = ViscosityLaw::power_law(0.5, 2.0, 1);
  const cns::PressureSpec pr{0.01, 1.0, 2.0};
  const Field rho = sample1d(g, [](double x) { return std::abs(x) < 1.0 ? 1.0 : 0.0; });
  cns::State s = cns::make_state(rho, Field(g));
  for (int k = 0; k < 20; ++k) {
    const double dt = cns::stable_dt(s, law, pr, 0.5, 1e-12);
    s = cns::step(s, law, pr, dt, 1e-12);
  }
  for (double v : s.rho) CHECK(v >= 0.0);
}

TEST_CASE("stability bound rejects bad cfl and floors") {
  const Grid g(64, -4.0, 4.0);
  const auto law = ViscosityLaw::power_law(0.5, 2.0, 1);
  const cns::PressureSpec pr{0.1, 1.0, 2.0};
  const cns::State s = bump_state(g);
  CHECK_THROWS_AS((void)cns::stable_dt(s, law, pr, 0.6, 1e-12), Error);
  CHECK_THROWS_AS((void)cns::stable_dt(s, law, pr, 0.0, 1e-12), Error);
  CHECK_THROWS_AS((void)cns::stable_dt(s, law, pr, 0.4, 0.0), Error);
  CHECK_THROWS_AS((void)cns::stable_dt(s, law, cns::PressureSpec{0.1, 1.0, 1.0}, 0.4, 1e-12),
                  Error);
}

TEST_CASE("a short run lands snapshots and tracks drifts") {
  const Grid g(64, -4.0, 4.0, Boundary::Periodic);
  cns::Config cfg;
  cfg.law = ViscosityLaw::power_law(0.5, 2.0, 1);
  cfg.grid = g;
  cfg.pressure = {0.1, 1.0, 2.0};
  cfg.t_end = 0.05;
  cfg.snapshot_times = {0.02};
  const cns::RunResult res = cns::run(cfg, bump_state(g, 0.1));
  REQUIRE(res.snapshots.size() == 1);
  CHECK(res.snapshots[0].t == 0.02);
  CHECK(res.final_state.time == 0.05);
  CHECK(res.max_mass_drift_rel <= 1e-12);
  CHECK(res.max_momentum_drift_abs <= 1e-10);
  CHECK(res.min_density >= 0.0);
  CHECK(res.series.size() == res.steps + 1);
  CHECK(res.series.front().t == 0.0);
  CHECK(res.series.front().dt == 0.0);
  CHECK(res.pressure_l1l1 > 0.0);
  CHECK(res.pressure_linf_l1 >= res.series.front().pressure_l1);
}

TEST_CASE("vanishing pressure sweep orders distances by eps") {
  const Grid g(64, -4.0, 4.0);
  cns::SweepConfig cfg;
  cfg.law = ViscosityLaw::power_law(0.5, 2.0, 1);
  cfg.grid = g;
  cfg.rho0 = BarenblattSolution::from_mass(1.0, 2.0, 1, 0.5).sample(g, 1.0);
  cfg.eps_values = {1e-1, 1e-3};
  cfg.t_end = 1.05;
  cfg.snapshot_times = {1.02};
  const cns::SweepResult res = cns::vanishing_pressure_sweep(cfg);
  REQUIRE(res.rows.size() == 2);
  CHECK(res.rows[0].eps == 1e-1);
  CHECK(res.rows[1].eps == 1e-3);
  CHECK(res.rows[1].sup_l1_dist < res.rows[0].sup_l1_dist);
  CHECK(res.rows[1].pressure_l1l1 < res.rows[0].pressure_l1l1);
  CHECK(res.reference.final_state.time == 1.05);
}

TEST_CASE("sweep validates pressure strengths and the grid") {
  cns::SweepConfig cfg;
  cfg.law = ViscosityLaw::power_law(0.5, 2.0, 1);
  cfg.grid = Grid(64, -4.0, 4.0);
  cfg.rho0 = Field(cfg.grid, 1.0);
  cfg.eps_values = {0.0};
  CHECK_THROWS_AS((void)cns::vanishing_pressure_sweep(cfg), Error);
}
