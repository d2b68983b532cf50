#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "qslab/diagnostics.hpp"
#include "qslab/error.hpp"
#include "qslab/exact.hpp"
#include "qslab/field.hpp"
#include "qslab/grid.hpp"
#include "qslab/ops.hpp"
#include "qslab/viscosity.hpp"

using namespace qslab;

TEST_CASE("log-log fit recovers an exact power law") {
  std::vector<double> t, y;
  for (int k = 0; k < 40; ++k) {
    const double tk = 1.0 + 0.25 * k;
    t.push_back(tk);
    y.push_back(3.0 * std::pow(tk, -0.5));
  }
  const auto fit = loglog_fit(t, y);
  CHECK(fit.slope == doctest::Approx(-0.5).epsilon(1e-12));
  CHECK(fit.intercept == doctest::Approx(std::log(3.0)).epsilon(1e-12));
  CHECK(fit.r2 == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(fit.points_used >= 30);
}

TEST_CASE("log-log fit rejects thin data") {
  std::vector<double> t{1.0, 2.0, 3.0, 4.0};
  std::vector<double> y{1.0, 0.5, 0.3, 0.25};
  CHECK_THROWS_AS((void)loglog_fit(t, y), Error);
  std::vector<double> t2{1.0, 2.0};
  std::vector<double> y2{1.0};
  CHECK_THROWS_AS((void)loglog_fit(t2, y2), Error);
}

TEST_CASE("decay fit reports the gap to the theoretical slope") {
  std::vector<double> t, y;
  for (int k = 0; k < 30; ++k) {
    const double tk = 1.0 + k;
    t.push_back(tk);
    y.push_back(std::pow(tk, -1.0 / 3.0));
  }
  const auto d = decay_fit(t, y, -1.0 / 3.0);
  CHECK(std::abs(d.gap) < 1e-12);
  CHECK(d.theory == -1.0 / 3.0);
}

TEST_CASE("distance to the matching self-similar solution vanishes on it") {
  const auto sol = BarenblattSolution::from_mass(1.0, 2.0, 1, 0.5);
  const Grid g(256, -6.0, 6.0);
  const Field rho = sol.sample(g, 2.0);
  const auto d0 = barenblatt_distance(rho, sol);
  CHECK(d0.l1 == 0.0);
  CHECK(d0.scaled_linf == 0.0);

  Field off = rho;
  off.v[128] += 0.01;
  const auto d1 = barenblatt_distance(off, sol);
  CHECK(d1.l1 == doctest::Approx(0.01 * g.dx(0)).epsilon(1e-12));
  CHECK(d1.scaled_linf > 0.0);
}

TEST_CASE("entropy report of a uniform resting state") {
  const Grid g(8, 0.0, 1.0, Boundary::Periodic);
  const auto law = ViscosityLaw::power_law(0.5, 2.0, 1);
  const Field rho(g, 1.0);
  const VectorField u(g);
  const auto rep = entropy_report(rho, u, law, 0.5, 2.0, 2.0);
  // energy = eps a/(gamma-1) * integral rho^gamma = 0.5 * 2 * 1 = 1.
  CHECK(rep.energy == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(rep.bd == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(rep.mv == 0.0);
  CHECK(rep.pressure_cross == 0.0);
}

TEST_CASE("pressure cross term is nonnegative for any density") {
  const Grid g(64, -2.0, 2.0);
  const auto law = ViscosityLaw::power_law(0.5, 2.0, 1);
  const Field rho =
      sample1d(g, [](double x) { return 0.2 + std::exp(-x * x) * (1.0 + 0.3 * std::sin(7.0 * x)); });
  const VectorField u(g);
  const auto rep = entropy_report(rho, u, law, 0.1, 1.0, 1.4);
  CHECK(rep.pressure_cross >= 0.0);
  CHECK(rep.pressure_cross > 0.0);
}

TEST_CASE("entropy report validates the pressure parameters") {
  const Grid g(8, 0.0, 1.0);
  const auto law = ViscosityLaw::power_law(0.5, 2.0, 1);
  const Field rho(g, 1.0);
  const VectorField u(g);
  CHECK_THROWS_AS((void)entropy_report(rho, u, law, 0.5, 2.0, 1.0), Error);
  CHECK_THROWS_AS((void)entropy_report(rho, u, law, -0.5, 2.0, 2.0), Error);
  CHECK_THROWS_AS((void)entropy_report(rho, u, law, 0.5, 0.0, 2.0), Error);
}

TEST_CASE("semiconvexity monitor on exact self-similar snapshots") {
  const auto sol = BarenblattSolution::from_mass(1.0, 2.0, 1, 0.5);
  const auto law = ViscosityLaw::power_law(0.5, 2.0, 1);
  const Grid g(512, -8.0, 8.0);
  std::vector<pme::Snapshot> snaps;
  for (int k = 0; k <= 10; ++k) {
    const double t = 1.0 + 0.1 * k;
    snaps.push_back({t, sol.sample(g, t)});
  }
  const auto rep = aronson_benilan_monitor(snaps, law);
  CHECK(rep.times_used == 9);
  // The exact solution sits far inside the bound: the L1 ratio is
  // 1/(6 sqrt 3) ~ 0.096 for this profile.
  CHECK(rep.l1_ratio < 0.2);
  CHECK(rep.worst_violation < 5e-3);
}

TEST_CASE("semiconvexity monitor validates its inputs") {
  const auto law = ViscosityLaw::power_law(0.5, 2.0, 1);
  const auto heat = ViscosityLaw::power_law(0.5, 1.0, 1);
  const Grid g(64, -4.0, 4.0);
  std::vector<pme::Snapshot> two{{1.0, Field(g, 1.0, 1.0)}, {1.1, Field(g, 1.0, 1.1)}};
  CHECK_THROWS_AS((void)aronson_benilan_monitor(two, law), Error);

  std::vector<pme::Snapshot> uneven{{1.0, Field(g, 1.0, 1.0)},
                                    {1.1, Field(g, 1.0, 1.1)},
                                    {1.5, Field(g, 1.0, 1.5)}};
  CHECK_THROWS_AS((void)aronson_benilan_monitor(uneven, law), Error);

  std::vector<pme::Snapshot> ok{{1.0, Field(g, 1.0, 1.0)},
                                {1.1, Field(g, 1.0, 1.1)},
                                {1.2, Field(g, 1.0, 1.2)}};
  CHECK_THROWS_AS((void)aronson_benilan_monitor(ok, heat), Error);
}
