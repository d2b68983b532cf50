#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qslab/error.hpp"
#include "qslab/exact.hpp"
#include "qslab/field.hpp"
#include "qslab/grid.hpp"
#include "qslab/quasi.hpp"
#include "qslab/viscosity.hpp"

using namespace qslab;

TEST_CASE("quasi-solution velocity is -phi'(rho) grad rho") {
  const Grid g(256, 0.0, 2.0 * M_PI, Boundary::Periodic);
  const auto law = ViscosityLaw::power_law(0.5, 2.0, 1);  // phi' = 2
  const Field rho = sample1d(g, [](double x) { return 2.0 + std::sin(x); });
  const VectorField u = velocity_from_density(rho, law);
  for (int i = 0; i < g.n(0); ++i)
    CHECK(u.comp[0][i] ==
          doctest::Approx(-2.0 * std::cos(g.center(0, i))).epsilon(5e-4));
}

TEST_CASE("vacuum cells get zero velocity") {
  const Grid g(64, -4.0, 4.0);
  const auto law = ViscosityLaw::power_law(0.5, 2.0, 1);
  const Field rho = sample1d(g, [](double x) { return std::abs(x) < 1.0 ? 1.0 : 0.0; });
  const VectorField u = velocity_from_density(rho, law);
  for (int i = 0; i < g.n(0); ++i)
    if (rho.v[i] == 0.0) CHECK(u.comp[0][i] == 0.0);
}

TEST_CASE("velocity requires matching law dimension") {
  const Grid g(64, -4.0, 4.0);
  const auto law = ViscosityLaw::power_law(0.5, 2.0, 2);
  CHECK_THROWS_AS((void)velocity_from_density(Field(g, 1.0), law), Error);
}

TEST_CASE("triples demand uniform spacing and one grid") {
  const Grid g(64, -4.0, 4.0);
  const auto law = ViscosityLaw::power_law(0.5, 2.0, 1);
  auto at = [&](double t) { return Field(g, 1.0, t); };

  const auto triple = make_triple(at(1.0), at(1.1), at(1.2), law);
  CHECK(triple.dt == doctest::Approx(0.1).epsilon(1e-12));

  try {
    (void)make_triple(at(1.0), at(1.1), at(1.5), law);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::inconsistent_triple);
  }
  CHECK_THROWS_AS((void)make_triple(at(1.2), at(1.1), at(1.0), law), Error);

  const Grid other(128, -4.0, 4.0);
  CHECK_THROWS_AS((void)make_triple(at(1.0), Field(other, 1.0, 1.1), at(1.2), law), Error);
}

TEST_CASE("momentum residuals of a spreading self-similar triple") {
  const auto sol = BarenblattSolution::from_mass(1.0, 2.0, 1, 0.5);
  const auto law = ViscosityLaw::power_law(0.5, 2.0, 1);
  const Grid g(256, -6.0, 6.0);
  const double dt = 1e-3;
  const auto triple =
      make_triple(sol.sample(g, 1.0 - dt), sol.sample(g, 1.0), sol.sample(g, 1.0 + dt), law);
  const auto rep = quasi_momentum_residual(triple, law);
  CHECK(rep.interior_cells > 0);
  CHECK(std::isfinite(rep.direct));
  CHECK(rep.mismatch < rep.direct);
  CHECK(rep.mismatch < 0.05);
  CHECK(rep.dx == g.dx(0));
  CHECK(rep.dt == doctest::Approx(dt).epsilon(1e-12));
}

TEST_CASE("an all-vacuum triple has no interior cells to report") {
  const Grid g(64, -4.0, 4.0);
  const auto law = ViscosityLaw::power_law(0.5, 2.0, 1);
  auto at = [&](double t) { return Field(g, 0.0, t); };
  const auto triple = make_triple(at(1.0), at(1.1), at(1.2), law);
  CHECK_THROWS_AS((void)quasi_momentum_residual(triple, law), Error);
}
