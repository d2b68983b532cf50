#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "qslab/error.hpp"
#include "qslab/exact.hpp"
#include "qslab/field.hpp"
#include "qslab/grid.hpp"
#include "qslab/ops.hpp"

using namespace qslab;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

TEST_CASE("porous-medium exponents in 1D and 3D") {
  const auto e1 = pme_exponents(2.0, 1);
  CHECK(e1.gamma1 == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(e1.beta_space == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(e1.sigma_mass == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(e1.m_c == 0.0);

  const auto e3 = pme_exponents(2.0, 3);
  CHECK(e3.gamma1 == doctest::Approx(0.6).epsilon(1e-15));
  CHECK(e3.beta_space == doctest::Approx(0.2).epsilon(1e-15));
  CHECK(e3.sigma_mass == doctest::Approx(0.4).epsilon(1e-15));
  CHECK(e3.m_c == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("time and mass exponents interpolate between known limits") {
  const auto e = pme_exponents(2.0, 1);
  CHECK(e.time_exp(1.0) == 0.0);
  CHECK(e.time_exp(kInf) == doctest::Approx(e.gamma1).epsilon(1e-15));
  CHECK(e.time_exp(2.0) == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
  CHECK(e.mass_exp(1.0) == 1.0);
  CHECK(e.mass_exp(kInf) == doctest::Approx(e.sigma_mass).epsilon(1e-15));
  CHECK_THROWS_AS((void)e.time_exp(0.5), Error);
}

TEST_CASE("critical fast-diffusion exponent") {
  CHECK(critical_fast_exponent(1) == 0.0);
  CHECK(critical_fast_exponent(2) == 0.0);
  CHECK(critical_fast_exponent(3) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  try {
    (void)pme_exponents(0.2, 3);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::extinction_regime);
  }
}

TEST_CASE("similarity exponents of the pressureless momentum balance") {
  const auto s = similarity_exponents(2.0, 3.0);
  CHECK(s.e_rho == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(s.e_u == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(s.e_x == doctest::Approx(0.0).epsilon(1e-15));

  const auto r = similarity_exponents(1.0, 2.0);
  CHECK(r.e_rho == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(r.e_u == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(r.e_x == doctest::Approx(0.5).epsilon(1e-15));

  try {
    (void)similarity_exponents(2.0, 2.0);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::no_scaling_invariance);
  }
}

TEST_CASE("porous Barenblatt profile and mass") {
  const auto sol = BarenblattSolution::from_mass(1.0, 2.0, 1, 0.5);
  CHECK(sol.regime() == Regime::Porous);
  // Central decay follows t^{-gamma1} exactly.
  CHECK(sol.eval(1.0, 0.0) / sol.eval(8.0, 0.0) == doctest::Approx(2.0).epsilon(1e-13));
  // Compact support: zero beyond the front, positive just inside.
  const double R = sol.support_radius(1.0);
  CHECK(R == doctest::Approx(std::sqrt(12.0 * sol.profile_constant())).epsilon(1e-13));
  CHECK(sol.eval(1.0, 1.01 * R) == 0.0);
  CHECK(sol.eval(1.0, 0.99 * R) > 0.0);

  const Grid g(1024, -8.0, 8.0);
  const Field rho = sol.sample(g, 1.0);
  CHECK(integrate(rho) == doctest::Approx(1.0).epsilon(1e-5));
  CHECK(rho.time == 1.0);
}

TEST_CASE("fast-diffusion profile uses the algebraic tail") {
  const auto sol = BarenblattSolution::from_profile_constant(0.2, 0.75, 1, 0.5);
  CHECK(sol.regime() == Regime::Fast);
  const double C = sol.profile_constant();
  const double k = sol.profile_k();
  CHECK(k < 0.0);
  CHECK(sol.profile(1.0) ==
        doctest::Approx(std::pow(C - k, 1.0 / (0.75 - 1.0))).epsilon(1e-13));
  CHECK(sol.eval(1.0, 50.0) > 0.0);
  CHECK(std::isinf(sol.support_radius(1.0)));
}

TEST_CASE("heat kernel at alpha = 1") {
  const auto sol = BarenblattSolution::from_mass(2.0, 1.0, 1, 0.5);
  CHECK(sol.regime() == Regime::Heat);
  const double t = 1.3, x = 0.7;
  const double expect = 2.0 / std::sqrt(4.0 * M_PI * t) * std::exp(-x * x / (4.0 * t));
  CHECK(sol.eval(t, x) == doctest::Approx(expect).epsilon(1e-14));
  CHECK(std::isinf(sol.support_radius(1.0)));
}

TEST_CASE("time derivative matches a centered difference") {
  const auto sol = BarenblattSolution::from_mass(1.0, 2.0, 1, 0.5);
  const double h = 1e-5;
  for (double r : {0.0, 0.4, 0.9}) {
    const double fd = (sol.eval_radial(1.0 + h, r) - sol.eval_radial(1.0 - h, r)) / (2.0 * h);
    CHECK(sol.time_derivative_radial(1.0, r) == doctest::Approx(fd).epsilon(1e-7));
  }
}

TEST_CASE("Barenblatt residual shrinks under refinement away from the front") {
  const auto sol = BarenblattSolution::from_mass(1.0, 2.0, 1, 0.5);
  const auto law = ViscosityLaw::power_law(0.5, 2.0, 1);
  auto sup_inner = [&](int n) {
    const Grid g(n, -4.0, 4.0);
    const Field res = pme_residual(sol, law, 1.0, g);
    double worst = 0.0;
    for (int i = 0; i < g.n(0); ++i)
      if (std::abs(g.center(0, i)) <= 1.5) worst = std::max(worst, std::abs(res.v[i]));
    return worst;
  };
  const double coarse = sup_inner(128);
  const double fine = sup_inner(256);
  CHECK(fine < coarse);
  CHECK(coarse / fine > 2.5);
  CHECK(fine < 1e-3);
}

TEST_CASE("extinction constants for alpha = 1/5 in three dimensions") {
  CHECK(ExtinctionSolution::separable_constant(0.2, 3) == 1.0);
  CHECK(ExtinctionSolution::calibrated_constant(0.2, 3, 2.5) == 1.0);
}

TEST_CASE("extinction solution vanishes at the extinction time") {
  const ExtinctionSolution sol(0.2, 3, 1.0, 1.0);
  CHECK(sol.eval_radial(1.0, 2.0) == 0.0);
  CHECK(sol.eval_radial(1.5, 2.0) == 0.0);
  // rho = c ((T - t)/r^2)^{1/(1-alpha)} with 1/(1-alpha) = 5/4.
  CHECK(sol.eval_radial(0.0, 2.0) == doctest::Approx(std::pow(0.25, 1.25)).epsilon(1e-14));
  const double h = 1e-6;
  const double fd = (sol.eval_radial(0.5 + h, 1.5) - sol.eval_radial(0.5 - h, 1.5)) / (2.0 * h);
  CHECK(sol.time_derivative_radial(0.5, 1.5) == doctest::Approx(fd).epsilon(1e-6));
}

TEST_CASE("extinction solution rejects the spreading regime") {
  CHECK_THROWS_AS((void)ExtinctionSolution(0.5, 3, 1.0, 1.0), Error);
  CHECK_THROWS_AS((void)ExtinctionSolution(0.2, 2, 1.0, 1.0), Error);
}
