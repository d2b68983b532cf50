#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "qslab/error.hpp"
#include "qslab/field.hpp"
#include "qslab/grid.hpp"
#include "qslab/ops.hpp"

using namespace qslab;

namespace {

Field random_field(const Grid& g, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  Field f(g);
  for (auto& v : f.v) v = dist(rng);
  return f;
}

}  // namespace

TEST_CASE("flux laplacian telescopes to zero total") {
  for (Boundary bc : {Boundary::Periodic, Boundary::ZeroFlux}) {
    const Grid g(64, -1.0, 3.0, bc);
    const Field f = random_field(g, 7);
    const std::vector<double> lap = flux_laplacian_values(f.v, g);
    double total = 0.0;
    for (double v : lap) total += v * g.cell_volume();
    CHECK(std::abs(total) < 1e-12);
  }
}

TEST_CASE("flux laplacian of a constant vanishes identically") {
  const Grid g(32, 0.0, 1.0, Boundary::ZeroFlux);
  const Field f(g, 2.5);
  for (double v : flux_laplacian_values(f.v, g)) CHECK(v == 0.0);
}

TEST_CASE("flux laplacian recovers the 2D laplacian of a paraboloid") {
  const Grid g({32, 32}, {-1.0, -1.0}, {1.0, 1.0}, Boundary::ZeroFlux);
  Field f = sample2d(g, [](double x, double y) { return x * x + y * y; });
  const std::vector<double> lap = flux_laplacian_values(f.v, g);
  for (int i = 8; i < 24; ++i)
    for (int j = 8; j < 24; ++j)
      CHECK(lap[g.index(i, j)] == doctest::Approx(4.0).epsilon(1e-10));
}

TEST_CASE("flux laplacian composed with a function") {
  const Grid g(64, 0.0, 1.0, Boundary::Periodic);
  const Field f = random_field(g, 11);
  Field squared = f;
  for (auto& v : squared.v) v = v * v;
  const Field a = flux_laplacian([](double r) { return r * r; }, f);
  const std::vector<double> b = flux_laplacian_values(squared.v, g);
  for (int i = 0; i < g.n(0); ++i) CHECK(a.v[i] == b[i]);
}

TEST_CASE("gradient of a sine wave on a periodic grid") {
  const Grid g(256, 0.0, 2.0 * M_PI, Boundary::Periodic);
  const Field f = sample1d(g, [](double x) { return std::sin(x); });
  const VectorField grad = gradient(f);
  for (int i = 0; i < g.n(0); ++i)
    CHECK(grad.comp[0][i] ==
          doctest::Approx(std::cos(g.center(0, i))).epsilon(2e-4));
}

TEST_CASE("interior centered derivative of a linear ramp is exact") {
  const Grid g(32, 0.0, 1.0, Boundary::ZeroFlux);
  std::vector<double> ramp(g.cells());
  for (int i = 0; i < g.n(0); ++i) ramp[i] = 3.0 * g.center(0, i) + 1.0;
  const std::vector<double> d = axis_derivative(ramp, g, 0);
  for (int i = 1; i + 1 < g.n(0); ++i) CHECK(d[i] == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("curl of a gradient is numerically zero") {
  const Grid g({48, 48}, {0.0, 0.0}, {2.0 * M_PI, 2.0 * M_PI}, Boundary::Periodic);
  const Field f =
      sample2d(g, [](double x, double y) { return std::sin(x) * std::cos(2.0 * y); });
  const Field c = curl2d(gradient(f));
  CHECK(lp_norm(c, std::numeric_limits<double>::infinity()) < 1e-12);
}

TEST_CASE("lp norms and integral on a unit-volume grid") {
  const Grid g(8, 0.0, 8.0, Boundary::ZeroFlux);
  Field f(g);
  f.v[1] = 3.0;
  f.v[5] = -4.0;
  CHECK(lp_norm(f, 1.0) == doctest::Approx(7.0).epsilon(1e-15));
  CHECK(lp_norm(f, 2.0) == doctest::Approx(5.0).epsilon(1e-15));
  CHECK(lp_norm(f, std::numeric_limits<double>::infinity()) == 4.0);
  CHECK(integrate(f) == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK_THROWS_AS((void)lp_norm(f, 0.5), Error);
}

TEST_CASE("support radius measured from the mass centroid") {
  const Grid g(8, 0.0, 8.0, Boundary::ZeroFlux);
  Field f(g);
  f.v[1] = 1.0;  // center 1.5
  f.v[5] = 3.0;  // center 5.5
  // centroid = (1*1.5 + 3*5.5) / 4 = 4.5; farthest supported cell is at 1.5.
  CHECK(support_radius(f, 0.5) == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(support_radius(f, 10.0) == 0.0);
}

TEST_CASE("divergence of a constant vector field vanishes") {
  const Grid g({16, 16}, {0.0, 0.0}, {1.0, 1.0}, Boundary::Periodic);
  VectorField vf(g);
  for (auto& v : vf.comp[0]) v = 1.25;
  for (auto& v : vf.comp[1]) v = -0.5;
  const Field div = divergence(vf);
  CHECK(lp_norm(div, std::numeric_limits<double>::infinity()) == 0.0);
}
