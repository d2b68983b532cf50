#include "qslab/exact.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "qslab/quad.hpp"

namespace qslab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double sphere_area(int dim) {
  switch (dim) {
    case 1: return 2.0;
    case 2: return 2.0 * std::numbers::pi;
    case 3: return 4.0 * std::numbers::pi;
  }
  raise(Errc::domain_error, "sphere_area: dim must be 1, 2 or 3");
}

// Mass of the profile F(xi) = (C - k xi^2)^(1/(alpha-1)) over R^N, by radial
// quadrature under a substitution that keeps the integrand smooth.
double profile_mass(double C, double k, double alpha, int dim) {
  const double w = sphere_area(dim);
  if (alpha > 1.0) {
    // r = R sin(theta), R = sqrt(C/k): integrand C^p cos^(2p+1) sin^(N-1), p = 1/(alpha-1).
    const double p = 1.0 / (alpha - 1.0);
    const double R = std::sqrt(C / k);
    const double I = adaptive_simpson(
        [p, dim](double th) {
          return std::pow(std::cos(th), 2.0 * p + 1.0) * std::pow(std::sin(th), dim - 1.0);
        },
        0.0, std::numbers::pi / 2.0, 1e-13);
    return w * std::pow(C, p) * std::pow(R, dim) * I;
  }
  // Fast regime: r = R sinh(z), R = sqrt(C/|k|): integrand decays like e^((N-2q)z).
  const double q = 1.0 / (1.0 - alpha);
  const double R = std::sqrt(C / -k);
  const double zmax = 40.0 / (2.0 * q - dim) + 5.0;
  const double I = adaptive_simpson(
      [q, dim](double z) {
        return std::pow(std::cosh(z), 1.0 - 2.0 * q) * std::pow(std::sinh(z), dim - 1.0);
      },
      0.0, zmax, 1e-13);
  return w * std::pow(C, -q) * std::pow(R, dim) * I;
}

}  // namespace

double critical_fast_exponent(int dim) {
  if (dim < 1) raise(Errc::domain_error, "critical_fast_exponent: dim must be >= 1");
  return dim <= 2 ? 0.0 : double(dim - 2) / dim;
}

double ExponentSet::time_exp(double p) const {
  if (std::isinf(p)) return gamma1;
  if (!(p >= 1.0)) raise(Errc::domain_error, "time_exp: p must be >= 1");
  return dim * (p - 1.0) / ((dim * (alpha - 1.0) + 2.0) * p);
}

double ExponentSet::mass_exp(double p) const {
  if (std::isinf(p)) return sigma_mass;
  if (!(p >= 1.0)) raise(Errc::domain_error, "mass_exp: p must be >= 1");
  return (dim * (alpha - 1.0) + 2.0 * p) / ((dim * (alpha - 1.0) + 2.0) * p);
}

ExponentSet pme_exponents(double alpha, int dim) {
  if (dim < 1 || dim > 3) raise(Errc::domain_error, "pme_exponents: dim must be 1, 2 or 3");
  const double m_c = critical_fast_exponent(dim);
  if (!(alpha > m_c))
    raise(Errc::extinction_regime, "pme_exponents: alpha is at or below the extinction cutoff");
  ExponentSet e;
  e.alpha = alpha;
  e.dim = dim;
  e.m_c = m_c;
  const double d = dim * (alpha - 1.0) + 2.0;
  e.gamma1 = dim / d;
  e.beta_space = 1.0 / d;
  e.sigma_mass = 2.0 / d;
  return e;
}

SimilarityExponents similarity_exponents(double theta, double gamma) {
  if (theta == gamma)
    raise(Errc::no_scaling_invariance, "similarity_exponents: theta == gamma leaves no scaling");
  SimilarityExponents s;
  s.e_rho = -1.0 / (theta - gamma) + 0.0;
  s.e_u = (1.0 - gamma) / (2.0 * (theta - gamma)) + 0.0;
  s.e_x = (2.0 * theta - gamma - 1.0) / (2.0 * (theta - gamma)) + 0.0;
  return s;
}

BarenblattSolution BarenblattSolution::from_profile_constant(double C, double alpha, int dim,
                                                             double mu_c) {
  if (!(mu_c > 0.0)) raise(Errc::domain_error, "barenblatt: mu_c must be positive");
  if (!(C > 0.0)) raise(Errc::domain_error, "barenblatt: profile constant must be positive");
  if (alpha == 1.0) raise(Errc::domain_error, "barenblatt: heat regime has no profile constant");
  BarenblattSolution sol;
  sol.exps_ = pme_exponents(alpha, dim);  // rejects the extinction regime
  sol.alpha_ = alpha;
  sol.dim_ = dim;
  sol.mu_c_ = mu_c;
  sol.C_ = C;
  sol.regime_ = alpha > 1.0 ? Regime::Porous : Regime::Fast;
  sol.k_ = (alpha - 1.0) * sol.exps_.gamma1 / (2.0 * alpha * dim);
  sol.mass_ = profile_mass(C, sol.k_, alpha, dim);
  return sol;
}

BarenblattSolution BarenblattSolution::from_mass(double mass, double alpha, int dim, double mu_c) {
  if (!(mass > 0.0)) raise(Errc::domain_error, "barenblatt: mass must be positive");
  if (!(mu_c > 0.0)) raise(Errc::domain_error, "barenblatt: mu_c must be positive");
  if (alpha == 1.0) {
    BarenblattSolution sol;
    sol.exps_ = pme_exponents(alpha, dim);
    sol.alpha_ = alpha;
    sol.dim_ = dim;
    sol.mu_c_ = mu_c;
    sol.regime_ = Regime::Heat;
    sol.C_ = 0.0;
    sol.k_ = 0.0;
    sol.mass_ = mass;
    return sol;
  }
  // m(C) is monotone (increasing in the porous regime, decreasing in the fast
  // regime); bracket and bisect on the profile constant.
  const auto exps = pme_exponents(alpha, dim);
  const double k = (alpha - 1.0) * exps.gamma1 / (2.0 * alpha * dim);
  auto mass_of = [&](double C) { return profile_mass(C, k, alpha, dim); };
  double lo = 1.0, hi = 1.0;
  const bool increasing = alpha > 1.0;
  for (int it = 0; it < 400 && (increasing ? mass_of(lo) : mass_of(hi)) > mass; ++it)
    (increasing ? lo : hi) *= 0.25;
  for (int it = 0; it < 400 && (increasing ? mass_of(hi) : mass_of(lo)) < mass; ++it)
    (increasing ? hi : lo) *= 4.0;
  const double C = bisect([&](double c) { return mass_of(c) - mass; }, lo, hi, 1e-10);
  auto sol = from_profile_constant(C, alpha, dim, mu_c);
  sol.mass_ = mass;  // what the caller asked for; quadrature noise stays in C
  return sol;
}

double BarenblattSolution::profile(double xi) const {
  if (regime_ == Regime::Heat) raise(Errc::domain_error, "profile: heat regime has no profile");
  const double q = C_ - k_ * xi * xi;
  if (q <= 0.0) return 0.0;  // porous support edge; never hit in the fast regime
  return std::pow(q, 1.0 / (alpha_ - 1.0));
}

double BarenblattSolution::profile_derivative(double xi) const {
  if (regime_ == Regime::Heat) raise(Errc::domain_error, "profile: heat regime has no profile");
  const double q = C_ - k_ * xi * xi;
  if (q <= 0.0) return 0.0;
  return -2.0 * k_ * xi / (alpha_ - 1.0) * std::pow(q, 1.0 / (alpha_ - 1.0) - 1.0);
}

double BarenblattSolution::eval_radial(double t, double r) const {
  if (!(t > 0.0)) raise(Errc::domain_error, "barenblatt: time must be positive");
  const double s = 2.0 * mu_c_ * t;
  if (regime_ == Regime::Heat) {
    const double denom = 4.0 * s;
    return mass_ * std::pow(std::numbers::pi * denom, -0.5 * dim_) * std::exp(-r * r / denom);
  }
  const double sb = std::pow(s, -exps_.beta_space);
  return std::pow(s, -exps_.gamma1) * profile(r * sb);
}

double BarenblattSolution::eval(double t, double x, double y) const {
  return eval_radial(t, std::hypot(x, y));
}

double BarenblattSolution::time_derivative_radial(double t, double r) const {
  if (!(t > 0.0)) raise(Errc::domain_error, "barenblatt: time must be positive");
  const double s = 2.0 * mu_c_ * t;
  if (regime_ == Regime::Heat) {
    const double g = eval_radial(t, r);
    return 2.0 * mu_c_ * g * (-0.5 * dim_ / s + r * r / (4.0 * s * s));
  }
  const double eta = r * std::pow(s, -exps_.beta_space);
  const double ds = std::pow(s, -exps_.gamma1 - 1.0) *
                    (-exps_.gamma1 * profile(eta) - exps_.beta_space * eta * profile_derivative(eta));
  return 2.0 * mu_c_ * ds;
}

double BarenblattSolution::support_radius(double t) const {
  if (regime_ != Regime::Porous) return kInf;
  if (!(t > 0.0)) raise(Errc::domain_error, "barenblatt: time must be positive");
  const double s = 2.0 * mu_c_ * t;
  return std::sqrt(C_ / k_) * std::pow(s, exps_.beta_space);
}

Field BarenblattSolution::sample(const Grid& g, double t) const {
  if (g.dim() == dim_) {
    if (dim_ == 1) return sample1d(g, [&](double x) { return eval(t, x); }, t);
    return sample2d(g, [&](double x, double y) { return eval(t, x, y); }, t);
  }
  if (g.dim() == 1 && g.lo(0) > 0.0)
    return sample1d(g, [&](double r) { return eval_radial(t, r); }, t);
  raise(Errc::domain_error, "barenblatt sample: grid dim mismatch");
}

ExtinctionSolution::ExtinctionSolution(double alpha, int dim, double extinction_time,
                                       double c_alpha)
    : alpha_(alpha), dim_(dim), T_(extinction_time), c_(c_alpha) {
  if (dim < 3) raise(Errc::domain_error, "extinction solution: needs dim >= 3");
  if (!(alpha > 0.0 && alpha < critical_fast_exponent(dim)))
    raise(Errc::domain_error, "extinction solution: alpha must lie in (0, (dim-2)/dim)");
  if (!(T_ > 0.0)) raise(Errc::domain_error, "extinction solution: T must be positive");
  if (!(c_ > 0.0)) raise(Errc::domain_error, "extinction solution: c_alpha must be positive");
}

double ExtinctionSolution::separable_constant(double alpha, int dim) {
  return std::pow(2.0 * (dim - 2.0 / (1.0 - alpha)), 1.0 / (1.0 - alpha));
}

double ExtinctionSolution::calibrated_constant(double alpha, int dim, double mu_c) {
  return std::pow(4.0 * mu_c * alpha * (dim - 2.0 / (1.0 - alpha)), 1.0 / (1.0 - alpha));
}

double ExtinctionSolution::eval_radial(double t, double r) const {
  if (t >= T_) return 0.0;
  if (!(r > 0.0)) raise(Errc::domain_error, "extinction solution: r must be positive");
  return c_ * std::pow((T_ - t) / (r * r), 1.0 / (1.0 - alpha_));
}

double ExtinctionSolution::time_derivative_radial(double t, double r) const {
  if (t >= T_) return 0.0;
  if (!(r > 0.0)) raise(Errc::domain_error, "extinction solution: r must be positive");
  const double p = 1.0 / (1.0 - alpha_);
  return -c_ * p * std::pow(T_ - t, p - 1.0) * std::pow(r, -2.0 * p);
}

Field ExtinctionSolution::sample(const Grid& g, double t) const {
  if (g.dim() != 1 || !(g.lo(0) > 0.0))
    raise(Errc::domain_error, "extinction sample: needs a 1D grid over positive radii");
  return sample1d(g, [&](double r) { return eval_radial(t, r); }, t);
}

namespace {

// Discrete Laplacian of the cell values w, either the plain flux form (grid
// dim == solution dim) or the radial operator
//   (1/r^(N-1)) d/dr (r^(N-1) dw/dr)
// when a 1D grid carries a radial slice of an N-dimensional solution.
std::vector<double> laplacian_for(const std::vector<double>& w, const Grid& g, int sol_dim) {
  if (g.dim() == sol_dim) return flux_laplacian_values(w, g);
  if (g.dim() != 1) raise(Errc::domain_error, "residual: grid/solution dim mismatch");
  const int n = g.n(0);
  const double dx = g.dx(0);
  std::vector<double> out(n, 0.0);
  for (int i = 0; i < n; ++i) {
    const int ip = std::min(i + 1, n - 1);
    const int im = std::max(i - 1, 0);
    const double r = g.center(0, i);
    const double rp = std::pow(r + 0.5 * dx, sol_dim - 1.0);
    const double rm = std::pow(r - 0.5 * dx, sol_dim - 1.0);
    out[i] = (rp * (w[ip] - w[i]) - rm * (w[i] - w[im])) / (std::pow(r, sol_dim - 1.0) * dx * dx);
  }
  return out;
}

template <class Sol>
Field residual_impl(const Sol& sol, const ViscosityLaw& law, double t, const Grid& g) {
  Field rho = sol.sample(g, t);
  std::vector<double> w(rho.v.size());
  for (std::size_t c = 0; c < w.size(); ++c) w[c] = law.mu(rho.v[c]);
  const std::vector<double> lap = laplacian_for(w, g, sol.dim());
  Field res(g, 0.0, t);
  if (g.dim() == 1) {
    for (int i = 0; i < g.n(0); ++i)
      res.v[i] = sol.time_derivative_radial(t, g.dim() == sol.dim() ? std::abs(g.center(0, i))
                                                                    : g.center(0, i)) -
                 2.0 * lap[i];
  } else {
    for (int i = 0; i < g.n(0); ++i)
      for (int j = 0; j < g.n(1); ++j)
        res.v[g.index(i, j)] =
            sol.time_derivative_radial(t, std::hypot(g.center(0, i), g.center(1, j))) -
            2.0 * lap[g.index(i, j)];
  }
  return res;
}

}  // namespace

Field pme_residual(const BarenblattSolution& sol, const ViscosityLaw& law, double t,
                   const Grid& g) {
  return residual_impl(sol, law, t, g);
}

Field pme_residual(const ExtinctionSolution& sol, const ViscosityLaw& law, double t,
                   const Grid& g) {
  if (t >= sol.extinction_time())
    raise(Errc::domain_error, "pme_residual: past the extinction time");
  return residual_impl(sol, law, t, g);
}

Field profile_residual(const BarenblattSolution& sol, const Grid& g) {
  if (sol.regime() == Regime::Heat)
    raise(Errc::domain_error, "profile_residual: heat regime unsupported");
  const double alpha = sol.alpha();
  auto F = [&](double r) { return sol.profile(r); };

  Field prof(g);
  if (g.dim() == sol.dim()) {
    prof = g.dim() == 1 ? sample1d(g, [&](double x) { return F(std::abs(x)); })
                        : sample2d(g, [&](double x, double y) { return F(std::hypot(x, y)); });
  } else if (g.dim() == 1 && g.lo(0) > 0.0) {
    prof = sample1d(g, F);
  } else {
    raise(Errc::domain_error, "profile_residual: grid dim mismatch");
  }

  std::vector<double> fa(prof.v.size());
  for (std::size_t c = 0; c < fa.size(); ++c) fa[c] = std::pow(prof.v[c], alpha);
  const std::vector<double> lap = laplacian_for(fa, g, sol.dim());

  const VectorField grad = gradient(prof);
  const ExponentSet e = sol.exponents();
  Field res(g);
  if (g.dim() == 1) {
    for (int i = 0; i < g.n(0); ++i)
      res.v[i] = lap[i] + e.beta_space * g.center(0, i) * grad.comp[0][i] + e.gamma1 * prof.v[i];
  } else {
    for (int i = 0; i < g.n(0); ++i)
      for (int j = 0; j < g.n(1); ++j) {
        const std::size_t c = g.index(i, j);
        res.v[c] = lap[c] +
                   e.beta_space * (g.center(0, i) * grad.comp[0][c] + g.center(1, j) * grad.comp[1][c]) +
                   e.gamma1 * prof.v[c];
      }
  }
  return res;
}

}  // namespace qslab
