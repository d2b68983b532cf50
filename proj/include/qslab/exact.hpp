#pragma once

#include "qslab/field.hpp"
#include "qslab/ops.hpp"
#include "qslab/viscosity.hpp"

namespace qslab {

// Fast-diffusion cutoff: below alpha = max(0, (N-2)/N) solutions can vanish in
// finite time and the self-similar spreading theory does not apply.
double critical_fast_exponent(int dim);

// Decay/spreading exponents of d/dt rho = 2 lap mu(rho) with mu = mu_c rho^alpha:
//   gamma1     L-infinity decay rate, t^(-gamma1)
//   beta_space support/spreading rate, t^beta
//   sigma_mass exponent of ||rho0||_1 in the L1 -> L-infinity bound
// time_exp(p)/mass_exp(p) give the L1 -> Lp smoothing rates; the p -> 1 limit
// of time_exp is 0 (mass is conserved) and the p -> infinity limits recover
// gamma1 and sigma_mass.
struct ExponentSet {
  double alpha = 2.0;
  int dim = 1;
  double gamma1 = 0.0;
  double beta_space = 0.0;
  double sigma_mass = 0.0;
  double m_c = 0.0;

  double time_exp(double p) const;
  double mass_exp(double p) const;
};

ExponentSet pme_exponents(double alpha, int dim);

// Scaling exponents (e_rho, e_u, e_x) under which
//   rho -> l^(2 e_rho) rho(l^2 t, l^(2 e_x) x),  u -> l^(2 e_u) u(...)
// maps solutions of the pressureless system with mu(rho) = mu rho^theta and
// pressure exponent gamma to solutions. Requires theta != gamma.
struct SimilarityExponents {
  double e_rho = 0.0, e_u = 0.0, e_x = 0.0;
};

SimilarityExponents similarity_exponents(double theta, double gamma);

enum class Regime { Porous, Fast, Heat };

// Source-type self-similar solution of d/dt rho = 2 lap mu(rho):
//   rho(t, x) = s^(-gamma1) F(|x| s^(-beta)),  s = 2 mu_c t,
//   F(xi) = (C - k xi^2)_+^(1/(alpha-1)),      k = (alpha-1) gamma1 / (2 alpha N),
// compactly supported for alpha > 1, positive with algebraic tails for
// m_c < alpha < 1 (k < 0), and the Gaussian kernel at alpha = 1.
class BarenblattSolution {
public:
  static BarenblattSolution from_mass(double mass, double alpha, int dim, double mu_c);
  static BarenblattSolution from_profile_constant(double C, double alpha, int dim, double mu_c);

  Regime regime() const { return regime_; }
  double alpha() const { return alpha_; }
  int dim() const { return dim_; }
  double mu_c() const { return mu_c_; }
  double mass() const { return mass_; }
  double profile_constant() const { return C_; }
  double profile_k() const { return k_; }
  ExponentSet exponents() const { return exps_; }

  double eval_radial(double t, double r) const;
  double eval(double t, double x) const { return eval_radial(t, std::abs(x)); }
  double eval(double t, double x, double y) const;
  double time_derivative_radial(double t, double r) const;

  // Porous regime only; Fast and Heat spread instantly over the whole space.
  double support_radius(double t) const;

  // Self-similar profile F and its derivative, for the profile equation check.
  double profile(double xi) const;
  double profile_derivative(double xi) const;

  // Cellwise samples at time t. The grid dimension must match, except that a
  // 1D grid over positive coordinates samples the radial slice of any dim.
  Field sample(const Grid& g, double t) const;

private:
  BarenblattSolution() = default;

  Regime regime_ = Regime::Porous;
  double alpha_ = 2.0;
  int dim_ = 1;
  double mu_c_ = 0.5;
  double C_ = 1.0;
  double mass_ = 1.0;
  double k_ = 0.0;
  ExponentSet exps_;
};

// Separable radial solution vanishing at a finite time T:
//   rho(t, x) = c ((T - t) / |x|^2)^(1/(1-alpha)),  0 < alpha < m_c,  dim >= 3.
// The classical normalization c^(1-alpha) = 2(N - 2/(1-alpha)) solves
// d/dt rho = (1/alpha) lap rho^alpha; calibrated_constant rescales c so the
// same profile solves d/dt rho = 2 mu_c lap rho^alpha.
class ExtinctionSolution {
public:
  ExtinctionSolution(double alpha, int dim, double extinction_time, double c_alpha);

  static double separable_constant(double alpha, int dim);
  static double calibrated_constant(double alpha, int dim, double mu_c);

  double alpha() const { return alpha_; }
  int dim() const { return dim_; }
  double extinction_time() const { return T_; }
  double c_alpha() const { return c_; }

  double eval_radial(double t, double r) const;
  double time_derivative_radial(double t, double r) const;

  // 1D grid over positive coordinates, read as radius.
  Field sample(const Grid& g, double t) const;

private:
  double alpha_;
  int dim_;
  double T_;
  double c_;
};

// Pointwise residual of d/dt rho - 2 lap_h mu(rho) with the analytic time
// derivative and the discrete flux Laplacian (radial form when a 1D grid
// samples a higher-dimensional radial solution). Cells touching the grid
// boundary see ghost values and are not meaningful.
Field pme_residual(const BarenblattSolution& sol, const ViscosityLaw& law, double t, const Grid& g);
Field pme_residual(const ExtinctionSolution& sol, const ViscosityLaw& law, double t, const Grid& g);

// Residual of the similarity profile equation lap F^alpha + beta xi.grad F + gamma1 F = 0
// (the mu_c-free normalization). Heat regime unsupported.
Field profile_residual(const BarenblattSolution& sol, const Grid& g);

}  // namespace qslab
