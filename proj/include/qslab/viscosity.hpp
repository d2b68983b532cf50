#pragma once

#include <functional>
#include <span>
#include <vector>

#include "qslab/error.hpp"

namespace qslab {

enum class LawKind { PowerLaw, GeneralMonotone };

struct LawValues {
  double mu, lambda, mu_prime, phi, f, psi;
};

// Density-dependent shear viscosity mu(rho) with the bulk viscosity tied to it
// by lambda(rho) = 2 rho mu'(rho) - 2 mu(rho).  Derived scalar functions:
//   phi'(rho) = 2 mu'(rho) / rho      (velocity potential of quasi-solutions)
//   f'(rho)   = sqrt(rho) phi'(rho)
//   psi(rho)  = primitive of mu with psi(0) = 0
// Power laws mu = mu_c rho^alpha use closed forms; general monotone laws
// integrate numerically from a base point.
class ViscosityLaw {
public:
  using Fn = std::function<double(double)>;

  // The power law mu = rho^2 in one dimension.
  ViscosityLaw() = default;

  // Requires alpha > 1 - 1/dim so that 2 mu + dim * lambda stays positive.
  static ViscosityLaw power_law(double mu_c, double alpha, int dim);

  // Same law without the positivity requirement on the Lame combination.
  // For analytic diagnostics in regimes the solvers reject.
  static ViscosityLaw power_law_unchecked(double mu_c, double alpha, int dim);

  // nu1, nu2 are the claimed two-sided bounds on (2 mu + dim lambda) / mu.
  // lambda_override replaces the derived lambda (used to probe violations).
  static ViscosityLaw general_monotone(Fn mu, Fn mu_prime, int dim, double nu1, double nu2,
                                       double base_point = 1.0, Fn lambda_override = nullptr);

  LawKind kind() const { return kind_; }
  int dim() const { return dim_; }
  double mu_c() const;
  double alpha() const;
  double nu1() const { return nu1_; }
  double nu2() const { return nu2_; }
  bool has_lambda_override() const { return static_cast<bool>(lambda_fn_); }

  // phi (and f for alpha <= 1/2) are singular at vacuum; evaluation below this
  // threshold raises VacuumSingular.
  double vacuum_threshold() const { return vacuum_threshold_; }
  void set_vacuum_threshold(double t) { vacuum_threshold_ = t; }

  double mu(double rho) const;
  double mu_prime(double rho) const;
  double lambda(double rho) const;
  double lambda_prime(double rho) const;
  // 2 mu(rho) + lambda(rho): the coefficient of du/dx in the 1D momentum flux.
  double lame_1d(double rho) const { return 2.0 * mu(rho) + lambda(rho); }
  double phi(double rho) const;
  double phi_prime(double rho) const;
  double f(double rho) const;
  double psi(double rho) const;
  LawValues eval(double rho) const;

private:
  LawKind kind_ = LawKind::PowerLaw;
  int dim_ = 1;
  double mu_c_ = 1.0;
  double alpha_ = 2.0;
  double nu1_ = 4.0;
  double nu2_ = 4.0;
  double base_point_ = 1.0;
  double vacuum_threshold_ = 1e-10;
  Fn mu_fn_, mu_prime_fn_, lambda_fn_;
};

// Sampled verdicts on the structural conditions a usable law must satisfy:
// the lambda relation, two-sided bounds on (2 mu + N lambda)/mu, the slope
// bound |lambda'| <= mu'/nu1 for some admissible nu1 > 0, and the power-type
// growth envelopes mu ~ rho^(1 - 1/N + nu/(2N)).
struct ConditionReport {
  std::vector<double> samples;
  std::vector<bool> bd_ok;           // lambda == 2 rho mu' - 2 mu
  std::vector<bool> lame_lower_ok;   // nu1 mu <= 2 mu + N lambda   (stored nu1)
  std::vector<bool> lame_upper_ok;   // 2 mu + N lambda <= nu2 mu   (stored nu2)
  std::vector<bool> slope_ok;        // |lambda'| <= mu' / nu1_admissible
  double nu1_admissible = 0.0;       // largest nu1 > 0 compatible with both lines
  double nu2_admissible = 0.0;       // smallest upper constant seen on the samples
  // Best-fit constants for mu(rho) vs rho^(1-1/N+nu/(2N)), split at rho = 1.
  double growth_c_lower_above = 0.0, growth_c_upper_above = 0.0;
  double growth_c_lower_below = 0.0, growth_c_upper_below = 0.0;
  bool growth_ok = false;
  bool monotone_ok = false;      // mu' > 0 on samples (general laws)
  bool linear_growth_ok = false; // mu(s)/s bounded away from 0 at the largest sample
  bool pass = false;
};

ConditionReport check_conditions(const ViscosityLaw& law, std::span<const double> rho_samples);

}  // namespace qslab
