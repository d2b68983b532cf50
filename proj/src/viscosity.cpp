#include "qslab/viscosity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qslab/quad.hpp"

namespace qslab {

namespace {

constexpr double kQuadTol = 1e-10;

void validate_common(double mu_c, double alpha, int dim) {
  if (!(mu_c > 0.0)) raise(Errc::domain_error, "power law: mu_c must be positive");
  if (!(alpha > 0.0)) raise(Errc::domain_error, "power law: alpha must be positive");
  if (dim < 1 || dim > 3) raise(Errc::domain_error, "power law: dim must be 1, 2 or 3");
}

inline double pow_fast(double rho, double e) {
  if (e == 1.0) return rho;
  if (e == 2.0) return rho * rho;
  if (e == 0.0) return 1.0;
  return std::pow(rho, e);
}

}  // namespace

ViscosityLaw ViscosityLaw::power_law(double mu_c, double alpha, int dim) {
  validate_common(mu_c, alpha, dim);
  if (!(alpha > 1.0 - 1.0 / dim))
    raise(Errc::degenerate_lame, "power law: 2 mu + dim lambda degenerates for alpha <= 1 - 1/dim");
  return power_law_unchecked(mu_c, alpha, dim);
}

ViscosityLaw ViscosityLaw::power_law_unchecked(double mu_c, double alpha, int dim) {
  validate_common(mu_c, alpha, dim);
  ViscosityLaw law;
  law.kind_ = LawKind::PowerLaw;
  law.dim_ = dim;
  law.mu_c_ = mu_c;
  law.alpha_ = alpha;
  law.nu1_ = law.nu2_ = 2.0 * (1.0 + dim * (alpha - 1.0));
  return law;
}

ViscosityLaw ViscosityLaw::general_monotone(Fn mu, Fn mu_prime, int dim, double nu1, double nu2,
                                            double base_point, Fn lambda_override) {
  if (!mu || !mu_prime) raise(Errc::domain_error, "general law: mu and mu' are required");
  if (dim < 1 || dim > 3) raise(Errc::domain_error, "general law: dim must be 1, 2 or 3");
  if (!(nu1 > 0.0) || !(nu2 >= nu1)) raise(Errc::domain_error, "general law: need 0 < nu1 <= nu2");
  if (!(base_point > 0.0)) raise(Errc::domain_error, "general law: base point must be positive");
  ViscosityLaw law;
  law.kind_ = LawKind::GeneralMonotone;
  law.dim_ = dim;
  law.nu1_ = nu1;
  law.nu2_ = nu2;
  law.base_point_ = base_point;
  law.mu_fn_ = std::move(mu);
  law.mu_prime_fn_ = std::move(mu_prime);
  law.lambda_fn_ = std::move(lambda_override);
  return law;
}

double ViscosityLaw::mu_c() const {
  if (kind_ != LawKind::PowerLaw) raise(Errc::domain_error, "mu_c: not a power law");
  return mu_c_;
}

double ViscosityLaw::alpha() const {
  if (kind_ != LawKind::PowerLaw) raise(Errc::domain_error, "alpha: not a power law");
  return alpha_;
}

double ViscosityLaw::mu(double rho) const {
  if (kind_ == LawKind::PowerLaw) return mu_c_ * pow_fast(rho, alpha_);
  return mu_fn_(rho);
}

double ViscosityLaw::mu_prime(double rho) const {
  if (kind_ == LawKind::PowerLaw) return mu_c_ * alpha_ * pow_fast(rho, alpha_ - 1.0);
  return mu_prime_fn_(rho);
}

double ViscosityLaw::lambda(double rho) const {
  if (lambda_fn_) return lambda_fn_(rho);
  if (kind_ == LawKind::PowerLaw) return 2.0 * (alpha_ - 1.0) * mu(rho);
  return 2.0 * rho * mu_prime_fn_(rho) - 2.0 * mu_fn_(rho);
}

double ViscosityLaw::lambda_prime(double rho) const {
  if (kind_ == LawKind::PowerLaw && !lambda_fn_) return 2.0 * (alpha_ - 1.0) * mu_prime(rho);
  const double h = 1e-6 * std::max(std::abs(rho), 1.0);
  const double lo = std::max(rho - h, 0.0);
  return (lambda(rho + h) - lambda(lo)) / (rho + h - lo);
}

double ViscosityLaw::phi(double rho) const {
  if (kind_ == LawKind::PowerLaw) {
    if (alpha_ <= 1.0 && rho < vacuum_threshold_)
      raise(Errc::vacuum_singular, "phi: singular at vacuum for alpha <= 1");
    if (alpha_ == 1.0) return 2.0 * mu_c_ * std::log(rho);
    return 2.0 * mu_c_ * alpha_ / (alpha_ - 1.0) * pow_fast(rho, alpha_ - 1.0);
  }
  if (rho < vacuum_threshold_) raise(Errc::vacuum_singular, "phi: below vacuum threshold");
  return adaptive_simpson([this](double s) { return 2.0 * mu_prime_fn_(s) / s; },
                          base_point_, rho, kQuadTol);
}

double ViscosityLaw::phi_prime(double rho) const { return 2.0 * mu_prime(rho) / rho; }

double ViscosityLaw::f(double rho) const {
  if (kind_ == LawKind::PowerLaw) {
    if (alpha_ <= 0.5 && rho < vacuum_threshold_)
      raise(Errc::vacuum_singular, "f: singular at vacuum for alpha <= 1/2");
    if (alpha_ == 0.5) return mu_c_ * std::log(rho);
    return 2.0 * mu_c_ * alpha_ / (alpha_ - 0.5) * pow_fast(rho, alpha_ - 0.5);
  }
  if (rho < vacuum_threshold_) raise(Errc::vacuum_singular, "f: below vacuum threshold");
  return adaptive_simpson([this](double s) { return 2.0 * mu_prime_fn_(s) / std::sqrt(s); },
                          base_point_, rho, kQuadTol);
}

double ViscosityLaw::psi(double rho) const {
  if (kind_ == LawKind::PowerLaw) return mu_c_ * pow_fast(rho, alpha_ + 1.0) / (alpha_ + 1.0);
  return adaptive_simpson([this](double s) { return mu_fn_(s); }, 0.0, rho, kQuadTol);
}

LawValues ViscosityLaw::eval(double rho) const {
  return {mu(rho), lambda(rho), mu_prime(rho), phi(rho), f(rho), psi(rho)};
}

ConditionReport check_conditions(const ViscosityLaw& law, std::span<const double> rho_samples) {
  if (rho_samples.empty()) raise(Errc::domain_error, "check_conditions: no samples");
  const double N = law.dim();
  const double rel = 1e-12;
  ConditionReport rep;
  rep.samples.assign(rho_samples.begin(), rho_samples.end());

  double nu1_mid = std::numeric_limits<double>::infinity();
  double nu2_mid = 0.0;
  double nu1_slope = std::numeric_limits<double>::infinity();
  bool all_bd = true, all_lower = true, all_upper = true;
  bool monotone = true;

  for (double rho : rep.samples) {
    if (!(rho > 0.0)) raise(Errc::domain_error, "check_conditions: samples must be positive");
    const double m = law.mu(rho);
    const double mp = law.mu_prime(rho);
    const double lam = law.lambda(rho);
    const double lamp = law.lambda_prime(rho);
    const double bd = 2.0 * rho * mp - 2.0 * m;

    const bool bd_ok = std::abs(lam - bd) <= rel * std::max(1.0, std::abs(bd));
    rep.bd_ok.push_back(bd_ok);
    all_bd = all_bd && bd_ok;

    const double mid = 2.0 * m + N * lam;
    const bool lo_ok = law.nu1() * m <= mid * (1.0 + rel) + rel;
    const bool hi_ok = mid <= law.nu2() * m * (1.0 + rel) + rel;
    rep.lame_lower_ok.push_back(lo_ok);
    rep.lame_upper_ok.push_back(hi_ok);
    all_lower = all_lower && lo_ok;
    all_upper = all_upper && hi_ok;

    if (m > 0.0) {
      nu1_mid = std::min(nu1_mid, mid / m);
      nu2_mid = std::max(nu2_mid, mid / m);
    }
    if (std::abs(lamp) > 0.0) nu1_slope = std::min(nu1_slope, mp / std::abs(lamp));
    monotone = monotone && mp > 0.0;
  }

  rep.nu1_admissible = std::min(nu1_mid, nu1_slope);
  rep.nu2_admissible = nu2_mid;
  const bool constants_exist =
      rep.nu1_admissible > 0.0 && std::isfinite(rep.nu2_admissible) && rep.nu2_admissible > 0.0;
  for (double rho : rep.samples) {
    const bool ok = constants_exist &&
                    std::abs(law.lambda_prime(rho)) * rep.nu1_admissible <=
                        law.mu_prime(rho) * (1.0 + rel) + rel;
    rep.slope_ok.push_back(ok);
  }

  // Growth envelopes: exponent 1 - 1/N + nu/(2N) with the stored nu on each side.
  const double e1 = 1.0 - 1.0 / N + law.nu1() / (2.0 * N);
  const double e2 = 1.0 - 1.0 / N + law.nu2() / (2.0 * N);
  double clo_hi = std::numeric_limits<double>::infinity(), cup_hi = 0.0;
  double clo_lo = std::numeric_limits<double>::infinity(), cup_lo = 0.0;
  bool seen_hi = false, seen_lo = false;
  for (double rho : rep.samples) {
    const double m = law.mu(rho);
    if (rho > 1.0) {
      seen_hi = true;
      clo_hi = std::min(clo_hi, m / std::pow(rho, e1));
      cup_hi = std::max(cup_hi, m / std::pow(rho, e2));
    } else {
      seen_lo = true;
      clo_lo = std::min(clo_lo, m / std::pow(rho, e2));
      cup_lo = std::max(cup_lo, m / std::pow(rho, e1));
    }
  }
  const double nan = std::numeric_limits<double>::quiet_NaN();
  rep.growth_c_lower_above = seen_hi ? clo_hi : nan;
  rep.growth_c_upper_above = seen_hi ? cup_hi : nan;
  rep.growth_c_lower_below = seen_lo ? clo_lo : nan;
  rep.growth_c_upper_below = seen_lo ? cup_lo : nan;
  auto group_ok = [](bool seen, double lo, double up) {
    return !seen || (lo > 0.0 && std::isfinite(lo) && up > 0.0 && std::isfinite(up));
  };
  rep.growth_ok = group_ok(seen_hi, clo_hi, cup_hi) && group_ok(seen_lo, clo_lo, cup_lo);

  if (law.kind() == LawKind::GeneralMonotone) {
    rep.monotone_ok = monotone;
    double smax = 0.0;
    for (double rho : rep.samples) smax = std::max(smax, rho);
    rep.linear_growth_ok = law.mu(smax) / smax >= 1e-12;
  } else {
    rep.monotone_ok = true;
    rep.linear_growth_ok = true;
  }

  rep.pass = all_bd && all_lower && all_upper && constants_exist && rep.growth_ok &&
             rep.monotone_ok && rep.linear_growth_ok;
  return rep;
}

}  // namespace qslab
