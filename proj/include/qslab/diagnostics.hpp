#pragma once

#include <span>
#include <vector>

#include "qslab/exact.hpp"
#include "qslab/field.hpp"
#include "qslab/ops.hpp"
#include "qslab/pme.hpp"
#include "qslab/viscosity.hpp"

namespace qslab {

// Least squares of ln y against ln t. Points in the first skip_fraction of the
// ln t window are dropped (early transients), as are non-positive y. Requires
// at least five surviving points.
struct LogLogFit {
  double slope = 0.0;
  double intercept = 0.0;  // fitted ln y at ln t = 0
  double r2 = 0.0;
  std::size_t points_used = 0;
};

LogLogFit loglog_fit(std::span<const double> t, std::span<const double> y,
                     double skip_fraction = 0.2);

// Fit of an Lp norm decay against the self-similar rate. theory is the
// exponent the norm should follow, i.e. -time_exp(p) for density norms.
struct DecayFit {
  LogLogFit fit;
  double theory = 0.0;
  double gap = 0.0;  // fitted slope minus theory
};

DecayFit decay_fit(std::span<const double> t, std::span<const double> norm, double theory_slope);

// L1 distance to the matching self-similar solution on the field's grid, plus
// the sup distance scaled by the self-similar decay factor t^gamma1.
struct BarenblattDistance {
  double l1 = 0.0;
  double scaled_linf = 0.0;
};

BarenblattDistance barenblatt_distance(const Field& rho, const BarenblattSolution& sol);

// Integral entropies of a density/velocity pair under pressure eps * a * rho^gamma:
//   energy         : 1/2 rho |u|^2 + eps a/(gamma-1) rho^gamma
//   bd             : same with u replaced by u + grad phi(rho), the gradient
//                    realized as phi'(rho) times the centered density gradient
//   mv             : rho (1+|u|^2)/2 * ln(1+|u|^2)
//   pressure_cross : eps a * sum over faces of the product of face increments
//                    of rho^gamma and phi(rho); each face term is nonnegative
//                    because both maps are increasing. Faces touching vacuum
//                    cells are skipped.
struct EntropyReport {
  double energy = 0.0;
  double bd = 0.0;
  double mv = 0.0;
  double pressure_cross = 0.0;
};

EntropyReport entropy_report(const Field& rho, const VectorField& u, const ViscosityLaw& law,
                             double eps, double a, double gamma);

// Discrete check of the lower bound d/dt rho >= -rho / ((alpha-1) t) along a
// run, using centered time differences over uniformly spaced snapshots.
//   worst_violation : max over cells and interior times of the positive part
//                     of (-d/dt rho - rho/((alpha-1) t))
//   l1_ratio        : max over interior times of
//                     |d/dt rho|_L1 * (alpha-1) t / (2 * mass)
struct AbReport {
  double worst_violation = 0.0;
  double l1_ratio = 0.0;
  std::size_t times_used = 0;
};

AbReport aronson_benilan_monitor(const std::vector<pme::Snapshot>& snaps,
                                 const ViscosityLaw& law);

}  // namespace qslab
