#include "qslab/diagnostics.hpp"

#include <algorithm>
#include <cmath>

namespace qslab {

LogLogFit loglog_fit(std::span<const double> t, std::span<const double> y,
                     double skip_fraction) {
  if (t.size() != y.size()) raise(Errc::domain_error, "loglog_fit: size mismatch");
  if (!(skip_fraction >= 0.0 && skip_fraction < 1.0))
    raise(Errc::domain_error, "loglog_fit: skip_fraction must be in [0, 1)");
  std::vector<double> lt, ly;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (!(t[i] > 0.0) || !(y[i] > 0.0)) continue;
    lt.push_back(std::log(t[i]));
    ly.push_back(std::log(y[i]));
  }
  if (lt.size() < 5) raise(Errc::domain_error, "loglog_fit: fewer than five usable points");
  const auto [lo_it, hi_it] = std::minmax_element(lt.begin(), lt.end());
  const double cutoff = *lo_it + skip_fraction * (*hi_it - *lo_it);

  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0, syy = 0.0;
  std::size_t n = 0;
  for (std::size_t i = 0; i < lt.size(); ++i) {
    if (lt[i] < cutoff) continue;
    sx += lt[i];
    sy += ly[i];
    sxx += lt[i] * lt[i];
    sxy += lt[i] * ly[i];
    syy += ly[i] * ly[i];
    ++n;
  }
  if (n < 5) raise(Errc::domain_error, "loglog_fit: fewer than five points after the skip window");
  const double nn = static_cast<double>(n);
  const double det = nn * sxx - sx * sx;
  if (!(std::abs(det) > 0.0)) raise(Errc::domain_error, "loglog_fit: degenerate time samples");

  LogLogFit out;
  out.slope = (nn * sxy - sx * sy) / det;
  out.intercept = (sy - out.slope * sx) / nn;
  out.points_used = n;
  const double ss_tot = syy - sy * sy / nn;
  const double ss_res = ss_tot - out.slope * (sxy - sx * sy / nn);
  out.r2 = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 1.0;
  return out;
}

DecayFit decay_fit(std::span<const double> t, std::span<const double> norm,
                   double theory_slope) {
  DecayFit out;
  out.fit = loglog_fit(t, norm);
  out.theory = theory_slope;
  out.gap = out.fit.slope - theory_slope;
  return out;
}

BarenblattDistance barenblatt_distance(const Field& rho, const BarenblattSolution& sol) {
  const Field ref = sol.sample(rho.grid, rho.time);
  Field diff(rho.grid, 0.0, rho.time);
  for (std::size_t c = 0; c < rho.v.size(); ++c) diff.v[c] = rho.v[c] - ref.v[c];
  BarenblattDistance d;
  d.l1 = lp_norm(diff, 1.0);
  const double linf = lp_norm(diff, std::numeric_limits<double>::infinity());
  d.scaled_linf = std::pow(rho.time, sol.exponents().gamma1) * linf;
  return d;
}

EntropyReport entropy_report(const Field& rho, const VectorField& u, const ViscosityLaw& law,
                             double eps, double a, double gamma) {
  const Grid& grid = rho.grid;
  if (law.dim() != grid.dim())
    raise(Errc::domain_error, "entropy_report: law dim must match the grid dim");
  if (!(gamma > 1.0)) raise(Errc::domain_error, "entropy_report: gamma must exceed 1");
  if (!(eps >= 0.0) || !(a > 0.0)) raise(Errc::domain_error, "entropy_report: bad pressure");
  const int dim = grid.dim();
  const double cut = law.vacuum_threshold();
  const double pcoef = eps * a / (gamma - 1.0);

  const VectorField grad = gradient(rho);
  double e = 0.0, b = 0.0, m = 0.0;
  for (std::size_t c = 0; c < rho.v.size(); ++c) {
    const double r = rho.v[c];
    double u2 = 0.0, w2 = 0.0;
    const double pp = r > cut ? law.phi_prime(r) : 0.0;
    for (int ax = 0; ax < dim; ++ax) {
      const double uc = u.comp[ax][c];
      const double wc = uc + pp * grad.comp[ax][c];
      u2 += uc * uc;
      w2 += wc * wc;
    }
    const double press = pcoef * std::pow(r, gamma);
    e += 0.5 * r * u2 + press;
    b += 0.5 * r * w2 + press;
    m += r * 0.5 * (1.0 + u2) * std::log1p(u2);
  }

  // Face sum of (increment of rho^gamma)(increment of phi) / dx^2.
  double cross = 0.0;
  auto face = [&](double ra, double rb, double dx) {
    if (!(ra > cut) || !(rb > cut)) return;
    cross += (std::pow(rb, gamma) - std::pow(ra, gamma)) * (law.phi(rb) - law.phi(ra)) / (dx * dx);
  };
  const Boundary bc = grid.boundary();
  const int nx = grid.n(0);
  if (dim == 1) {
    for (int i = 0; i + 1 < nx; ++i) face(rho.v[i], rho.v[i + 1], grid.dx(0));
    if (bc == Boundary::Periodic) face(rho.v[nx - 1], rho.v[0], grid.dx(0));
  } else {
    const int ny = grid.n(1);
    for (int j = 0; j < ny; ++j) {
      for (int i = 0; i + 1 < nx; ++i) face(rho(i, j), rho(i + 1, j), grid.dx(0));
      if (bc == Boundary::Periodic) face(rho(nx - 1, j), rho(0, j), grid.dx(0));
    }
    for (int i = 0; i < nx; ++i) {
      for (int j = 0; j + 1 < ny; ++j) face(rho(i, j), rho(i, j + 1), grid.dx(1));
      if (bc == Boundary::Periodic) face(rho(i, ny - 1), rho(i, 0), grid.dx(1));
    }
  }

  EntropyReport rep;
  const double vol = grid.cell_volume();
  rep.energy = vol * e;
  rep.bd = vol * b;
  rep.mv = vol * m;
  rep.pressure_cross = eps * a * vol * cross;
  return rep;
}

AbReport aronson_benilan_monitor(const std::vector<pme::Snapshot>& snaps,
                                 const ViscosityLaw& law) {
  if (law.kind() != LawKind::PowerLaw || !(law.alpha() > 1.0))
    raise(Errc::domain_error, "aronson_benilan_monitor: needs a power law with alpha > 1");
  if (snaps.size() < 3) raise(Errc::domain_error, "aronson_benilan_monitor: needs 3+ snapshots");
  const double h = snaps[1].t - snaps[0].t;
  if (!(h > 0.0)) raise(Errc::domain_error, "aronson_benilan_monitor: times must increase");
  for (std::size_t k = 1; k + 1 < snaps.size(); ++k) {
    const double h2 = snaps[k + 1].t - snaps[k].t;
    if (std::abs(h2 - h) > 1e-9 * h)
      raise(Errc::domain_error, "aronson_benilan_monitor: snapshots must be uniformly spaced");
    if (!(snaps[k].rho.grid == snaps[0].rho.grid))
      raise(Errc::domain_error, "aronson_benilan_monitor: snapshots on different grids");
  }

  const double am1 = law.alpha() - 1.0;
  AbReport rep;
  for (std::size_t k = 1; k + 1 < snaps.size(); ++k) {
    const double t = snaps[k].t;
    if (!(t > 0.0)) continue;
    const Field& prev = snaps[k - 1].rho;
    const Field& next = snaps[k + 1].rho;
    const Field& mid = snaps[k].rho;
    double l1 = 0.0;
    for (std::size_t c = 0; c < mid.v.size(); ++c) {
      const double dt_rho = (next.v[c] - prev.v[c]) / (2.0 * h);
      const double bound = mid.v[c] / (am1 * t);
      rep.worst_violation = std::max(rep.worst_violation, -dt_rho - bound);
      l1 += std::abs(dt_rho);
    }
    const double mass = integrate(mid);
    if (mass > 0.0) {
      const double ratio = l1 * mid.grid.cell_volume() * am1 * t / (2.0 * mass);
      rep.l1_ratio = std::max(rep.l1_ratio, ratio);
    }
    ++rep.times_used;
  }
  if (rep.times_used == 0)
    raise(Errc::domain_error, "aronson_benilan_monitor: no interior snapshot with t > 0");
  return rep;
}

}  // namespace qslab
