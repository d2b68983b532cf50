#include "qslab/pme.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qslab/exact.hpp"
#include "qslab/ops.hpp"

namespace qslab::pme {

namespace {

constexpr double kDiffusivityFloor = 1e-30;

void validate_density(const Field& rho) {
  for (double v : rho.v)
    if (!(v >= 0.0)) raise(Errc::domain_error, "pme: density must be nonnegative and finite");
}

SeriesPoint series_point(const Field& f, double dt, double support_threshold) {
  SeriesPoint p;
  p.t = f.time;
  p.dt = dt;
  p.mass = integrate(f);
  p.l1 = lp_norm(f, 1.0);
  p.l2 = lp_norm(f, 2.0);
  p.linf = lp_norm(f, std::numeric_limits<double>::infinity());
  p.support_radius = support_radius(f, support_threshold);
  return p;
}

}  // namespace

double stable_dt(const Field& rho, const ViscosityLaw& law, double cfl) {
  if (!(cfl > 0.0 && cfl <= 1.0)) raise(Errc::domain_error, "stable_dt: cfl must be in (0, 1]");
  double dmax = kDiffusivityFloor;
  for (double v : rho.v) dmax = std::max(dmax, 2.0 * law.mu_prime(v));
  if (!std::isfinite(dmax))
    raise(Errc::stability_violation,
          "stable_dt: diffusivity unbounded at vacuum; run with a vacuum floor");
  const double dx = rho.grid.min_dx();
  return cfl * dx * dx / (4.0 * rho.grid.dim() * dmax);
}

Field step(const Field& rho, const ViscosityLaw& law, double dt, double vacuum_floor,
           StepStats* stats) {
  if (!(dt > 0.0) || !std::isfinite(dt)) raise(Errc::domain_error, "step: dt must be positive");
  if (dt > stable_dt(rho, law, 1.0) * (1.0 + 1e-9))
    raise(Errc::stability_violation, "step: dt exceeds the stability bound");

  std::vector<double> w(rho.v.size());
  for (std::size_t c = 0; c < w.size(); ++c) w[c] = law.mu(rho.v[c]);
  const std::vector<double> lap = flux_laplacian_values(w, rho.grid);

  Field out(rho.grid, 0.0, rho.time + dt);
  const double floor = std::max(vacuum_floor, 0.0);
  double sum = 0.0, min_pre = 0.0, lifted = 0.0;
  for (std::size_t c = 0; c < w.size(); ++c) {
    const double v = rho.v[c] + dt * 2.0 * lap[c];
    out.v[c] = v;
    sum += v;
    min_pre = std::min(min_pre, v);
    if (v < floor) lifted += floor - v;
  }
  if (!std::isfinite(sum)) raise(Errc::nan_abort, "step: non-finite density");

  if (lifted > 0.0) {
    double excess = 0.0;
    for (double v : out.v)
      if (v > floor) excess += v - floor;
    const double scale = excess > lifted ? (excess - lifted) / excess : 1.0;
    for (double& v : out.v) v = v < floor ? floor : floor + (v - floor) * scale;
  }
  if (stats) {
    stats->min_preclamp = min_pre;
    stats->clamped_mass = lifted * rho.grid.cell_volume();
  }
  return out;
}

Trajectory run(const Config& cfg, const Field& rho0) {
  if (!(rho0.grid == cfg.grid)) raise(Errc::domain_error, "run: field grid differs from config");
  if (cfg.law.dim() != cfg.grid.dim())
    raise(Errc::domain_error, "run: law dim must match the grid dim");
  if (cfg.law.kind() == LawKind::PowerLaw &&
      !(cfg.law.alpha() > critical_fast_exponent(cfg.law.dim())))
    raise(Errc::extinction_regime, "run: alpha at or below the extinction cutoff");
  validate_density(rho0);

  const double t0 = rho0.time;
  if (!(cfg.t_end >= t0)) raise(Errc::domain_error, "run: t_end before the initial time");
  const double tiny = 1e-14 * std::max(1.0, std::abs(cfg.t_end));
  std::vector<double> stops = cfg.snapshot_times;
  std::sort(stops.begin(), stops.end());
  for (double s : stops)
    if (s < t0 - tiny || s > cfg.t_end + tiny)
      raise(Errc::domain_error, "run: snapshot time outside [t0, t_end]");

  Trajectory traj;
  traj.initial_mass = integrate(rho0);
  const double linf0 = lp_norm(rho0, std::numeric_limits<double>::infinity());
  const double threshold = cfg.support_threshold_rel * linf0;

  Field f = rho0;
  std::size_t si = 0;
  while (si < stops.size() && stops[si] <= t0 + tiny) {
    traj.snapshots.push_back({t0, f});
    ++si;
  }

  while (true) {
    const double target = si < stops.size() ? stops[si] : cfg.t_end;
    while (f.time < target - tiny) {
      const double remaining = target - f.time;
      double dt = stable_dt(f, cfg.law, cfg.cfl);
      const bool lands = !(dt < remaining);
      if (lands) dt = remaining;

      StepStats st;
      f = step(f, cfg.law, dt, cfg.vacuum_floor, &st);
      if (lands) f.time = target;
      ++traj.steps;
      traj.min_preclamp = std::min(traj.min_preclamp, st.min_preclamp);
      traj.clamped_mass_total += st.clamped_mass;

      const SeriesPoint p = series_point(f, dt, threshold);
      if (!std::isfinite(p.mass) || !std::isfinite(p.linf))
        raise(Errc::nan_abort, "run: non-finite state at t = " + std::to_string(f.time));
      traj.series.push_back(p);
      if (traj.initial_mass > 0.0)
        traj.max_mass_drift_rel = std::max(
            traj.max_mass_drift_rel, std::abs(p.mass - traj.initial_mass) / traj.initial_mass);
    }
    if (si < stops.size()) {
      traj.snapshots.push_back({f.time, f});
      ++si;
    } else {
      break;
    }
  }
  traj.final_state = f;
  return traj;
}

ContractionTrial l1_contraction_trial(const Field& a0, const Field& b0, const ViscosityLaw& law,
                                      double t, double cfl) {
  if (!(a0.grid == b0.grid)) raise(Errc::domain_error, "contraction: fields on different grids");
  if (a0.time != b0.time) raise(Errc::domain_error, "contraction: fields at different times");
  validate_density(a0);
  validate_density(b0);
  if (!(t >= a0.time)) raise(Errc::domain_error, "contraction: target time in the past");

  auto diff_norms = [&](const Field& a, const Field& b, double& l1, double& pos) {
    double s = 0.0, sp = 0.0;
    for (std::size_t c = 0; c < a.v.size(); ++c) {
      const double d = a.v[c] - b.v[c];
      s += std::abs(d);
      if (d > 0.0) sp += d;
    }
    l1 = s * a.grid.cell_volume();
    pos = sp * a.grid.cell_volume();
  };

  ContractionTrial out;
  diff_norms(a0, b0, out.rhs, out.positive_part_rhs);
  Field a = a0, b = b0;
  const double tiny = 1e-14 * std::max(1.0, std::abs(t));
  while (a.time < t - tiny) {
    const double dt =
        std::min({stable_dt(a, law, cfl), stable_dt(b, law, cfl), t - a.time});
    a = step(a, law, dt);
    b = step(b, law, dt);
  }
  diff_norms(a, b, out.lhs, out.positive_part_lhs);
  return out;
}

double psi_integral(const Field& rho, const ViscosityLaw& law) {
  double s = 0.0;
  for (double v : rho.v) s += law.psi(v);
  return s * rho.grid.cell_volume();
}

double dissipation(const Field& rho, const ViscosityLaw& law) {
  const Grid& g = rho.grid;
  std::vector<double> w(rho.v.size());
  for (std::size_t c = 0; c < w.size(); ++c) w[c] = law.mu(rho.v[c]);

  double acc = 0.0;
  const int nx = g.n(0), ny = g.n(1);
  const bool periodic = g.boundary() == Boundary::Periodic;
  // Faces along x: (i, i+1) for i < nx-1, plus the wrap face when periodic.
  const double ax = 1.0 / (g.dx(0) * g.dx(0));
  for (int i = 0; i + 1 < nx; ++i)
    for (int j = 0; j < ny; ++j) {
      const double d = w[g.index(i + 1, j)] - w[g.index(i, j)];
      acc += d * d * ax;
    }
  if (periodic)
    for (int j = 0; j < ny; ++j) {
      const double d = w[g.index(0, j)] - w[g.index(nx - 1, j)];
      acc += d * d * ax;
    }
  if (g.dim() == 2) {
    const double ay = 1.0 / (g.dx(1) * g.dx(1));
    for (int i = 0; i < nx; ++i) {
      for (int j = 0; j + 1 < ny; ++j) {
        const double d = w[g.index(i, j + 1)] - w[g.index(i, j)];
        acc += d * d * ay;
      }
      if (periodic) {
        const double d = w[g.index(i, 0)] - w[g.index(i, ny - 1)];
        acc += d * d * ay;
      }
    }
  }
  return acc * g.cell_volume();
}

}  // namespace qslab::pme
