#include "qslab/cns.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <future>
#include <limits>

#include "qslab/diagnostics.hpp"
#include "qslab/exact.hpp"
#include "qslab/ops.hpp"
#include "qslab/quasi.hpp"

namespace qslab::cns {

namespace {

std::string window_string(const char* fmt, double lo, double hi) {
  char buf[128];
  std::snprintf(buf, sizeof buf, fmt, lo, hi);
  return buf;
}

void validate_state(const State& s) {
  if (s.grid.dim() != 1) raise(Errc::domain_error, "cns: grid must be 1D");
  if (s.rho.size() != s.grid.cells() || s.mom.size() != s.grid.cells())
    raise(Errc::domain_error, "cns: state size mismatch");
  for (double v : s.rho)
    if (!(v >= 0.0)) raise(Errc::domain_error, "cns: density must be nonnegative and finite");
  for (double v : s.mom)
    if (!std::isfinite(v)) raise(Errc::domain_error, "cns: momentum must be finite");
}

void validate_pressure(const PressureSpec& pr) {
  if (!(pr.eps >= 0.0)) raise(Errc::domain_error, "cns: eps must be nonnegative");
  if (!(pr.a > 0.0)) raise(Errc::domain_error, "cns: a must be positive");
  if (!(pr.gamma > 1.0)) raise(Errc::domain_error, "cns: gamma must exceed 1");
}

double pressure_l1_of(const std::vector<double>& rho, const Grid& g, const PressureSpec& pr) {
  double s = 0.0;
  for (double r : rho) s += std::pow(r, pr.gamma);
  return pr.eps * pr.a * g.cell_volume() * s;
}

EnergyPoint energy_point(const State& s, double dt, const ViscosityLaw& law,
                         const PressureSpec& pr, double rho_min) {
  Field rho = density_field(s);
  Field u = velocity_field(s, rho_min);
  VectorField uv(s.grid);
  uv.comp[0] = u.v;
  const EntropyReport er = entropy_report(rho, uv, law, pr.eps, pr.a, pr.gamma);
  EnergyPoint p;
  p.t = s.time;
  p.dt = dt;
  p.mass = integrate(rho);
  p.momentum = integrate(s.mom, s.grid);
  p.energy = er.energy;
  p.bd = er.bd;
  p.mv = er.mv;
  p.pressure_l1 = pressure_l1_of(s.rho, s.grid, pr);
  p.pressure_cross = er.pressure_cross;
  return p;
}

}  // namespace

Admissibility gamma_window(double gamma, double nu1, double nu2, int dim) {
  if (dim != 2 && dim != 3) raise(Errc::domain_error, "gamma_window: dim must be 2 or 3");
  if (!(nu1 > 0.0) || !(nu2 >= nu1))
    raise(Errc::domain_error, "gamma_window: need 0 < nu1 <= nu2");
  if (!std::isfinite(gamma)) raise(Errc::domain_error, "gamma_window: gamma must be finite");
  Admissibility out;
  if (dim == 2) {
    const double lower = 0.25 + nu2 / 8.0;
    if (gamma > lower)
      out.windows_hit.push_back(window_string("2d: gamma > %g", lower, 0.0));
    out.admissible = !out.windows_hit.empty();
    return out;
  }
  const double lower = 5.0 / 6.0 + nu2 / 12.0;
  const double upper1 =
      nu1 >= 2.0 ? 2.0 + nu1 / 2.0 : (4.0 - nu1) * (1.0 + nu1) / (2.0 - nu1);
  const double upper2 = 5.0 / 6.0 + 7.0 * nu1 / 12.0;
  if (gamma > lower && gamma < upper1)
    out.windows_hit.push_back(window_string("3d first window: gamma in (%g, %g)", lower, upper1));
  if (gamma > lower && gamma < upper2)
    out.windows_hit.push_back(window_string("3d second window: gamma in (%g, %g)", lower, upper2));
  out.admissible = !out.windows_hit.empty();
  return out;
}

State make_state(const Field& rho, const Field& u) {
  if (!(rho.grid == u.grid)) raise(Errc::domain_error, "make_state: fields on different grids");
  State s;
  s.grid = rho.grid;
  s.rho = rho.v;
  s.mom.resize(rho.v.size());
  for (std::size_t c = 0; c < rho.v.size(); ++c) s.mom[c] = rho.v[c] * u.v[c];
  s.time = rho.time;
  validate_state(s);
  return s;
}

Field density_field(const State& s) {
  Field f(s.grid, 0.0, s.time);
  f.v = s.rho;
  return f;
}

Field velocity_field(const State& s, double rho_min) {
  Field f(s.grid, 0.0, s.time);
  for (std::size_t c = 0; c < s.rho.size(); ++c)
    f.v[c] = s.mom[c] / std::max(s.rho[c], rho_min);
  return f;
}

double stable_dt(const State& s, const ViscosityLaw& law, const PressureSpec& pr, double cfl,
                 double rho_min) {
  if (!(cfl > 0.0 && cfl <= 0.5)) raise(Errc::domain_error, "cns: cfl must be in (0, 1/2]");
  if (!(rho_min > 0.0)) raise(Errc::domain_error, "cns: rho_min must be positive");
  validate_pressure(pr);
  const double dx = s.grid.dx(0);
  double wave = 0.0, nu_kin = 0.0;
  for (std::size_t c = 0; c < s.rho.size(); ++c) {
    const double r = s.rho[c];
    const double u = s.mom[c] / std::max(r, rho_min);
    const double c2 = pr.eps * pr.a * pr.gamma * std::pow(r, pr.gamma - 1.0);
    wave = std::max(wave, std::abs(u) + std::sqrt(c2));
    nu_kin = std::max(nu_kin, law.lame_1d(r) / std::max(r, rho_min));
  }
  if (!std::isfinite(wave) || !std::isfinite(nu_kin))
    raise(Errc::stability_violation, "cns: unbounded wave speed or kinematic viscosity");
  const double inf = std::numeric_limits<double>::infinity();
  const double adv = wave > 0.0 ? dx / wave : inf;
  const double visc = nu_kin > 0.0 ? dx * dx / (2.0 * nu_kin) : inf;
  return cfl * std::min(adv, visc);
}

State step(const State& s, const ViscosityLaw& law, const PressureSpec& pr, double dt,
           double rho_min) {
  if (!(dt > 0.0) || !std::isfinite(dt)) raise(Errc::domain_error, "cns: dt must be positive");
  const Grid& g = s.grid;
  const int n = g.n(0);
  const double dx = g.dx(0);
  const bool periodic = g.boundary() == Boundary::Periodic;

  std::vector<double> u(n), p(n), nu(n);
  for (int i = 0; i < n; ++i) {
    u[i] = s.mom[i] / std::max(s.rho[i], rho_min);
    p[i] = pr.eps * pr.a * std::pow(s.rho[i], pr.gamma);
    nu[i] = law.lame_1d(s.rho[i]);
  }

  // Face i sits between cells i-1 and i; faces 0 and n are the boundary.
  std::vector<double> fm(n + 1), fg(n + 1), fp(n + 1), fv(n + 1);
  for (int i = 0; i <= n; ++i) {
    double rl, ul, pl, nl, rr, ur, prs, nr;
    if (i == 0) {
      if (periodic) {
        rl = s.rho[n - 1], ul = u[n - 1], pl = p[n - 1], nl = nu[n - 1];
      } else {
        rl = s.rho[0], ul = -u[0], pl = p[0], nl = nu[0];
      }
      rr = s.rho[0], ur = u[0], prs = p[0], nr = nu[0];
    } else if (i == n) {
      rl = s.rho[n - 1], ul = u[n - 1], pl = p[n - 1], nl = nu[n - 1];
      if (periodic) {
        rr = s.rho[0], ur = u[0], prs = p[0], nr = nu[0];
      } else {
        rr = s.rho[n - 1], ur = -u[n - 1], prs = p[n - 1], nr = nu[n - 1];
      }
    } else {
      rl = s.rho[i - 1], ul = u[i - 1], pl = p[i - 1], nl = nu[i - 1];
      rr = s.rho[i], ur = u[i], prs = p[i], nr = nu[i];
    }
    const double ubar = 0.5 * (ul + ur);
    fm[i] = ubar >= 0.0 ? rl * ubar : rr * ubar;
    fg[i] = ubar >= 0.0 ? rl * ul * ubar : rr * ur * ubar;
    fp[i] = 0.5 * (pl + prs);
    fv[i] = 0.5 * (nl + nr) * (ur - ul) / dx;
  }

  State out;
  out.grid = g;
  out.time = s.time + dt;
  out.rho.resize(n);
  out.mom.resize(n);
  const double lam = dt / dx;
  for (int i = 0; i < n; ++i) {
    out.rho[i] = s.rho[i] - lam * (fm[i + 1] - fm[i]);
    out.mom[i] = s.mom[i] - lam * (fg[i + 1] - fg[i]) - lam * (fp[i + 1] - fp[i]) +
                 lam * (fv[i + 1] - fv[i]);
  }
  return out;
}

RunResult run(const Config& cfg, const State& init) {
  if (!(init.grid == cfg.grid)) raise(Errc::domain_error, "cns run: state grid differs");
  if (cfg.law.dim() != 1) raise(Errc::domain_error, "cns run: law must be 1D");
  validate_state(init);
  validate_pressure(cfg.pressure);
  const double t0 = init.time;
  if (!(cfg.t_end >= t0)) raise(Errc::domain_error, "cns run: t_end before the initial time");
  const double tiny = 1e-14 * std::max(1.0, std::abs(cfg.t_end));
  std::vector<double> stops = cfg.snapshot_times;
  std::sort(stops.begin(), stops.end());
  for (double sv : stops)
    if (sv < t0 - tiny || sv > cfg.t_end + tiny)
      raise(Errc::domain_error, "cns run: snapshot time outside [t0, t_end]");

  RunResult res;
  res.initial_mass = integrate(init.rho, cfg.grid);
  res.initial_momentum = integrate(init.mom, cfg.grid);
  res.min_density = *std::min_element(init.rho.begin(), init.rho.end());
  res.series.push_back(energy_point(init, 0.0, cfg.law, cfg.pressure, cfg.rho_min));
  res.pressure_linf_l1 = res.series.back().pressure_l1;

  State s = init;
  std::size_t si = 0;
  auto snap = [&]() {
    res.snapshots.push_back({s.time, density_field(s), velocity_field(s, cfg.rho_min)});
  };
  while (si < stops.size() && stops[si] <= t0 + tiny) {
    snap();
    ++si;
  }

  const double p53 = 5.0 / 3.0;
  double l53_acc = 0.0;
  while (true) {
    const double target = si < stops.size() ? stops[si] : cfg.t_end;
    while (s.time < target - tiny) {
      const double remaining = target - s.time;
      double dt = stable_dt(s, cfg.law, cfg.pressure, cfg.cfl, cfg.rho_min);
      const bool lands = !(dt < remaining);
      if (lands) dt = remaining;

      s = step(s, cfg.law, cfg.pressure, dt, cfg.rho_min);
      if (lands) s.time = target;
      ++res.steps;

      const EnergyPoint pt = energy_point(s, dt, cfg.law, cfg.pressure, cfg.rho_min);
      if (!std::isfinite(pt.mass) || !std::isfinite(pt.energy))
        raise(Errc::nan_abort, "cns run: non-finite state at t = " + std::to_string(s.time));
      res.series.push_back(pt);
      res.min_density =
          std::min(res.min_density, *std::min_element(s.rho.begin(), s.rho.end()));
      if (res.initial_mass > 0.0)
        res.max_mass_drift_rel =
            std::max(res.max_mass_drift_rel,
                     std::abs(pt.mass - res.initial_mass) / res.initial_mass);
      res.max_momentum_drift_abs =
          std::max(res.max_momentum_drift_abs, std::abs(pt.momentum - res.initial_momentum));
      res.pressure_l1l1 += dt * pt.pressure_l1;
      res.pressure_linf_l1 = std::max(res.pressure_linf_l1, pt.pressure_l1);
      double cell53 = 0.0;
      for (double r : s.rho)
        cell53 += std::pow(cfg.pressure.eps * cfg.pressure.a * std::pow(r, cfg.pressure.gamma),
                           p53);
      l53_acc += dt * cfg.grid.cell_volume() * cell53;
    }
    if (si < stops.size()) {
      snap();
      ++si;
    } else {
      break;
    }
  }
  res.pressure_l53 = std::pow(l53_acc, 3.0 / 5.0);
  res.final_state = s;
  return res;
}

SweepResult vanishing_pressure_sweep(const SweepConfig& cfg) {
  if (cfg.grid.dim() != 1) raise(Errc::domain_error, "sweep: grid must be 1D");
  if (cfg.eps_values.empty()) raise(Errc::domain_error, "sweep: no eps values");
  for (double e : cfg.eps_values)
    if (!(e > 0.0)) raise(Errc::domain_error, "sweep: eps values must be positive");

  pme::Config ref_cfg;
  ref_cfg.law = cfg.law;
  ref_cfg.grid = cfg.grid;
  ref_cfg.t_end = cfg.t_end;
  ref_cfg.cfl = 0.5;
  ref_cfg.snapshot_times = cfg.snapshot_times;
  SweepResult out;
  out.reference = pme::run(ref_cfg, cfg.rho0);

  const double thr =
      1e-12 * lp_norm(cfg.rho0, std::numeric_limits<double>::infinity());
  const Field u0 = [&] {
    const VectorField v = velocity_from_density(cfg.rho0, cfg.law);
    Field f(cfg.grid, 0.0, cfg.rho0.time);
    f.v = v.comp[0];
    return f;
  }();

  auto worker = [&](double eps) {
    Config run_cfg;
    run_cfg.law = cfg.law;
    run_cfg.grid = cfg.grid;
    run_cfg.pressure = {eps, cfg.a, cfg.gamma};
    run_cfg.t_end = cfg.t_end;
    run_cfg.cfl = cfg.cfl;
    run_cfg.snapshot_times = cfg.snapshot_times;
    run_cfg.rho_min = cfg.rho_min;
    const RunResult rr = run(run_cfg, make_state(cfg.rho0, u0));

    SweepRow row;
    row.eps = eps;
    row.pressure_l1l1 = rr.pressure_l1l1;
    row.pressure_linf_l1 = rr.pressure_linf_l1;
    if (rr.snapshots.size() != out.reference.snapshots.size())
      raise(Errc::internal, "sweep: snapshot lists misaligned");
    auto l1_between = [&](const Field& x, const Field& y, double p) {
      Field d(cfg.grid);
      for (std::size_t c = 0; c < d.v.size(); ++c) d.v[c] = x.v[c] - y.v[c];
      return lp_norm(d, p);
    };
    for (std::size_t k = 0; k < rr.snapshots.size(); ++k)
      row.sup_l1_dist = std::max(
          row.sup_l1_dist, l1_between(rr.snapshots[k].rho, out.reference.snapshots[k].rho, 1.0));
    const Field cns_final = density_field(rr.final_state);
    const Field& ref_final = out.reference.final_state;
    row.final_l1_dist = l1_between(cns_final, ref_final, 1.0);
    row.final_l2_dist = l1_between(cns_final, ref_final, 2.0);
    row.sup_l1_dist = std::max(row.sup_l1_dist, row.final_l1_dist);
    row.support_excess = support_radius(cns_final, thr) - support_radius(ref_final, thr);
    return row;
  };

  std::vector<std::future<SweepRow>> futures;
  futures.reserve(cfg.eps_values.size());
  for (double eps : cfg.eps_values)
    futures.push_back(std::async(std::launch::async, worker, eps));
  for (auto& f : futures) out.rows.push_back(f.get());
  return out;
}

}  // namespace qslab::cns
