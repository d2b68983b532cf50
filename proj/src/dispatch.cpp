#include "qslab/dispatch.hpp"

#include <limits>
#include <sstream>

#include "qslab/diagnostics.hpp"
#include "qslab/exact.hpp"
#include "qslab/report.hpp"

namespace qslab {

namespace {

std::string law_summary(const ViscosityLaw& law) {
  std::ostringstream os;
  os << "law: mu = " << format_g(law.mu_c()) << " * rho^" << format_g(law.alpha()) << " in "
     << law.dim() << "D\n";
  os << "law nu1: " << format_g(law.nu1()) << "\n";
  os << "law nu2: " << format_g(law.nu2()) << "\n";
  return os.str();
}

std::string grid_summary(const Grid& g) {
  std::ostringstream os;
  os << "grid: dim " << g.dim() << ", n";
  os << " " << g.n(0);
  if (g.dim() == 2) os << " x " << g.n(1);
  os << ", x in [" << format_g(g.lo(0)) << ", " << format_g(g.hi(0)) << "]";
  if (g.dim() == 2) os << ", y in [" << format_g(g.lo(1)) << ", " << format_g(g.hi(1)) << "]";
  os << ", " << (g.boundary() == Boundary::Periodic ? "periodic" : "zeroflux") << "\n";
  return os.str();
}

void run_pme(const RunConfig& rc, const std::string& out) {
  const Problem pb = build_problem(rc, "pme");
  pme::Config cfg;
  cfg.law = pb.law;
  cfg.grid = pb.grid;
  cfg.t_end = rc.t_end;
  cfg.cfl = rc.cfl;
  cfg.snapshot_times = rc.snapshots;
  cfg.vacuum_floor = rc.vacuum_floor;
  cfg.support_threshold_rel = rc.support_threshold_rel;
  const pme::Trajectory traj = pme::run(cfg, pb.rho0);

  write_series_csv(out + "/series.csv", traj.series);
  for (std::size_t k = 0; k < traj.snapshots.size(); ++k)
    write_density_csv(out + "/" + snapshot_filename(k, traj.snapshots[k].t),
                      traj.snapshots[k].rho);
  write_density_csv(out + "/final.csv", traj.final_state);

  const ExponentSet ex = pme_exponents(rc.alpha, rc.dim);
  std::ostringstream os;
  os << "command: pme\n" << law_summary(pb.law) << grid_summary(pb.grid);
  os << "t0: " << format_g(pb.rho0.time) << "\n";
  os << "t_end: " << format_g(rc.t_end) << "\n";
  os << "steps: " << traj.steps << "\n";
  os << "initial_mass: " << format_g(traj.initial_mass) << "\n";
  os << "max_mass_drift_rel: " << format_g(traj.max_mass_drift_rel) << "\n";
  os << "min_preclamp: " << format_g(traj.min_preclamp) << "\n";
  os << "clamped_mass_total: " << format_g(traj.clamped_mass_total) << "\n";
  os << "exponent gamma1: " << format_g(ex.gamma1) << "\n";
  os << "exponent beta_space: " << format_g(ex.beta_space) << "\n";
  os << "exponent sigma_mass: " << format_g(ex.sigma_mass) << "\n";
  if (!traj.series.empty()) {
    const auto& last = traj.series.back();
    os << "final_linf: " << format_g(last.linf) << "\n";
    os << "final_support_radius: " << format_g(last.support_radius) << "\n";
  }
  std::vector<double> ts, l2s, linfs;
  for (const auto& p : traj.series) {
    ts.push_back(p.t);
    l2s.push_back(p.l2);
    linfs.push_back(p.linf);
  }
  try {
    const DecayFit f2 = decay_fit(ts, l2s, -ex.time_exp(2.0));
    os << "l2_decay_slope: " << format_g(f2.fit.slope) << " (theory " << format_g(f2.theory)
       << ")\n";
    const DecayFit fi =
        decay_fit(ts, linfs, -ex.time_exp(std::numeric_limits<double>::infinity()));
    os << "linf_decay_slope: " << format_g(fi.fit.slope) << " (theory " << format_g(fi.theory)
       << ")\n";
  } catch (const Error&) {
    os << "decay_fit: not enough usable points\n";
  }
  write_text_file(out + "/report.txt", os.str());
}

void run_cns(const RunConfig& rc, const std::string& out) {
  const Problem pb = build_problem(rc, "cns");
  cns::Config cfg;
  cfg.law = pb.law;
  cfg.grid = pb.grid;
  cfg.pressure = {rc.eps, rc.a, rc.gamma};
  cfg.t_end = rc.t_end;
  cfg.cfl = rc.present.count("time.cfl") ? rc.cfl : 0.4;
  cfg.snapshot_times = rc.snapshots;
  cfg.rho_min = rc.rho_min;
  const cns::RunResult res = cns::run(cfg, cns::make_state(pb.rho0, pb.u0));

  write_entropy_csv(out + "/entropy.csv", res.series);
  for (std::size_t k = 0; k < res.snapshots.size(); ++k)
    write_state_csv(out + "/" + snapshot_filename(k, res.snapshots[k].t), res.snapshots[k].rho,
                    res.snapshots[k].u);
  write_state_csv(out + "/final.csv", cns::density_field(res.final_state),
                  cns::velocity_field(res.final_state, cfg.rho_min));

  std::ostringstream os;
  os << "command: cns\n" << law_summary(pb.law) << grid_summary(pb.grid);
  os << "pressure: eps " << format_g(rc.eps) << ", a " << format_g(rc.a) << ", gamma "
     << format_g(rc.gamma) << "\n";
  os << "t0: " << format_g(pb.rho0.time) << "\n";
  os << "t_end: " << format_g(rc.t_end) << "\n";
  os << "steps: " << res.steps << "\n";
  os << "initial_mass: " << format_g(res.initial_mass) << "\n";
  os << "initial_momentum: " << format_g(res.initial_momentum) << "\n";
  os << "max_mass_drift_rel: " << format_g(res.max_mass_drift_rel) << "\n";
  os << "max_momentum_drift_abs: " << format_g(res.max_momentum_drift_abs) << "\n";
  os << "min_density: " << format_g(res.min_density) << "\n";
  os << "pressure_l1l1: " << format_g(res.pressure_l1l1) << "\n";
  os << "pressure_linf_l1: " << format_g(res.pressure_linf_l1) << "\n";
  os << "pressure_l53: " << format_g(res.pressure_l53) << "\n";
  write_text_file(out + "/report.txt", os.str());
}

void run_sweep(const RunConfig& rc, const std::string& out) {
  const Problem pb = build_problem(rc, "sweep");
  cns::SweepConfig cfg;
  cfg.law = pb.law;
  cfg.grid = pb.grid;
  cfg.rho0 = pb.rho0;
  cfg.eps_values = rc.eps_list;
  cfg.a = rc.a;
  cfg.gamma = rc.gamma;
  cfg.t_end = rc.t_end;
  cfg.cfl = rc.present.count("time.cfl") ? rc.cfl : 0.4;
  cfg.snapshot_times = rc.snapshots;
  cfg.rho_min = rc.rho_min;
  const cns::SweepResult res = cns::vanishing_pressure_sweep(cfg);

  write_sweep_csv(out + "/sweep.csv", res.rows);
  write_density_csv(out + "/reference_final.csv", res.reference.final_state);

  std::ostringstream os;
  os << "command: sweep\n" << law_summary(pb.law) << grid_summary(pb.grid);
  os << "pressure: a " << format_g(rc.a) << ", gamma " << format_g(rc.gamma) << "\n";
  os << "t0: " << format_g(pb.rho0.time) << "\n";
  os << "t_end: " << format_g(rc.t_end) << "\n";
  os << "reference_steps: " << res.reference.steps << "\n";
  os << "reference_mass_drift_rel: " << format_g(res.reference.max_mass_drift_rel) << "\n";
  for (const auto& row : res.rows)
    os << "eps " << format_g(row.eps) << ": sup_l1 " << format_g(row.sup_l1_dist)
       << ", final_l1 " << format_g(row.final_l1_dist) << ", pressure_l1l1 "
       << format_g(row.pressure_l1l1) << "\n";
  write_text_file(out + "/report.txt", os.str());
}

}  // namespace

void dispatch(const ConfigDoc& doc, const std::string& command, const std::string& out_dir) {
  const RunConfig rc = build_run_config(doc);
  std::string cmd = command.empty() ? rc.command : command;
  if (cmd.empty())
    raise(Errc::semantic_error, "no command given and the config has no [run] command");
  std::string out = !out_dir.empty() ? out_dir : (!rc.out_dir.empty() ? rc.out_dir : "out");
  ensure_directory(out);
  if (cmd == "pme")
    run_pme(rc, out);
  else if (cmd == "cns")
    run_cns(rc, out);
  else if (cmd == "sweep")
    run_sweep(rc, out);
  else
    raise(Errc::domain_error, "unknown command '" + cmd + "'");
}

}  // namespace qslab
