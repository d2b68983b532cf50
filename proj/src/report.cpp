#include "qslab/report.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

namespace qslab {

namespace {

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) raise(Errc::io_error, "cannot write '" + path + "'");
  return out;
}

}  // namespace

std::string format_g(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void ensure_directory(const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) raise(Errc::io_error, "cannot create directory '" + dir + "': " + ec.message());
}

void write_text_file(const std::string& path, const std::string& body) {
  auto out = open_out(path);
  out << body;
  if (!out) raise(Errc::io_error, "failed writing '" + path + "'");
}

std::string snapshot_filename(std::size_t index, double t) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "snap_%zu_%.6g.csv", index, t);
  return buf;
}

void write_series_csv(const std::string& path, const std::vector<pme::SeriesPoint>& series) {
  auto out = open_out(path);
  out << "t,dt,mass,l1,l2,linf,support_radius\n";
  for (const auto& p : series)
    out << format_g(p.t) << ',' << format_g(p.dt) << ',' << format_g(p.mass) << ','
        << format_g(p.l1) << ',' << format_g(p.l2) << ',' << format_g(p.linf) << ','
        << format_g(p.support_radius) << '\n';
  if (!out) raise(Errc::io_error, "failed writing '" + path + "'");
}

void write_density_csv(const std::string& path, const Field& rho) {
  auto out = open_out(path);
  const Grid& g = rho.grid;
  if (g.dim() == 1) {
    out << "x,rho\n";
    for (int i = 0; i < g.n(0); ++i)
      out << format_g(g.center(0, i)) << ',' << format_g(rho.v[i]) << '\n';
  } else {
    out << "x,y,rho\n";
    for (int i = 0; i < g.n(0); ++i)
      for (int j = 0; j < g.n(1); ++j)
        out << format_g(g.center(0, i)) << ',' << format_g(g.center(1, j)) << ','
            << format_g(rho(i, j)) << '\n';
  }
  if (!out) raise(Errc::io_error, "failed writing '" + path + "'");
}

void write_state_csv(const std::string& path, const Field& rho, const Field& u) {
  if (rho.grid.dim() != 1 || !(rho.grid == u.grid))
    raise(Errc::domain_error, "write_state_csv: needs matching 1D fields");
  auto out = open_out(path);
  out << "x,rho,u\n";
  for (int i = 0; i < rho.grid.n(0); ++i)
    out << format_g(rho.grid.center(0, i)) << ',' << format_g(rho.v[i]) << ','
        << format_g(u.v[i]) << '\n';
  if (!out) raise(Errc::io_error, "failed writing '" + path + "'");
}

void write_entropy_csv(const std::string& path, const std::vector<cns::EnergyPoint>& series) {
  auto out = open_out(path);
  out << "t,energy,bd,mv,pressure_cross_term\n";
  for (const auto& p : series)
    out << format_g(p.t) << ',' << format_g(p.energy) << ',' << format_g(p.bd) << ','
        << format_g(p.mv) << ',' << format_g(p.pressure_cross) << '\n';
  if (!out) raise(Errc::io_error, "failed writing '" + path + "'");
}

void write_sweep_csv(const std::string& path, const std::vector<cns::SweepRow>& rows) {
  auto out = open_out(path);
  out << "eps,sup_l1_dist,final_l1_dist,final_l2_dist,support_excess,pressure_l1l1,"
         "pressure_linf_l1\n";
  for (const auto& r : rows)
    out << format_g(r.eps) << ',' << format_g(r.sup_l1_dist) << ',' << format_g(r.final_l1_dist)
        << ',' << format_g(r.final_l2_dist) << ',' << format_g(r.support_excess) << ','
        << format_g(r.pressure_l1l1) << ',' << format_g(r.pressure_linf_l1) << '\n';
  if (!out) raise(Errc::io_error, "failed writing '" + path + "'");
}

void write_residual_csv(const std::string& path, const std::vector<double>& times,
                        const std::vector<ResidualReport>& rows) {
  if (times.size() != rows.size())
    raise(Errc::domain_error, "write_residual_csv: size mismatch");
  auto out = open_out(path);
  out << "t,dx,dt,direct,identity,mismatch\n";
  for (std::size_t i = 0; i < rows.size(); ++i)
    out << format_g(times[i]) << ',' << format_g(rows[i].dx) << ',' << format_g(rows[i].dt)
        << ',' << format_g(rows[i].direct) << ',' << format_g(rows[i].identity) << ','
        << format_g(rows[i].mismatch) << '\n';
  if (!out) raise(Errc::io_error, "failed writing '" + path + "'");
}

}  // namespace qslab
