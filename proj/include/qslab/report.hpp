#pragma once

#include <string>
#include <vector>

#include "qslab/cns.hpp"
#include "qslab/pme.hpp"
#include "qslab/quasi.hpp"

namespace qslab {

// Shortest round-trip decimal form (%.17g).
std::string format_g(double x);

void ensure_directory(const std::string& dir);
void write_text_file(const std::string& path, const std::string& body);

// Snapshot files are named snap_<index>_<time%.6g>.csv.
std::string snapshot_filename(std::size_t index, double t);

// CSV headers are part of the file contract:
//   series    t,dt,mass,l1,l2,linf,support_radius
//   density   x,rho            (x,y,rho in 2D)
//   state     x,rho,u          (1D)
//   entropy   t,energy,bd,mv,pressure_cross_term
//   sweep     eps,sup_l1_dist,final_l1_dist,final_l2_dist,support_excess,
//             pressure_l1l1,pressure_linf_l1
//   residual  t,dx,dt,direct,identity,mismatch
void write_series_csv(const std::string& path, const std::vector<pme::SeriesPoint>& series);
void write_density_csv(const std::string& path, const Field& rho);
void write_state_csv(const std::string& path, const Field& rho, const Field& u);
void write_entropy_csv(const std::string& path, const std::vector<cns::EnergyPoint>& series);
void write_sweep_csv(const std::string& path, const std::vector<cns::SweepRow>& rows);
void write_residual_csv(const std::string& path, const std::vector<double>& times,
                        const std::vector<ResidualReport>& rows);

}  // namespace qslab
