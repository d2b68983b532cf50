#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "qslab/field.hpp"
#include "qslab/viscosity.hpp"

namespace qslab {

// Raw key = value file split into [section] blocks. '#' starts a comment,
// blank lines are skipped, keys may not repeat within a section. Unknown
// sections or keys are rejected when the typed view is built.
struct ConfigDoc {
  struct Entry {
    std::string value;
    int line = 0;
  };
  std::map<std::string, std::map<std::string, Entry>> sections;
  std::map<std::string, int> section_lines;  // line of each section's first header
};

ConfigDoc parse_config_text(const std::string& text);
ConfigDoc load_config_file(const std::string& path);

// Insert or overwrite one value (line number 0 marks a programmatic origin).
void set_config_value(ConfigDoc& doc, const std::string& section, const std::string& key,
                      const std::string& value);

// Typed settings. Sections and keys:
//   [run]        command
//   [law]        kind (power), mu_c, alpha
//   [grid]       dim, nx, ny, x_lo, x_hi, y_lo, y_hi, boundary (periodic|zeroflux)
//   [init]       kind (barenblatt|gaussian|box|file), mass, t0, amplitude,
//                width, floor, center_x, center_y, file, velocity (quasi|zero)
//   [time]       t_end, cfl, snapshots (comma list)
//   [pressure]   eps, a, gamma, eps_list (comma list)
//   [output]     dir
//   [tolerances] vacuum_floor, support_threshold_rel, rho_min
struct RunConfig {
  std::set<std::string> present;  // "section.key" for every key seen
  std::string command;

  double mu_c = 1.0;
  double alpha = 2.0;

  int dim = 1;
  int nx = 0, ny = 0;
  double x_lo = 0.0, x_hi = 0.0, y_lo = 0.0, y_hi = 0.0;
  Boundary boundary = Boundary::ZeroFlux;

  std::string init_kind;
  double mass = 1.0;
  double t0 = 0.0;
  double amplitude = 1.0;
  double width = 1.0;
  double floor_value = 0.0;
  double center_x = 0.0, center_y = 0.0;
  std::string init_file;
  std::string velocity = "quasi";

  double t_end = 0.0;
  double cfl = 0.5;
  std::vector<double> snapshots;

  bool has_pressure = false;
  double eps = 0.0;
  double a = 1.0;
  double gamma = 2.0;
  std::vector<double> eps_list;

  std::string out_dir;

  double vacuum_floor = 0.0;
  double support_threshold_rel = 1e-12;
  double rho_min = 1e-12;
};

RunConfig build_run_config(const ConfigDoc& doc);

// Concrete objects a solver command needs. u0 is meaningful when
// has_velocity is true (momentum commands).
struct Problem {
  ViscosityLaw law;
  Grid grid;
  Field rho0;
  Field u0;
  bool has_velocity = false;
};

// Validates cross-field consistency for the given command (pme, cns, sweep)
// and builds the law, grid, and initial data.
Problem build_problem(const RunConfig& rc, const std::string& command);

}  // namespace qslab
