#include "qslab/config.hpp"

#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "qslab/exact.hpp"
#include "qslab/quasi.hpp"

namespace qslab {

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

double to_double(const std::string& text, const std::string& where, int line) {
  errno = 0;
  char* end = nullptr;
  const double x = std::strtod(text.c_str(), &end);
  if (end != text.c_str() + text.size() || text.empty() || errno == ERANGE || !std::isfinite(x))
    raise(Errc::parse_error,
          "invalid number '" + text + "' for " + where + " at line " + std::to_string(line));
  return x;
}

int to_int(const std::string& text, const std::string& where, int line) {
  errno = 0;
  char* end = nullptr;
  const long x = std::strtol(text.c_str(), &end, 10);
  if (end != text.c_str() + text.size() || text.empty() || errno == ERANGE)
    raise(Errc::parse_error,
          "invalid integer '" + text + "' for " + where + " at line " + std::to_string(line));
  return static_cast<int>(x);
}

std::vector<double> to_list(const std::string& text, const std::string& where, int line) {
  std::vector<double> out;
  std::string item;
  std::stringstream ss(text);
  while (std::getline(ss, item, ',')) out.push_back(to_double(trim(item), where, line));
  if (out.empty()) raise(Errc::parse_error, "empty list for " + where + " at line " +
                                                std::to_string(line));
  return out;
}

struct KeySpec {
  const char* section;
  const char* key;
};

constexpr KeySpec kKnownKeys[] = {
    {"run", "command"},
    {"law", "kind"},
    {"law", "mu_c"},
    {"law", "alpha"},
    {"grid", "dim"},
    {"grid", "nx"},
    {"grid", "ny"},
    {"grid", "x_lo"},
    {"grid", "x_hi"},
    {"grid", "y_lo"},
    {"grid", "y_hi"},
    {"grid", "boundary"},
    {"init", "kind"},
    {"init", "mass"},
    {"init", "t0"},
    {"init", "amplitude"},
    {"init", "width"},
    {"init", "floor"},
    {"init", "center_x"},
    {"init", "center_y"},
    {"init", "file"},
    {"init", "velocity"},
    {"time", "t_end"},
    {"time", "cfl"},
    {"time", "snapshots"},
    {"pressure", "eps"},
    {"pressure", "a"},
    {"pressure", "gamma"},
    {"pressure", "eps_list"},
    {"output", "dir"},
    {"tolerances", "vacuum_floor"},
    {"tolerances", "support_threshold_rel"},
    {"tolerances", "rho_min"},
};

bool key_known(const std::string& section, const std::string& key) {
  for (const auto& k : kKnownKeys)
    if (section == k.section && key == k.key) return true;
  return false;
}

bool section_known(const std::string& section) {
  for (const auto& k : kKnownKeys)
    if (section == k.section) return true;
  return false;
}

void require(const RunConfig& rc, const std::string& dotted) {
  if (!rc.present.count(dotted))
    raise(Errc::semantic_error, "missing required key '" + dotted + "'");
}

Field read_density_file(const std::string& path, const Grid& grid, double t0) {
  std::ifstream in(path);
  if (!in) raise(Errc::io_error, "cannot open density file '" + path + "'");
  Field f(grid, 0.0, t0);
  std::string token;
  std::size_t count = 0;
  int line = 0;
  std::string row;
  while (std::getline(in, row)) {
    ++line;
    const std::string cell = trim(row);
    if (cell.empty()) continue;
    if (line == 1 && cell == "rho") continue;
    if (count >= grid.cells())
      raise(Errc::parse_error, "density file '" + path + "' has more rows than grid cells");
    f.v[count++] = to_double(cell, "density file row", line);
  }
  if (count != grid.cells())
    raise(Errc::parse_error, "density file '" + path + "' has " + std::to_string(count) +
                                 " values, grid needs " + std::to_string(grid.cells()));
  return f;
}

}  // namespace

ConfigDoc parse_config_text(const std::string& text) {
  ConfigDoc doc;
  std::stringstream ss(text);
  std::string raw;
  std::string section;
  int line = 0;
  while (std::getline(ss, raw)) {
    ++line;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    const std::string s = trim(raw);
    if (s.empty()) continue;
    if (s.front() == '[') {
      if (s.back() != ']' || s.size() < 3)
        raise(Errc::parse_error, "malformed section header at line " + std::to_string(line));
      section = trim(s.substr(1, s.size() - 2));
      if (section.empty())
        raise(Errc::parse_error, "empty section name at line " + std::to_string(line));
      doc.section_lines.emplace(section, line);
      doc.sections[section];
      continue;
    }
    const auto eq = s.find('=');
    if (eq == std::string::npos)
      raise(Errc::parse_error, "expected 'key = value' at line " + std::to_string(line));
    if (section.empty())
      raise(Errc::parse_error, "key outside any section at line " + std::to_string(line));
    const std::string key = trim(s.substr(0, eq));
    const std::string value = trim(s.substr(eq + 1));
    if (key.empty()) raise(Errc::parse_error, "empty key at line " + std::to_string(line));
    auto& sec = doc.sections[section];
    const auto it = sec.find(key);
    if (it != sec.end())
      raise(Errc::parse_error, "duplicate key '" + key + "' in [" + section + "] (lines " +
                                   std::to_string(it->second.line) + " and " +
                                   std::to_string(line) + ")");
    sec.emplace(key, ConfigDoc::Entry{value, line});
  }
  return doc;
}

ConfigDoc load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(Errc::io_error, "cannot open config file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

void set_config_value(ConfigDoc& doc, const std::string& section, const std::string& key,
                      const std::string& value) {
  doc.sections[section][key] = ConfigDoc::Entry{value, 0};
  doc.section_lines.emplace(section, 0);
}

RunConfig build_run_config(const ConfigDoc& doc) {
  for (const auto& [section, keys] : doc.sections) {
    if (!section_known(section)) {
      const auto it = doc.section_lines.find(section);
      const int line = it == doc.section_lines.end() ? 0 : it->second;
      raise(Errc::parse_error,
            "unknown section [" + section + "] at line " + std::to_string(line));
    }
    for (const auto& [key, entry] : keys)
      if (!key_known(section, key))
        raise(Errc::parse_error, "unknown key '" + key + "' in [" + section + "] at line " +
                                     std::to_string(entry.line));
  }

  RunConfig rc;
  auto entry = [&](const char* section, const char* key) -> const ConfigDoc::Entry* {
    const auto sit = doc.sections.find(section);
    if (sit == doc.sections.end()) return nullptr;
    const auto kit = sit->second.find(key);
    if (kit == sit->second.end()) return nullptr;
    rc.present.insert(std::string(section) + "." + key);
    return &kit->second;
  };
  auto where = [](const char* section, const char* key) {
    return "'" + std::string(key) + "' in [" + section + "]";
  };
  auto get_d = [&](const char* sec, const char* key, double& out) {
    if (const auto* e = entry(sec, key)) out = to_double(e->value, where(sec, key), e->line);
  };
  auto get_i = [&](const char* sec, const char* key, int& out) {
    if (const auto* e = entry(sec, key)) out = to_int(e->value, where(sec, key), e->line);
  };
  auto get_s = [&](const char* sec, const char* key, std::string& out) {
    if (const auto* e = entry(sec, key)) out = e->value;
  };
  auto get_l = [&](const char* sec, const char* key, std::vector<double>& out) {
    if (const auto* e = entry(sec, key)) out = to_list(e->value, where(sec, key), e->line);
  };

  get_s("run", "command", rc.command);

  std::string law_kind = "power";
  get_s("law", "kind", law_kind);
  if (law_kind != "power")
    raise(Errc::semantic_error, "law kind '" + law_kind + "' is not supported; use 'power'");
  get_d("law", "mu_c", rc.mu_c);
  get_d("law", "alpha", rc.alpha);

  get_i("grid", "dim", rc.dim);
  get_i("grid", "nx", rc.nx);
  get_i("grid", "ny", rc.ny);
  get_d("grid", "x_lo", rc.x_lo);
  get_d("grid", "x_hi", rc.x_hi);
  get_d("grid", "y_lo", rc.y_lo);
  get_d("grid", "y_hi", rc.y_hi);
  if (const auto* e = entry("grid", "boundary")) {
    if (e->value == "periodic")
      rc.boundary = Boundary::Periodic;
    else if (e->value == "zeroflux")
      rc.boundary = Boundary::ZeroFlux;
    else
      raise(Errc::semantic_error, "boundary must be 'periodic' or 'zeroflux', got '" + e->value +
                                      "' at line " + std::to_string(e->line));
  }

  get_s("init", "kind", rc.init_kind);
  get_d("init", "mass", rc.mass);
  get_d("init", "t0", rc.t0);
  get_d("init", "amplitude", rc.amplitude);
  get_d("init", "width", rc.width);
  get_d("init", "floor", rc.floor_value);
  get_d("init", "center_x", rc.center_x);
  get_d("init", "center_y", rc.center_y);
  get_s("init", "file", rc.init_file);
  get_s("init", "velocity", rc.velocity);
  if (rc.velocity != "quasi" && rc.velocity != "zero")
    raise(Errc::semantic_error, "velocity must be 'quasi' or 'zero', got '" + rc.velocity + "'");

  get_d("time", "t_end", rc.t_end);
  get_d("time", "cfl", rc.cfl);
  get_l("time", "snapshots", rc.snapshots);

  rc.has_pressure = doc.sections.count("pressure") != 0;
  get_d("pressure", "eps", rc.eps);
  get_d("pressure", "a", rc.a);
  get_d("pressure", "gamma", rc.gamma);
  get_l("pressure", "eps_list", rc.eps_list);

  get_s("output", "dir", rc.out_dir);

  get_d("tolerances", "vacuum_floor", rc.vacuum_floor);
  get_d("tolerances", "support_threshold_rel", rc.support_threshold_rel);
  get_d("tolerances", "rho_min", rc.rho_min);
  return rc;
}

Problem build_problem(const RunConfig& rc, const std::string& command) {
  if (command != "pme" && command != "cns" && command != "sweep")
    raise(Errc::domain_error, "unknown command '" + command + "'");
  if (!rc.command.empty() && rc.command != command)
    raise(Errc::semantic_error,
          "config names command '" + rc.command + "' but '" + command + "' was requested");

  if (rc.dim != 1 && rc.dim != 2) raise(Errc::semantic_error, "grid dim must be 1 or 2");
  if (command != "pme" && rc.dim != 1)
    raise(Errc::semantic_error, "command '" + command + "' needs a 1D grid");

  // A fast-diffusion exponent at or below the critical one has no spreading
  // solutions to track; report that before any viscosity complaint.
  if (!(rc.alpha > critical_fast_exponent(rc.dim)))
    raise(Errc::extinction_regime, "alpha must exceed the critical fast-diffusion exponent " +
                                       std::to_string(critical_fast_exponent(rc.dim)));

  Problem pb;
  pb.law = ViscosityLaw::power_law(rc.mu_c, rc.alpha, rc.dim);

  require(rc, "grid.nx");
  require(rc, "grid.x_lo");
  require(rc, "grid.x_hi");
  if (rc.dim == 2) {
    require(rc, "grid.ny");
    require(rc, "grid.y_lo");
    require(rc, "grid.y_hi");
    pb.grid = Grid({rc.nx, rc.ny}, {rc.x_lo, rc.y_lo}, {rc.x_hi, rc.y_hi}, rc.boundary);
  } else {
    pb.grid = Grid(rc.nx, rc.x_lo, rc.x_hi, rc.boundary);
  }

  require(rc, "time.t_end");
  require(rc, "init.kind");
  if (rc.init_kind == "barenblatt") {
    require(rc, "init.mass");
    require(rc, "init.t0");
    if (!(rc.t0 > 0.0)) raise(Errc::semantic_error, "barenblatt init needs t0 > 0");
    const BarenblattSolution sol =
        BarenblattSolution::from_mass(rc.mass, rc.alpha, rc.dim, rc.mu_c);
    pb.rho0 = sol.sample(pb.grid, rc.t0);
  } else if (rc.init_kind == "gaussian") {
    const double w2 = 2.0 * rc.width * rc.width;
    if (!(rc.width > 0.0)) raise(Errc::semantic_error, "gaussian init needs width > 0");
    auto bump1 = [&](double x) {
      const double d = x - rc.center_x;
      return rc.amplitude * std::exp(-d * d / w2) + rc.floor_value;
    };
    auto bump2 = [&](double x, double y) {
      const double dx = x - rc.center_x, dy = y - rc.center_y;
      return rc.amplitude * std::exp(-(dx * dx + dy * dy) / w2) + rc.floor_value;
    };
    pb.rho0 = rc.dim == 1 ? sample1d(pb.grid, bump1, rc.t0) : sample2d(pb.grid, bump2, rc.t0);
  } else if (rc.init_kind == "box") {
    if (!(rc.width > 0.0)) raise(Errc::semantic_error, "box init needs width > 0");
    auto box1 = [&](double x) {
      return (std::abs(x - rc.center_x) <= rc.width ? rc.amplitude : 0.0) + rc.floor_value;
    };
    auto box2 = [&](double x, double y) {
      const bool in =
          std::abs(x - rc.center_x) <= rc.width && std::abs(y - rc.center_y) <= rc.width;
      return (in ? rc.amplitude : 0.0) + rc.floor_value;
    };
    pb.rho0 = rc.dim == 1 ? sample1d(pb.grid, box1, rc.t0) : sample2d(pb.grid, box2, rc.t0);
  } else if (rc.init_kind == "file") {
    require(rc, "init.file");
    pb.rho0 = read_density_file(rc.init_file, pb.grid, rc.t0);
  } else {
    raise(Errc::semantic_error, "unknown init kind '" + rc.init_kind + "'");
  }
  for (double v : pb.rho0.v)
    if (!(v >= 0.0)) raise(Errc::semantic_error, "initial density must be nonnegative");
  if (!(rc.t_end >= pb.rho0.time))
    raise(Errc::semantic_error, "t_end must not precede the initial time");

  if (command == "cns" || command == "sweep") {
    if (command == "cns") {
      require(rc, "pressure.eps");
      if (!(rc.gamma > 1.0)) raise(Errc::semantic_error, "pressure gamma must exceed 1");
    } else {
      require(rc, "pressure.eps_list");
      if (!(rc.gamma > 1.0)) raise(Errc::semantic_error, "pressure gamma must exceed 1");
    }
    pb.has_velocity = command == "cns";
    if (pb.has_velocity) {
      pb.u0 = Field(pb.grid, 0.0, pb.rho0.time);
      if (rc.velocity == "quasi") pb.u0.v = velocity_from_density(pb.rho0, pb.law).comp[0];
    }
  }
  return pb;
}

}  // namespace qslab
