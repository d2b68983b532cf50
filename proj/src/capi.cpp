#include "qslab.h"

#include <cstring>
#include <exception>
#include <string>

#include "qslab/cns.hpp"
#include "qslab/config.hpp"
#include "qslab/dispatch.hpp"
#include "qslab/error.hpp"
#include "qslab/exact.hpp"
#include "qslab/verify.hpp"

struct qslab_config {
  qslab::ConfigDoc doc;
};

namespace {

thread_local std::string g_last_error;

qslab_status to_status(qslab::Errc c) { return static_cast<qslab_status>(static_cast<int>(c)); }

template <class F>
qslab_status guarded(F&& fn) {
  try {
    fn();
    g_last_error.clear();
    return QSLAB_OK;
  } catch (const qslab::Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return QSLAB_INTERNAL;
  } catch (...) {
    g_last_error = "unknown failure";
    return QSLAB_INTERNAL;
  }
}

qslab_status null_arg(const char* what) {
  g_last_error = std::string(what) + " must not be null";
  return QSLAB_DOMAIN_ERROR;
}

void copy_out(const std::string& s, char* buf, size_t cap) {
  if (!buf || cap == 0) return;
  size_t n = s.size() < cap - 1 ? s.size() : cap - 1;
  std::memcpy(buf, s.data(), n);
  buf[n] = '\0';
}

}  // namespace

extern "C" {

const char* qslab_version(void) { return "0.1.0"; }

const char* qslab_status_name(qslab_status s) {
  if (s == QSLAB_OK) return "Ok";
  return qslab::errc_name(static_cast<qslab::Errc>(static_cast<int>(s)));
}

const char* qslab_last_error(void) { return g_last_error.c_str(); }

qslab_status qslab_config_open(const char* path, qslab_config** out) {
  if (!path) return null_arg("path");
  if (!out) return null_arg("out");
  *out = nullptr;
  return guarded([&] { *out = new qslab_config{qslab::load_config_file(path)}; });
}

qslab_status qslab_config_parse(const char* text, qslab_config** out) {
  if (!text) return null_arg("text");
  if (!out) return null_arg("out");
  *out = nullptr;
  return guarded([&] { *out = new qslab_config{qslab::parse_config_text(text)}; });
}

qslab_status qslab_config_set(qslab_config* cfg, const char* section, const char* key,
                              const char* value) {
  if (!cfg) return null_arg("cfg");
  if (!section || !key || !value) return null_arg("section/key/value");
  return guarded([&] { qslab::set_config_value(cfg->doc, section, key, value); });
}

qslab_status qslab_config_command(const qslab_config* cfg, char* buf, size_t cap) {
  if (!cfg) return null_arg("cfg");
  if (!buf || cap == 0) return null_arg("buf");
  return guarded([&] {
    auto sec = cfg->doc.sections.find("run");
    if (sec == cfg->doc.sections.end() || !sec->second.count("command"))
      qslab::raise(qslab::Errc::semantic_error, "config has no [run] command");
    copy_out(sec->second.at("command").value, buf, cap);
  });
}

void qslab_config_close(qslab_config* cfg) { delete cfg; }

qslab_status qslab_dispatch(const qslab_config* cfg, const char* command, const char* out_dir) {
  if (!cfg) return null_arg("cfg");
  return guarded([&] {
    qslab::dispatch(cfg->doc, command ? command : "", out_dir ? out_dir : "");
  });
}

qslab_status qslab_compute_pme_exponents(double alpha, int dim, qslab_pme_exponents* out) {
  if (!out) return null_arg("out");
  return guarded([&] {
    auto e = qslab::pme_exponents(alpha, dim);
    *out = {e.gamma1, e.beta_space, e.sigma_mass, e.m_c};
  });
}

qslab_status qslab_time_exponent(double alpha, int dim, double p, double* out) {
  if (!out) return null_arg("out");
  return guarded([&] { *out = qslab::pme_exponents(alpha, dim).time_exp(p); });
}

qslab_status qslab_mass_exponent(double alpha, int dim, double p, double* out) {
  if (!out) return null_arg("out");
  return guarded([&] { *out = qslab::pme_exponents(alpha, dim).mass_exp(p); });
}

qslab_status qslab_compute_similarity_exponents(double theta, double gamma,
                                                qslab_similarity_exponents* out) {
  if (!out) return null_arg("out");
  return guarded([&] {
    auto e = qslab::similarity_exponents(theta, gamma);
    *out = {e.e_rho, e.e_u, e.e_x};
  });
}

qslab_status qslab_gamma_window(double gamma, double nu1, double nu2, int dim, int* admissible,
                                char* windows_buf, size_t cap) {
  if (!admissible) return null_arg("admissible");
  return guarded([&] {
    auto adm = qslab::cns::gamma_window(gamma, nu1, nu2, dim);
    *admissible = adm.admissible ? 1 : 0;
    if (windows_buf && cap > 0) {
      std::string joined;
      for (const auto& w : adm.windows_hit) {
        if (!joined.empty()) joined += "; ";
        joined += w;
      }
      copy_out(joined, windows_buf, cap);
    }
  });
}

qslab_status qslab_verify(const char* suite, unsigned seed, const char* out_dir,
                          qslab_verify_line_fn on_line, void* user, int* failures) {
  if (!suite) return null_arg("suite");
  return guarded([&] {
    auto results = qslab::verify::run_suite(
        suite, seed, out_dir ? out_dir : "", [&](const qslab::verify::CheckResult& r) {
          if (on_line) {
            std::string line = qslab::verify::format_line(r);
            on_line(line.c_str(), user);
          }
        });
    int bad = 0;
    for (const auto& r : results)
      if (!r.pass) ++bad;
    if (failures) *failures = bad;
  });
}

}  // extern "C"
