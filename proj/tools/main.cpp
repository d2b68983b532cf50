#include <cmath>
#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "qslab.h"

namespace {

int status_exit(qslab_status s) {
  std::fprintf(stderr, "error (%s): %s\n", qslab_status_name(s), qslab_last_error());
  return (s == QSLAB_PARSE_ERROR || s == QSLAB_IO_ERROR || s == QSLAB_SEMANTIC_ERROR) ? 2 : 1;
}

void print_value(const char* name, double v) { std::printf("%s = %.17g\n", name, v); }

int run_pipeline(const char* command, const std::string& config_path, const std::string& out_dir) {
  qslab_config* cfg = nullptr;
  qslab_status s = qslab_config_open(config_path.c_str(), &cfg);
  if (s != QSLAB_OK) return status_exit(s);
  s = qslab_dispatch(cfg, command, out_dir.empty() ? nullptr : out_dir.c_str());
  qslab_config_close(cfg);
  if (s != QSLAB_OK) return status_exit(s);
  std::printf("%s: done\n", command);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical laboratory for density-dependent viscosity laws, nonlinear "
               "diffusion, and the vanishing-pressure limit"};
  app.require_subcommand(1);

  double alpha = 2.0, theta = 0.0, gamma = 0.0;
  int dim = 1;
  auto* exponents = app.add_subcommand("exponents", "print closed-form exponents");
  exponents->add_option("--alpha", alpha, "power of the viscosity law")->capture_default_str();
  exponents->add_option("--dim", dim, "space dimension")->capture_default_str();
  auto* theta_opt = exponents->add_option("--theta", theta, "viscosity power for the scaling pair");
  auto* gamma_opt = exponents->add_option("--gamma", gamma, "pressure power for the scaling pair");
  theta_opt->needs(gamma_opt);
  gamma_opt->needs(theta_opt);

  std::string pme_config, pme_out;
  auto* pme = app.add_subcommand("pme", "run the nonlinear diffusion solver");
  pme->add_option("--config", pme_config, "config file")->required();
  pme->add_option("--out", pme_out, "output directory");

  std::string cns_config, cns_out;
  auto* cns = app.add_subcommand("cns", "run the 1D momentum solver");
  cns->add_option("--config", cns_config, "config file")->required();
  cns->add_option("--out", cns_out, "output directory");

  std::string sweep_config, sweep_out;
  auto* sweep = app.add_subcommand("sweep", "run the vanishing-pressure sweep");
  sweep->add_option("--config", sweep_config, "config file")->required();
  sweep->add_option("--out", sweep_out, "output directory");

  std::string suite = "all", verify_out;
  unsigned seed = 42;
  auto* verify = app.add_subcommand("verify", "run the acceptance checks");
  verify->add_option("--suite", suite, "all, exponents, barenblatt, pme-core, quasi, cns, exact")
      ->capture_default_str();
  verify->add_option("--seed", seed, "seed for the randomized trials")->capture_default_str();
  verify->add_option("--out", verify_out, "directory for verify_report.txt");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (exponents->parsed()) {
    qslab_pme_exponents pe;
    qslab_status s = qslab_compute_pme_exponents(alpha, dim, &pe);
    if (s != QSLAB_OK) return status_exit(s);
    print_value("gamma1", pe.gamma1);
    print_value("beta", pe.beta_space);
    print_value("sigma", pe.sigma_mass);
    print_value("m_c", pe.m_c);
    const double ps[] = {1.0, 2.0, HUGE_VAL};
    const char* tn[] = {"time_exp(1)", "time_exp(2)", "time_exp(inf)"};
    const char* mn[] = {"mass_exp(1)", "mass_exp(2)", "mass_exp(inf)"};
    for (int i = 0; i < 3; ++i) {
      double v;
      if ((s = qslab_time_exponent(alpha, dim, ps[i], &v)) != QSLAB_OK) return status_exit(s);
      print_value(tn[i], v);
      if ((s = qslab_mass_exponent(alpha, dim, ps[i], &v)) != QSLAB_OK) return status_exit(s);
      print_value(mn[i], v);
    }
    if (*theta_opt) {
      qslab_similarity_exponents se;
      if ((s = qslab_compute_similarity_exponents(theta, gamma, &se)) != QSLAB_OK)
        return status_exit(s);
      print_value("e_rho", se.e_rho);
      print_value("e_u", se.e_u);
      print_value("e_x", se.e_x);
    }
    return 0;
  }

  if (pme->parsed()) return run_pipeline("pme", pme_config, pme_out);
  if (cns->parsed()) return run_pipeline("cns", cns_config, cns_out);
  if (sweep->parsed()) return run_pipeline("sweep", sweep_config, sweep_out);

  if (verify->parsed()) {
    int failures = 0;
    qslab_status s = qslab_verify(
        suite.c_str(), seed, verify_out.empty() ? nullptr : verify_out.c_str(),
        [](const char* line, void*) {
          std::printf("%s\n", line);
          std::fflush(stdout);
        },
        nullptr, &failures);
    if (s != QSLAB_OK) return status_exit(s);
    if (failures > 0) {
      std::printf("%d criteria failed\n", failures);
      return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
  }

  return 2;
}
