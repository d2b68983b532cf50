#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <filesystem>
#include <string>
#include <vector>

#include "qslab.h"

namespace fs = std::filesystem;

TEST_CASE("version and status names") {
  CHECK(std::strlen(qslab_version()) > 0);
  CHECK(std::string(qslab_status_name(QSLAB_OK)) == "Ok");
  CHECK(std::string(qslab_status_name(QSLAB_DOMAIN_ERROR)) == "DomainError");
  CHECK(std::string(qslab_status_name(QSLAB_DEGENERATE_LAME)) == "DegenerateLame");
  CHECK(std::string(qslab_status_name(QSLAB_PARSE_ERROR)) == "ParseError");
  CHECK(std::string(qslab_status_name(QSLAB_NO_SCALING_INVARIANCE)) == "NoScalingInvariance");
}

TEST_CASE("exponents through the C surface") {
  qslab_pme_exponents e;
  REQUIRE(qslab_compute_pme_exponents(2.0, 1, &e) == QSLAB_OK);
  CHECK(e.gamma1 == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(e.beta_space == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(e.sigma_mass == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(e.m_c == 0.0);

  double v = -1.0;
  REQUIRE(qslab_time_exponent(2.0, 1, HUGE_VAL, &v) == QSLAB_OK);
  CHECK(v == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  REQUIRE(qslab_mass_exponent(2.0, 1, 1.0, &v) == QSLAB_OK);
  CHECK(v == 1.0);

  qslab_similarity_exponents s;
  REQUIRE(qslab_compute_similarity_exponents(2.0, 3.0, &s) == QSLAB_OK);
  CHECK(s.e_rho == 1.0);
  CHECK(s.e_u == 1.0);
  CHECK(s.e_x == 0.0);
}

TEST_CASE("failures set a status and a message") {
  qslab_pme_exponents e;
  CHECK(qslab_compute_pme_exponents(0.2, 3, &e) == QSLAB_EXTINCTION_REGIME);
  CHECK(std::strlen(qslab_last_error()) > 0);

  qslab_similarity_exponents s;
  CHECK(qslab_compute_similarity_exponents(2.0, 2.0, &s) == QSLAB_NO_SCALING_INVARIANCE);
  CHECK(qslab_compute_pme_exponents(2.0, 1, nullptr) == QSLAB_DOMAIN_ERROR);

  REQUIRE(qslab_compute_pme_exponents(2.0, 1, &e) == QSLAB_OK);
  CHECK(std::strlen(qslab_last_error()) == 0);
}

TEST_CASE("gamma window over the C surface") {
  int adm = -1;
  char buf[256];
  REQUIRE(qslab_gamma_window(2.0, 2.0, 2.0, 3, &adm, buf, sizeof buf) == QSLAB_OK);
  CHECK(adm == 1);
  CHECK(std::string(buf).find("3d") != std::string::npos);

  REQUIRE(qslab_gamma_window(9.0, 2.0, 2.0, 3, &adm, nullptr, 0) == QSLAB_OK);
  CHECK(adm == 0);
  CHECK(qslab_gamma_window(2.0, 2.0, 2.0, 7, &adm, nullptr, 0) == QSLAB_DOMAIN_ERROR);
}

TEST_CASE("config lifecycle") {
  const char* text =
      "[run]\ncommand = pme\n"
      "[law]\nmu_c = 0.5\nalpha = 2\n"
      "[grid]\nnx = 64\nx_lo = -4\nx_hi = 4\n"
      "[init]\nkind = barenblatt\nmass = 1\nt0 = 1\n"
      "[time]\nt_end = 1.05\n";
  qslab_config* cfg = nullptr;
  REQUIRE(qslab_config_parse(text, &cfg) == QSLAB_OK);
  REQUIRE(cfg != nullptr);

  char cmd[16];
  REQUIRE(qslab_config_command(cfg, cmd, sizeof cmd) == QSLAB_OK);
  CHECK(std::string(cmd) == "pme");

  CHECK(qslab_config_set(cfg, "time", "t_end", "1.02") == QSLAB_OK);

  const fs::path out = fs::temp_directory_path() / "qslab_capi_out";
  fs::remove_all(out);
  REQUIRE(qslab_dispatch(cfg, nullptr, out.string().c_str()) == QSLAB_OK);
  CHECK(fs::exists(out / "series.csv"));
  CHECK(fs::exists(out / "final.csv"));
  fs::remove_all(out);
  qslab_config_close(cfg);
}

TEST_CASE("config parse errors carry line information") {
  qslab_config* cfg = nullptr;
  CHECK(qslab_config_parse("[law]\nalpha\n", &cfg) == QSLAB_PARSE_ERROR);
  CHECK(std::string(qslab_last_error()).find("line 2") != std::string::npos);
  CHECK(cfg == nullptr);

  CHECK(qslab_config_open("no_such_config.ini", &cfg) == QSLAB_IO_ERROR);
  CHECK(qslab_config_parse(nullptr, &cfg) == QSLAB_DOMAIN_ERROR);
}

TEST_CASE("a config without a run command reports it") {
  qslab_config* cfg = nullptr;
  REQUIRE(qslab_config_parse("[law]\nalpha = 2\n", &cfg) == QSLAB_OK);
  char cmd[16];
  CHECK(qslab_config_command(cfg, cmd, sizeof cmd) == QSLAB_SEMANTIC_ERROR);
  qslab_config_close(cfg);
}

namespace {
struct Lines {
  std::vector<std::string> seen;
};
void collect(const char* line, void* user) {
  static_cast<Lines*>(user)->seen.emplace_back(line);
}
}  // namespace

TEST_CASE("the exponent verification suite runs through the C surface") {
  Lines lines;
  int failures = -1;
  REQUIRE(qslab_verify("exponents", 42, nullptr, collect, &lines, &failures) == QSLAB_OK);
  CHECK(failures == 0);
  REQUIRE(lines.seen.size() == 1);
  CHECK(lines.seen[0].find("C01") != std::string::npos);
  CHECK(lines.seen[0].find("PASS") != std::string::npos);

  CHECK(qslab_verify("bogus-suite", 42, nullptr, nullptr, nullptr, &failures) ==
        QSLAB_DOMAIN_ERROR);
}
