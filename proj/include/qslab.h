#ifndef QSLAB_H
#define QSLAB_H

/* C interface to the quasi-solution laboratory: exponent calculators, the
 * configured solver pipelines, and the built-in verification suite. All
 * functions return QSLAB_OK on success; on failure qslab_last_error() holds
 * a message for the calling thread. */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qslab_status {
  QSLAB_OK = 0,
  QSLAB_DOMAIN_ERROR = 1,
  QSLAB_DEGENERATE_LAME = 2,
  QSLAB_VACUUM_SINGULAR = 3,
  QSLAB_EXTINCTION_REGIME = 4,
  QSLAB_NO_SCALING_INVARIANCE = 5,
  QSLAB_STABILITY_VIOLATION = 6,
  QSLAB_INCONSISTENT_TRIPLE = 7,
  QSLAB_PARSE_ERROR = 8,
  QSLAB_SEMANTIC_ERROR = 9,
  QSLAB_IO_ERROR = 10,
  QSLAB_NAN_ABORT = 11,
  QSLAB_INTERNAL = 12
} qslab_status;

const char* qslab_version(void);

/* Stable name of a status code, e.g. "DomainError". */
const char* qslab_status_name(qslab_status s);

/* Message of the most recent failing call on this thread ("" if none). */
const char* qslab_last_error(void);

/* ---- configuration documents ------------------------------------------- */

typedef struct qslab_config qslab_config;

qslab_status qslab_config_open(const char* path, qslab_config** out);
qslab_status qslab_config_parse(const char* text, qslab_config** out);

/* Insert or overwrite one key. */
qslab_status qslab_config_set(qslab_config* cfg, const char* section, const char* key,
                              const char* value);

/* Copies the [run] command into buf (truncating); fails if it is absent. */
qslab_status qslab_config_command(const qslab_config* cfg, char* buf, size_t cap);

void qslab_config_close(qslab_config* cfg);

/* Runs one pipeline (command: "pme", "cns", or "sweep"; pass NULL to use the
 * [run] command key) and writes its CSV and report artifacts under out_dir
 * (NULL defers to [output] dir, then "out"). */
qslab_status qslab_dispatch(const qslab_config* cfg, const char* command, const char* out_dir);

/* ---- closed-form exponents ---------------------------------------------- */

typedef struct qslab_pme_exponents {
  double gamma1;     /* sup-norm decay exponent */
  double beta_space; /* support spreading exponent */
  double sigma_mass; /* mass exponent in the L1 -> Linf bound */
  double m_c;        /* critical fast-diffusion exponent */
} qslab_pme_exponents;

qslab_status qslab_compute_pme_exponents(double alpha, int dim, qslab_pme_exponents* out);

/* L1 -> Lp smoothing exponents; p may be HUGE_VAL for the sup-norm limit. */
qslab_status qslab_time_exponent(double alpha, int dim, double p, double* out);
qslab_status qslab_mass_exponent(double alpha, int dim, double p, double* out);

typedef struct qslab_similarity_exponents {
  double e_rho, e_u, e_x;
} qslab_similarity_exponents;

qslab_status qslab_compute_similarity_exponents(double theta, double gamma,
                                                qslab_similarity_exponents* out);

/* Adiabatic-exponent admissibility for viscosity bounds nu1, nu2 in dimension
 * dim (2 or 3). admissible receives 0 or 1; when windows_buf is non-NULL the
 * matched window descriptions are copied into it, ';'-separated. */
qslab_status qslab_gamma_window(double gamma, double nu1, double nu2, int dim, int* admissible,
                                char* windows_buf, size_t cap);

/* ---- verification suite -------------------------------------------------- */

typedef void (*qslab_verify_line_fn)(const char* line, void* user);

/* Runs a verification suite ("all", "exponents", "barenblatt", "pme-core",
 * "quasi", "cns", "exact"), streaming one formatted line per criterion to
 * on_line. failures receives the number of failed criteria. When out_dir is
 * non-NULL and nonempty a verify_report.txt is written there. */
qslab_status qslab_verify(const char* suite, unsigned seed, const char* out_dir,
                          qslab_verify_line_fn on_line, void* user, int* failures);

#ifdef __cplusplus
}
#endif

#endif /* QSLAB_H */
