#ifndef GEGENBALL_H
#define GEGENBALL_H

/* C interface to the gegenball library. All functions return a gb_status;
 * on failure gb_last_error() describes the problem (thread-local, valid until
 * the next call on the same thread). Strings returned through char** are
 * owned by the caller and released with gb_free_string. */

#include <stddef.h>
#include <stdint.h>

#if defined(GEGENBALL_BUILD)
#define GB_API __attribute__((visibility("default")))
#else
#define GB_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  GB_OK = 0,
  GB_INVALID_ARGUMENT = 1,
  GB_DOMAIN_ERROR = 2,
  GB_NUMERICAL_ERROR = 3,
  GB_INTERNAL_ERROR = 4
} gb_status;

typedef enum { GB_BALL = 0, GB_SIMPLEX = 1 } gb_domain;

typedef enum { GB_FORMAT_CSV = 0, GB_FORMAT_JSON = 1 } gb_format;

typedef struct gb_context gb_context;

GB_API const char* gb_version(void);
GB_API const char* gb_last_error(void);
GB_API void gb_free_string(char* s);

/* kappa has d entries. */
GB_API gb_status gb_context_create(gb_domain domain, int d, const double* kappa, double mu, double nu,
                                   gb_context** out);
GB_API void gb_context_destroy(gb_context* ctx);

/* Points are arrays of d coordinates. */
GB_API gb_status gb_weight(const gb_context* ctx, const double* x, double* out);
/* Squared norm of the (n, j) basis element of the context's domain. */
GB_API gb_status gb_basis_norm(const gb_context* ctx, int n, int j, double* out);
GB_API gb_status gb_basis_dimension(const gb_context* ctx, int n, size_t* out);
/* Reproducing kernel P_n(x, y) by the concise integral; resolution 0 is the
 * smallest exact node count. */
GB_API gb_status gb_kernel(const gb_context* ctx, int n, const double* x, const double* y, int resolution,
                           double* out);
/* P_n(x, y) summed over an orthonormal basis. */
GB_API gb_status gb_kernel_direct(const gb_context* ctx, int n, const double* x, const double* y, double* out);
GB_API gb_status gb_cesaro_kernel(const gb_context* ctx, int n, double delta, const double* x, const double* y,
                                  double* out);
/* Ball only; 0 < r < 1. */
GB_API gb_status gb_poisson_kernel(const gb_context* ctx, double r, const double* x, const double* y, double* out);

GB_API gb_status gb_report_basis(const gb_context* ctx, int max_degree, gb_format fmt, char** out);
/* method: direct, concise, folded, oracle, both, all. */
GB_API gb_status gb_report_kernel(const gb_context* ctx, int n, const double* x, const double* y, const char* method,
                                  int resolution, gb_format fmt, char** out);
GB_API gb_status gb_report_expand(const gb_context* ctx, const char* function, int max_degree, int resolution,
                                  gb_format fmt, char** out);
GB_API gb_status gb_report_cesaro(const gb_context* ctx, const int* ns, size_t n_count, const double* deltas,
                                  size_t delta_count, int resolution, gb_format fmt, char** out);
GB_API gb_status gb_report_poisson(const gb_context* ctx, const double* rs, size_t r_count, const char* function,
                                   int resolution, gb_format fmt, char** out);
GB_API gb_status gb_report_rule(const gb_context* ctx, int exact_degree, char** out);

typedef struct {
  /* Dimensions of the acceptance grid to sweep; NULL means {2, 3}. */
  const int* dims;
  size_t dim_count;
  /* When non-NULL, run on this single configuration instead of the grid. */
  const gb_context* config;
  /* Comma-separated check names; NULL or "" runs all. */
  const char* checks;
  /* Replace the closed-form norm by a slightly wrong one. */
  int corrupt_norm;
  uint64_t seed;
} gb_verify_options;

GB_API void gb_verify_options_init(gb_verify_options* opts);
/* Comma-separated list of the check names, in run order. */
GB_API const char* gb_check_names(void);
/* all_passed may be NULL. A failing check is not an error: the call still
 * returns GB_OK. */
GB_API gb_status gb_report_verify(const gb_verify_options* opts, gb_format fmt, char** out, int* all_passed);

#ifdef __cplusplus
}
#endif

#endif
