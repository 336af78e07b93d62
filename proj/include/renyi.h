/*
 * renyi.h -- C interface to the renyi-lab numerical library.
 *
 * Quantum Renyi (alpha,z)-divergences, sandwiched Renyi divergences,
 * Hoeffding anti-divergences and strong-converse-exponent estimation on
 * positive semi-definite operators, plus diagonal models standing in for
 * infinite-dimensional operators via truncation ladders.
 *
 * Conventions:
 *   - All logarithms are natural (nats).
 *   - Extended-real results are returned as a double (which may be +/-HUGE_VAL)
 *     together with a reason code (renyi_reason).
 *   - Every function returns a renyi_status; on failure, renyi_last_error()
 *     gives a human-readable message for the calling thread.
 *   - Handles are opaque and must be released with the matching _destroy call.
 */

#ifndef RENYI_H
#define RENYI_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct renyi_op renyi_op;       /* finite Hermitian PSD operator */
typedef struct renyi_model renyi_model; /* diagonal eigenvalue model */

typedef enum {
  RENYI_OK = 0,
  RENYI_ERR_INVALID = 1, /* bad arguments / invalid input */
  RENYI_ERR_NUMERIC = 2  /* numerical failure (solver, cross-check) */
} renyi_status;

typedef enum {
  RENYI_FINITE = 0,
  RENYI_SUPPORT_VIOLATION = 1,
  RENYI_LADDER_DIVERGENT = 2,
  RENYI_ENDPOINT_CONVENTION = 3,
  RENYI_NOT_EVALUATED = 4
} renyi_reason;

typedef enum {
  RENYI_VERDICT_CONVERGED = 0,
  RENYI_VERDICT_DIVERGING = 1,
  RENYI_VERDICT_INCONCLUSIVE = 2
} renyi_verdict;

/* Message describing the most recent failure on this thread. */
const char* renyi_last_error(void);

/* ---- operators -------------------------------------------------------- */

/* Dense dim x dim Hermitian matrix, row-major; im may be NULL for real
 * matrices.  The matrix must be PSD up to round-off. */
renyi_status renyi_op_create(int dim, const double* re, const double* im,
                             renyi_op** out);
renyi_status renyi_op_create_diag(int dim, const double* diag, renyi_op** out);
void renyi_op_destroy(renyi_op* op);
int renyi_op_dim(const renyi_op* op);
renyi_status renyi_op_trace(const renyi_op* op, double* out);

/* ---- diagonal models --------------------------------------------------- */

/* family: "power" (param = beta), "superpower" (param = gamma),
 * "geometric" (param = r), "finite" (values/n_values).  normalize != 0 scales
 * the sequence so the infinite trace is 1 when the series converges. */
renyi_status renyi_model_create(const char* family, double param,
                                const double* values, int n_values,
                                int normalize, renyi_model** out);
void renyi_model_destroy(renyi_model* m);
renyi_status renyi_model_realize(const renyi_model* m, int level,
                                 renyi_op** out);

/* ---- divergences ------------------------------------------------------- */

renyi_status renyi_q_alpha_z(const renyi_op* rho, const renyi_op* sigma,
                             double alpha, double z, double* value,
                             int* reason);
renyi_status renyi_log_q_alpha_z(const renyi_op* rho, const renyi_op* sigma,
                                 double alpha, double z, double* value,
                                 int* reason);
renyi_status renyi_d_alpha_z(const renyi_op* rho, const renyi_op* sigma,
                             double alpha, double z, double* value,
                             int* reason);
renyi_status renyi_d_tilde(const renyi_op* rho, const renyi_op* sigma,
                           double alpha, double z, double* value, int* reason);
renyi_status renyi_d_max(const renyi_op* rho, const renyi_op* sigma,
                         double* value, int* reason);
renyi_status renyi_relative_entropy(const renyi_op* rho, const renyi_op* sigma,
                                    double* value, int* reason);
renyi_status renyi_renyi_entropy(const renyi_op* rho, double alpha,
                                 double* value);

/* ---- truncation ladders ------------------------------------------------ */

/* Ladder over basis cutoffs for a pair of diagonal models.  values/reasons
 * must hold n_levels entries. */
renyi_status renyi_ladder_models(const renyi_model* rho,
                                 const renyi_model* sigma, double alpha,
                                 double z, const int* levels, int n_levels,
                                 double conv_tol, double div_cap,
                                 double* values, int* reasons, int* verdict,
                                 double* limit, double* est_error);

/* Ladder over spectral windows of sigma for a matrix pair.  values/reasons
 * must hold k_max entries; *n_out receives the number filled. */
renyi_status renyi_ladder_matrices(const renyi_op* rho, const renyi_op* sigma,
                                   double alpha, double z, int k_max,
                                   double conv_tol, double div_cap,
                                   double* values, int* reasons, int* n_out,
                                   int* verdict, double* limit,
                                   double* est_error);

/* ---- variational certificates ------------------------------------------ */

/* Evaluates the explicit optimizer plus the identity witness and reports the
 * best objective, the closed-form Q, the relative gap and the verdict. */
renyi_status renyi_var_certificate(const renyi_op* rho, const renyi_op* sigma,
                                   double alpha, double z,
                                   double* best_objective, double* q,
                                   double* gap_rel, int* certified);

/* ---- Hoeffding anti-divergences ---------------------------------------- */

/* psi-tilde(u); endpoints follow the conventions psi-tilde(0) = log Tr rho,
 * psi-tilde(1) = D_max. */
renyi_status renyi_psi_tilde(const renyi_op* rho, const renyi_op* sigma,
                             double u, double* value, int* reason);
renyi_status renyi_psi_tilde_model(const renyi_model* rho,
                                   const renyi_model* sigma, double u,
                                   double* value, int* reason);

/* H_r (sup over (0,1)) and H^_r (sup over [0,1]) with the maximizing u. */
renyi_status renyi_hoeffding(const renyi_op* rho, const renyi_op* sigma,
                             double r, double* h_star, double* h_hat,
                             double* argmax_u, int* star_reason,
                             int* hat_reason);
renyi_status renyi_hoeffding_model(const renyi_model* rho,
                                   const renyi_model* sigma, double r,
                                   double* h_star, double* h_hat,
                                   double* argmax_u, int* star_reason,
                                   int* hat_reason);

/* Generalized kappa-cutoff rate; when the 3-point regularity stencil fails,
 * *regular is 0 and [lower, upper] brackets the rate. */
renyi_status renyi_cutoff(const renyi_op* rho, const renyi_op* sigma,
                          double kappa, int* regular, double* value,
                          double* lower, double* upper);

/* ---- discrimination ----------------------------------------------------- */

/* Optimal randomized Neyman-Pearson test for n i.i.d. copies of a normalized
 * classical pair at type II rate r. */
renyi_status renyi_np_sweep(int m, const double* p, const double* q, int n,
                            double r, double* gamma, double* beta,
                            double* log_gamma);

/* -(1/len) log gamma over n_grid plus the extrapolated limit. */
renyi_status renyi_sc_estimate(int m, const double* p, const double* q,
                               double r, const int* n_grid, int len,
                               double* exponents, double* extrapolated);

/* Best searched measured Renyi divergence rate on up to n copies. */
renyi_status renyi_measured_best(const renyi_op* rho, const renyi_op* sigma,
                                 double alpha, int n, uint64_t seed,
                                 double* best, double* gap);

/* One Haar-random-channel DPI trial; *ok is 1 when the divergence did not
 * increase beyond 1e-8. */
renyi_status renyi_dpi_trial(const renyi_op* rho, const renyi_op* sigma,
                             double alpha, int d_out, int n_kraus,
                             uint64_t seed, double* d_before, double* d_after,
                             int* ok);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* RENYI_H */
