/* luxtrace: Luxemburg norms on variable-exponent Lebesgue spaces, partition
 * averaging operators, nuclear representations with trace formulas, and
 * toroidal pseudo-differential operators with spectral trace verification.
 *
 * All objects live behind opaque handles. Functions return lux_status; on any
 * failure the thread-local message from lux_last_error() describes the cause.
 * Handles are created by lux_*_create/factory calls and owned by the caller;
 * release them with the matching lux_*_release (safe on NULL).
 *
 * Complex scalars cross the boundary as separate re/im doubles or as parallel
 * re[]/im[] arrays. Exponent values use INFINITY for unbounded atoms.
 */
#ifndef LUXTRACE_H
#define LUXTRACE_H

#include <stdint.h>

#if defined(_WIN32)
#define LUX_API __declspec(dllexport)
#else
#define LUX_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lux_status {
  LUX_OK = 0,
  LUX_ERR_INVALID_ARGUMENT = 1,
  LUX_ERR_DOMAIN_MISMATCH = 2,
  LUX_ERR_PRECONDITION = 3,
  LUX_ERR_NONCONVERGENCE = 4,
  LUX_ERR_NUMERICAL = 5,
  LUX_ERR_INTERNAL = 6
} lux_status;

typedef struct lux_space lux_space;
typedef struct lux_function lux_function;
typedef struct lux_exponent lux_exponent;
typedef struct lux_partition lux_partition;
typedef struct lux_operator lux_operator;
typedef struct lux_rep lux_rep;
typedef struct lux_symbol lux_symbol;

typedef struct lux_norm_result {
  double value;
  int iterations;
  double bracket_width;
  /* 1 when the value is pinned by the essential supremum over atoms with
   * exponent INFINITY rather than by the modular equation. */
  int saturated_at_infinity;
} lux_norm_result;

typedef struct lux_holder_report {
  double lhs;  /* ||fg||_{s} */
  double rhs;  /* 2 ||f||_{p} ||g||_{q} */
  int holds;
} lux_holder_report;

typedef struct lux_oloff_report {
  double schatten;   /* singular-value quasi-norm ||T||_{S_r} at exponent 2 */
  double rep_bound;  /* sum of ||g_n||^r ||h_n||^r (r-th-power certificate) */
  int holds;         /* schatten <= rep_bound^{1/r} (1 + 1e-8) */
} lux_oloff_report;

typedef struct lux_bap_step {
  uint64_t partition_index;
  uint64_t cells;
  double error;  /* ||f - L_P f||_{p} */
} lux_bap_step;

typedef struct lux_summability_result {
  double sum;         /* sum over the box of ||sigma(.,xi)||_{p'}^r */
  double last_shell;  /* contribution of the outermost shell |xi|_inf = radius */
} lux_summability_result;

typedef struct lux_lidskii_scalars {
  double eigen_sum[2];    /* re, im */
  double matrix_trace[2];
  double symbol_trace[2];
  double d_eigen_matrix;
  double d_eigen_symbol;
  double d_matrix_symbol;
  double r;
  double tau;  /* NaN when the symbol carries no Bessel decay tag */
  int radius;
  int points_per_dim;
  int dim;
  int grothendieck_regime;   /* r <= 2/3 */
  int summability_warning;   /* Bessel tag present but r*tau <= dim */
} lux_lidskii_scalars;

/* ------------------------------------------------------------------ meta */

LUX_API const char* lux_version(void);
/* Message of the most recent failure on this thread; empty after success. */
LUX_API const char* lux_last_error(void);
LUX_API const char* lux_status_name(lux_status status);
/* Worker count for parallel reductions; results are identical for every
 * setting (fixed chunking). Clamped to [1, hardware]. */
LUX_API lux_status lux_set_threads(int threads);

/* ---------------------------------------------------------------- spaces */

LUX_API lux_status lux_space_create(int dim, uint64_t atoms, const double* coords,
                                    const double* weights, lux_space** out);
LUX_API lux_status lux_space_unit_interval(uint64_t atoms, lux_space** out);
LUX_API lux_status lux_space_torus(int dim, int points_per_dim, lux_space** out);
LUX_API void lux_space_release(lux_space* space);
LUX_API lux_status lux_space_dim(const lux_space* space, int* out);
LUX_API lux_status lux_space_atom_count(const lux_space* space, uint64_t* out);
LUX_API lux_status lux_space_total_mass(const lux_space* space, double* out);
/* Buffers sized atoms*dim and atoms respectively. */
LUX_API lux_status lux_space_coords(const lux_space* space, double* out);
LUX_API lux_status lux_space_weights(const lux_space* space, double* out);

/* ------------------------------------------------------------- functions */

/* im may be NULL for a real-valued function. */
LUX_API lux_status lux_function_create(const lux_space* space, const double* re,
                                       const double* im, lux_function** out);
LUX_API lux_status lux_function_constant(const lux_space* space, double re, double im,
                                         lux_function** out);
LUX_API void lux_function_release(lux_function* f);
LUX_API lux_status lux_function_size(const lux_function* f, uint64_t* out);
/* Either output may be NULL. */
LUX_API lux_status lux_function_values(const lux_function* f, double* re, double* im);
LUX_API lux_status lux_function_space(const lux_function* f, lux_space** out);

LUX_API lux_status lux_integrate(const lux_function* f, double* re, double* im);
/* Bilinear pairing <f,g> = integral of f*g (no conjugation). */
LUX_API lux_status lux_duality_pairing(const lux_function* f, const lux_function* g,
                                       double* re, double* im);

/* ------------------------------------------------------------- exponents */

LUX_API lux_status lux_exponent_create(const lux_space* space, const double* values,
                                       lux_exponent** out);
LUX_API lux_status lux_exponent_constant(const lux_space* space, double p0,
                                         lux_exponent** out);
/* Constant on every cell of the partition. */
LUX_API lux_status lux_exponent_piecewise(const lux_partition* cells,
                                          const double* cell_values, lux_exponent** out);
LUX_API void lux_exponent_release(lux_exponent* p);
LUX_API lux_status lux_exponent_values(const lux_exponent* p, double* out);
LUX_API lux_status lux_exponent_bounds(const lux_exponent* p, double* p_minus,
                                       double* p_plus);
LUX_API lux_status lux_exponent_conjugate(const lux_exponent* p, lux_exponent** out);
LUX_API lux_status lux_holder_triple_valid(const lux_exponent* s, const lux_exponent* p,
                                           const lux_exponent* q, double tol, int* out);

/* ------------------------------------------------------------ partitions */

/* cell_sizes has cell_count entries; indices holds the concatenated cells. */
LUX_API lux_status lux_partition_create(const lux_space* space, uint64_t cell_count,
                                        const uint64_t* cell_sizes,
                                        const uint64_t* indices, lux_partition** out);
LUX_API lux_status lux_partition_trivial(const lux_space* space, lux_partition** out);
LUX_API lux_status lux_partition_equal_intervals(const lux_space* space, int k, int axis,
                                                 lux_partition** out);
LUX_API lux_status lux_partition_level_sets(const lux_function* f, lux_partition** out);
LUX_API void lux_partition_release(lux_partition* p);
LUX_API lux_status lux_partition_cell_count(const lux_partition* p, uint64_t* out);
LUX_API lux_status lux_partition_cell_size(const lux_partition* p, uint64_t cell,
                                           uint64_t* out);
LUX_API lux_status lux_partition_cell(const lux_partition* p, uint64_t cell,
                                      uint64_t* indices);
LUX_API lux_status lux_partition_cell_mass(const lux_partition* p, uint64_t cell,
                                           double* out);
LUX_API lux_status lux_partition_refines(const lux_partition* coarse,
                                         const lux_partition* fine, int* out);
LUX_API lux_status lux_partition_common_refinement(const lux_partition* a,
                                                   const lux_partition* b,
                                                   lux_partition** out);

/* ----------------------------------------------------------------- norms */

/* May return HUGE_VAL when an INFINITY-exponent atom has |f| > 1. */
LUX_API lux_status lux_modular(const lux_function* f, const lux_exponent* p, double* out);
LUX_API lux_status lux_luxemburg_norm(const lux_function* f, const lux_exponent* p,
                                      double tol, lux_norm_result* out);
/* Sequence norm under counting measure; im may be NULL. */
LUX_API lux_status lux_seq_norm(uint64_t count, const double* re, const double* im,
                                const double* exponents, double tol,
                                lux_norm_result* out);
LUX_API lux_status lux_holder_check(const lux_function* f, const lux_function* g,
                                    const lux_exponent* p, const lux_exponent* q,
                                    const lux_exponent* s, double tol,
                                    lux_holder_report* out);

/* ---------------------------------------------------- averaging operators */

LUX_API lux_status lux_partition_operator(const lux_partition* p, lux_operator** out);
LUX_API lux_status lux_operator_identity(const lux_space* space, lux_operator** out);
LUX_API void lux_operator_release(lux_operator* op);
LUX_API lux_status lux_operator_space(const lux_operator* op, lux_space** out);
LUX_API lux_status lux_operator_rank_bound(const lux_operator* op, uint64_t* out);
/* Row-major atoms x atoms buffers; either may be NULL. */
LUX_API lux_status lux_operator_matrix(const lux_operator* op, double* re, double* im);
LUX_API lux_status lux_operator_apply(const lux_operator* op, const lux_function* f,
                                      lux_function** out);
/* Sampled lower bound on the operator norm; argmax (optional) receives the
 * best unit-norm sample. Deterministic in (seed, trials). */
LUX_API lux_status lux_operator_norm_estimate(const lux_operator* op,
                                              const lux_exponent* p, int trials,
                                              uint64_t seed, double* lower_bound,
                                              lux_function** argmax);
/* chain is an array of chain_len partitions, increasing in refinement order;
 * steps receives chain_len entries. */
LUX_API lux_status lux_bap_demo(const lux_function* f, const lux_exponent* p,
                                const lux_partition* const* chain, uint64_t chain_len,
                                lux_bap_step* steps);

/* --------------------------------------------------- nuclear representations */

/* terms entries from g[] (output side) and h[] (input side). */
LUX_API lux_status lux_rep_create(uint64_t terms, const lux_function* const* g,
                                  const lux_function* const* h, lux_rep** out);
LUX_API void lux_rep_release(lux_rep* rep);
LUX_API lux_status lux_rep_term_count(const lux_rep* rep, uint64_t* out);
LUX_API lux_status lux_rep_out_space(const lux_rep* rep, lux_space** out);
LUX_API lux_status lux_rep_in_space(const lux_rep* rep, lux_space** out);
LUX_API lux_status lux_rep_apply(const lux_rep* rep, const lux_function* f,
                                 lux_function** out);
/* Row-major out_atoms x in_atoms kernel k(x_i, y_j); either may be NULL. */
LUX_API lux_status lux_rep_kernel(const lux_rep* rep, double* re, double* im);
LUX_API lux_status lux_rep_trace(const lux_rep* rep, double* re, double* im);
LUX_API lux_status lux_rep_quasinorm_sum(const lux_rep* rep, double r,
                                         const lux_exponent* p_out,
                                         const lux_exponent* p_in_conj, double* out);
/* Schatten quasi-norm of the kernel operator in the weighted L2 geometry. */
LUX_API lux_status lux_rep_schatten(const lux_rep* rep, double r, double* out);
LUX_API lux_status lux_oloff_check(const lux_rep* rep, double r, lux_oloff_report* out);

/* ------------------------------------------------------------------ torus */

/* Table is row-major atoms x lattice over grid x frequency box; lattice
 * points run lexicographically with each coordinate in -radius..radius.
 * multiplier declares (and verifies) x-independence. */
LUX_API lux_status lux_symbol_create(int dim, int points_per_dim, int radius,
                                     const double* re, const double* im, int multiplier,
                                     lux_symbol** out);
/* x-independent symbol from lattice-sized value arrays. */
LUX_API lux_status lux_symbol_multiplier(int dim, int points_per_dim, int radius,
                                         const double* re, const double* im,
                                         lux_symbol** out);
/* sigma(xi) = (1 + 4 pi^2 |xi|^2)^(-tau/2). */
LUX_API lux_status lux_symbol_bessel(double tau, int dim, int points_per_dim, int radius,
                                     lux_symbol** out);
/* sigma(x,xi) = alpha(x) sigma0(xi); sigma0 must be x-independent. */
LUX_API lux_status lux_symbol_compose_multiplier(const lux_function* alpha,
                                                 const lux_symbol* sigma0,
                                                 lux_symbol** out);
LUX_API void lux_symbol_release(lux_symbol* sym);
LUX_API lux_status lux_symbol_dims(const lux_symbol* sym, int* dim, int* points_per_dim,
                                   int* radius, uint64_t* atoms, uint64_t* lattice);
LUX_API lux_status lux_symbol_space(const lux_symbol* sym, lux_space** out);
/* Row-major atoms x lattice buffers; either may be NULL. */
LUX_API lux_status lux_symbol_table(const lux_symbol* sym, double* re, double* im);
/* NaN when the symbol has no Bessel decay tag. */
LUX_API lux_status lux_symbol_tau(const lux_symbol* sym, double* tau);

LUX_API lux_status lux_symbol_trace(const lux_symbol* sym, double* re, double* im);
LUX_API lux_status lux_symbol_summability(const lux_symbol* sym, double r,
                                          const lux_exponent* p_conj,
                                          lux_summability_result* out);
/* True iff r*tau > n, the convergence criterion for the Bessel family. */
LUX_API lux_status lux_summability_predicate(double r, double tau, int n, int* out);
/* Dense operator of the symbol; requires points_per_dim >= 2*radius+1. */
LUX_API lux_status lux_quantize(const lux_symbol* sym, lux_operator** out);
/* One term per lattice point: g_xi(x) = e^{2 pi i x.xi} sigma(x,xi),
 * h_xi(y) = e^{-2 pi i y.xi}. */
LUX_API lux_status lux_symbol_nuclear_decomposition(const lux_symbol* sym, lux_rep** out);
/* All eigenvalues (atom count of them), descending modulus then ascending
 * argument, in the weighted geometry of the operator's space. */
LUX_API lux_status lux_spectrum(const lux_operator* op, double* re, double* im);
/* Three trace routes with pairwise discrepancies. Eigenvalue buffers are
 * optional; eig_count (optional) receives the number available. */
LUX_API lux_status lux_lidskii_report(const lux_symbol* sym, double r,
                                      lux_lidskii_scalars* out, double* eig_re,
                                      double* eig_im, uint64_t eig_capacity,
                                      uint64_t* eig_count);

/* -------------------------------------------------------------- transforms */

/* Forward coefficients over the box of the given radius: buffers sized
 * (2*radius+1)^dim in lattice order. The function must live on a torus grid
 * with points_per_dim >= 2*radius+1 per dimension. */
LUX_API lux_status lux_dft_forward(const lux_function* f, int dim, int points_per_dim,
                                   int radius, double* re, double* im);
LUX_API lux_status lux_dft_inverse(int dim, int points_per_dim, int radius,
                                   const double* re, const double* im,
                                   lux_function** out);

#ifdef __cplusplus
}
#endif

#endif /* LUXTRACE_H */
