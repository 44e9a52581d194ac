#ifndef LATTICEHEX_H
#define LATTICEHEX_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define LHX_API __declspec(dllexport)
#else
#define LHX_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lhx_status {
    LHX_OK = 0,
    LHX_E_INVALID_ARGUMENT = 1,
    LHX_E_NON_POSITIVE_X = 2,
    LHX_E_NON_POSITIVE_ALPHA = 3,
    LHX_E_TRUNCATION = 4,
    LHX_E_UNSUPPORTED_ORDER = 5,
    LHX_E_REDUCTION_DIVERGENCE = 6,
    LHX_E_RADIUS_TOO_LARGE = 7,
    LHX_E_TAIL_TOO_LARGE = 8,
    LHX_E_QUADRATURE_DIVERGENCE = 9,
    LHX_E_UNKNOWN_LEMMA = 10,
    LHX_E_PARSE = 11,
    LHX_E_NULL_POINTER = 12,
    LHX_E_OUT_OF_RANGE = 13,
    LHX_E_INTERNAL = 14
} lhx_status;

LHX_API const char* lhx_status_name(lhx_status s);

/* Message of the last failing call on this thread; "" after a success. */
LHX_API const char* lhx_last_error(void);

LHX_API const char* lhx_version(void);

/* Series truncation policy. A NULL config means the defaults everywhere. */
typedef struct lhx_config lhx_config;

LHX_API lhx_status lhx_config_create(lhx_config** out);
LHX_API lhx_status lhx_config_create_with(double rel_tol, int max_terms, double poisson_switch, lhx_config** out);
LHX_API void lhx_config_destroy(lhx_config* cfg);
LHX_API double lhx_config_rel_tol(const lhx_config* cfg);

/* Energies at z = x + iy. */
LHX_API lhx_status lhx_theta(const lhx_config* cfg, double alpha, double x, double y, double* out);
LHX_API lhx_status lhx_w(const lhx_config* cfg, double alpha, double b, double x, double y, double* out);
LHX_API lhx_status lhx_dx_w(const lhx_config* cfg, double alpha, double x, double y, double* out);
LHX_API lhx_status lhx_dy_w(const lhx_config* cfg, double alpha, double x, double y, double* out);
LHX_API lhx_status lhx_theta_difference(const lhx_config* cfg, double alpha, double a, double b, double x, double y,
                                        double* out);

/* order: 0 value, 1 dX, 2 dY, 3 dXY, 4 dXX */
LHX_API lhx_status lhx_jacobi_theta(const lhx_config* cfg, double X, double Y, int order, double* out);

/*
 * Reduction into the closure of {|z| > 1, 0 < x < 1/2}.
 * The generator word is written space separated into word (NUL terminated, truncated to
 * word_cap); word_len receives the full length without the terminator. word may be NULL.
 */
LHX_API lhx_status lhx_reduce(double x, double y, double* x_out, double* y_out, char* word, size_t word_cap,
                              size_t* word_len);

/* Potentials */
typedef struct lhx_potential lhx_potential;

/*
 * {"family": "gaussian" | "gaussian_diff" | "poly_gaussian" | "yukawa_diff" | "laplace_weighted",
 *  "alpha": .., "a": .., "b": ..,
 *  "weight": {"kind": "constant" | "exponential" | "power", "scale": .., "rate": ..},
 *  "laplace_family": "f" | "g"}
 */
LHX_API lhx_status lhx_potential_from_json(const char* json, lhx_potential** out);
LHX_API void lhx_potential_destroy(lhx_potential* p);
/* Borrowed; valid until the potential is destroyed. */
LHX_API const char* lhx_potential_name(const lhx_potential* p);

LHX_API lhx_status lhx_energy(const lhx_config* cfg, const lhx_potential* p, double x, double y, double* out);
/* radius <= 0 selects the default cutoff. */
LHX_API lhx_status lhx_energy_direct(const lhx_potential* p, double x, double y, double radius, double* out);

/* Minimization */
typedef struct lhx_outcome lhx_outcome;

LHX_API lhx_status lhx_minimize_w(const lhx_config* cfg, double alpha, double b, lhx_outcome** out);
LHX_API lhx_status lhx_minimize_theta_difference(const lhx_config* cfg, double alpha, double a, double b,
                                                 lhx_outcome** out);
LHX_API lhx_status lhx_minimize_potential(const lhx_config* cfg, const lhx_potential* p, lhx_outcome** out);
LHX_API void lhx_outcome_destroy(lhx_outcome* o);

LHX_API int lhx_outcome_is_minimizer(const lhx_outcome* o);
LHX_API int lhx_outcome_advisory(const lhx_outcome* o);
LHX_API lhx_status lhx_outcome_minimizer(const lhx_outcome* o, double* x, double* y, double* value,
                                         double* distance_to_hex);
LHX_API size_t lhx_outcome_witness_count(const lhx_outcome* o);
LHX_API lhx_status lhx_outcome_witness(const lhx_outcome* o, size_t i, double* y, double* value);
LHX_API int lhx_outcome_slope_sign(const lhx_outcome* o);

/* Phase scan */
typedef enum lhx_problem { LHX_PROBLEM_W = 0, LHX_PROBLEM_THETA_DIFFERENCE = 1 } lhx_problem;
typedef enum lhx_phase { LHX_PHASE_HEXAGONAL = 0, LHX_PHASE_NO_MINIMIZER = 1, LHX_PHASE_OTHER = 2 } lhx_phase;

typedef struct lhx_phase_table lhx_phase_table;

/* a is used by LHX_PROBLEM_THETA_DIFFERENCE only. threads = 0 uses every core. */
LHX_API lhx_status lhx_phase_scan(const lhx_config* cfg, lhx_problem problem, double a, const double* alphas,
                                  size_t n_alphas, const double* bs, size_t n_bs, unsigned threads,
                                  lhx_phase_table** out);
LHX_API void lhx_phase_table_destroy(lhx_phase_table* t);
LHX_API const char* lhx_phase_name(lhx_phase p);
LHX_API size_t lhx_phase_cell_count(const lhx_phase_table* t);
LHX_API lhx_status lhx_phase_cell(const lhx_phase_table* t, size_t i, double* alpha, double* b, lhx_phase* phase);
LHX_API size_t lhx_phase_boundary_count(const lhx_phase_table* t);
/* has_* is 0 when no such b occurred in the row; the value is then NaN. */
LHX_API lhx_status lhx_phase_boundary(const lhx_phase_table* t, size_t i, double* alpha, int* has_last_hexagonal,
                                      double* last_hexagonal_b, int* has_first_no_minimizer,
                                      double* first_no_minimizer_b);

/* Verification suite */
LHX_API size_t lhx_lemma_count(void);
LHX_API const char* lhx_lemma_id(size_t i);

typedef struct lhx_reports lhx_reports;

typedef struct lhx_report_view {
    const char* lemma_id;
    const char* group;
    const char* comparison; /* "<=", ">=", "~=" */
    double claimed;
    double computed;
    double tolerance;
    double refined; /* NaN without a refined grid */
    const char* grid;
    const char* note;
    int pass;
} lhx_report_view;

typedef struct lhx_verify_options {
    uint64_t seed;
    int random_points;
    unsigned threads;
} lhx_verify_options;

LHX_API lhx_verify_options lhx_verify_defaults(void);

/* ids may be NULL with n_ids = 0 for the full suite. opts may be NULL. */
LHX_API lhx_status lhx_verify(const lhx_config* cfg, const char* const* ids, size_t n_ids,
                              const lhx_verify_options* opts, lhx_reports** out);
LHX_API void lhx_reports_destroy(lhx_reports* r);
LHX_API size_t lhx_reports_count(const lhx_reports* r);
/* Strings in the view are borrowed from r. */
LHX_API lhx_status lhx_reports_get(const lhx_reports* r, size_t i, lhx_report_view* out);

#ifdef __cplusplus
}
#endif

#endif
