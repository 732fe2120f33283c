#ifndef CESENT_CESENT_H_
#define CESENT_CESENT_H_

/* Shannon entropies of the eigenstates of two conditionally exactly solvable
 * potentials isospectral to the harmonic oscillator (a radial 3-D pair and a
 * 1-D pair), with the entropic uncertainty (BBM) check.
 *
 * All functions return a cesent_status. On failure the thread-local message of
 * cesent_last_error() describes the cause. Handles are opaque and immutable
 * after creation; concurrent use of different or of const handles is safe. */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(CESENT_BUILDING_LIBRARY)
#define CESENT_API __attribute__((visibility("default")))
#else
#define CESENT_API
#endif

typedef enum cesent_status {
  CESENT_OK = 0,
  CESENT_ERR_INVALID_ARGUMENT = 1,
  CESENT_ERR_NON_CONVERGENCE = 2,
  CESENT_ERR_GRID_TOO_COARSE = 3,
  CESENT_ERR_ILL_CONDITIONED = 4,
  CESENT_ERR_FIT_FAILURE = 5,
  CESENT_ERR_PARSEVAL = 6,
  CESENT_ERR_INTERNAL = 99
} cesent_status;

typedef enum cesent_family { CESENT_RADIAL3D = 0, CESENT_LINEAR1D = 1 } cesent_family;
typedef enum cesent_sector { CESENT_PLUS = 0, CESENT_MINUS = 1 } cesent_sector;

/* One eigenstate. l is used by the radial family only; m is always 0. */
typedef struct cesent_state_spec {
  cesent_family family;
  cesent_sector sector;
  int n;
  int l;
} cesent_state_spec;

typedef struct cesent_report {
  cesent_state_spec spec;
  double s_pos;
  double s_mom;
  double sum;
  int dimension;
  double bbm_bound;
  double margin;
  double err_pos;
  double err_mom;
  double position_norm;
  double momentum_norm;
  int suspected_erratum;
  int bbm_satisfied;
} cesent_report;

typedef struct cesent_config cesent_config;
typedef struct cesent_amplitude cesent_amplitude;
typedef struct cesent_table cesent_table;

CESENT_API const char* cesent_version(void);
CESENT_API const char* cesent_status_string(cesent_status status);
/* Message for the most recent failure on the calling thread ("" if none). */
CESENT_API const char* cesent_last_error(void);

/* Quadrature configuration. Defaults: rel_tol 1e-10, abs_tol 1e-12,
 * truncation radius 12, max_panels 4096. */
CESENT_API cesent_status cesent_config_create(cesent_config** out);
CESENT_API void cesent_config_destroy(cesent_config* cfg);
CESENT_API cesent_status cesent_config_set_rel_tol(cesent_config* cfg, double rel_tol);
CESENT_API cesent_status cesent_config_set_abs_tol(cesent_config* cfg, double abs_tol);
CESENT_API cesent_status cesent_config_set_truncation_radius(cesent_config* cfg, double radius);
CESENT_API cesent_status cesent_config_set_max_panels(cesent_config* cfg, int max_panels);
CESENT_API cesent_status cesent_config_get(const cesent_config* cfg, double* rel_tol, double* abs_tol,
                                           double* truncation_radius, int* max_panels);

CESENT_API cesent_status cesent_validate_spec(const cesent_state_spec* spec);
CESENT_API cesent_status cesent_energy(const cesent_state_spec* spec, double* out);
/* D (1 + ln pi); NaN for D < 1. */
CESENT_API double cesent_bbm_bound(int dimension);

/* Reduced radial wavefunction chi(r) or 1-D wavefunction psi(x). */
CESENT_API cesent_status cesent_psi_position(const cesent_state_spec* spec, double x, double* out);
/* Truncation radius used for position-space integrals of this state. */
CESENT_API cesent_status cesent_state_radius(const cesent_config* cfg, const cesent_state_spec* spec, double* out);

/* Entropies in nats; bbm_satisfied iff margin >= -1e-6. */
CESENT_API cesent_status cesent_entropy_report(const cesent_config* cfg, const cesent_state_spec* spec,
                                               cesent_report* out);

/* Momentum amplitude. eval returns the amplitude including its global phase;
 * density returns |amplitude|^2 (reduced amplitude for the radial family). */
CESENT_API cesent_status cesent_amplitude_create(const cesent_config* cfg, const cesent_state_spec* spec,
                                                 cesent_amplitude** out);
CESENT_API void cesent_amplitude_destroy(cesent_amplitude* amp);
CESENT_API cesent_status cesent_amplitude_eval(const cesent_amplitude* amp, double p, double* re, double* im);
CESENT_API cesent_status cesent_amplitude_density(const cesent_amplitude* amp, double p, double* out);
CESENT_API cesent_status cesent_amplitude_radius(const cesent_amplitude* amp, double* out);
/* 1 if the amplitude comes from direct numerical transform, 0 for closed form. */
CESENT_API cesent_status cesent_amplitude_is_direct(const cesent_amplitude* amp, int* out);

/* Published tables 1, 2, 3. threads <= 1 computes rows sequentially. */
CESENT_API cesent_status cesent_table_compute(const cesent_config* cfg, int table_id, int threads,
                                              cesent_table** out);
CESENT_API void cesent_table_destroy(cesent_table* table);
CESENT_API cesent_status cesent_table_shape(const cesent_table* table, size_t* rows, size_t* columns);
CESENT_API cesent_status cesent_table_column_name(const cesent_table* table, size_t column, const char** out);
CESENT_API cesent_status cesent_table_row_n(const cesent_table* table, size_t row, int* out);
/* present = 0 for cells the table leaves empty. */
CESENT_API cesent_status cesent_table_cell(const cesent_table* table, size_t row, size_t column, double* value,
                                           int* present);
CESENT_API cesent_status cesent_table_golden(const cesent_table* table, size_t row, size_t column,
                                             double* value, int* present);
CESENT_API cesent_status cesent_table_report_count(const cesent_table* table, size_t* out);
CESENT_API cesent_status cesent_table_report(const cesent_table* table, size_t index, cesent_report* out);

#ifdef __cplusplus
}
#endif

#endif /* CESENT_CESENT_H_ */
