#include "cesent/cesent.h"

#include <limits>
#include <new>
#include <string>

#include "core/entropy.hpp"
#include "core/error.hpp"
#include "core/momentum.hpp"
#include "core/susy.hpp"
#include "core/tables.hpp"
#include "core/wavefunctions.hpp"

struct cesent_config {
  cesent::QuadratureConfig cfg;
};

struct cesent_amplitude {
  cesent::MomentumAmplitude amp;
};

struct cesent_table {
  cesent::EntropyTable table;
};

namespace {

std::string& last_error() {
  thread_local std::string message;
  return message;
}

cesent_status fail(cesent_status status, const char* what) {
  last_error() = what;
  return status;
}

cesent_status to_status(cesent::ErrorCode code) {
  switch (code) {
    case cesent::ErrorCode::invalid_argument: return CESENT_ERR_INVALID_ARGUMENT;
    case cesent::ErrorCode::non_convergence: return CESENT_ERR_NON_CONVERGENCE;
    case cesent::ErrorCode::grid_too_coarse: return CESENT_ERR_GRID_TOO_COARSE;
    case cesent::ErrorCode::ill_conditioned: return CESENT_ERR_ILL_CONDITIONED;
    case cesent::ErrorCode::fit_failure: return CESENT_ERR_FIT_FAILURE;
    case cesent::ErrorCode::parseval_failure: return CESENT_ERR_PARSEVAL;
  }
  return CESENT_ERR_INTERNAL;
}

cesent::StateSpec to_spec(const cesent_state_spec* s) {
  if (!s) throw cesent::InvalidArgument("null state spec");
  if (s->family != CESENT_RADIAL3D && s->family != CESENT_LINEAR1D) throw cesent::InvalidArgument("unknown family");
  if (s->sector != CESENT_PLUS && s->sector != CESENT_MINUS) throw cesent::InvalidArgument("unknown sector");
  cesent::StateSpec spec;
  spec.family = s->family == CESENT_RADIAL3D ? cesent::Family::radial3d : cesent::Family::linear1d;
  spec.sector = s->sector == CESENT_PLUS ? cesent::Sector::plus : cesent::Sector::minus;
  spec.n = s->n;
  spec.l = spec.family == cesent::Family::radial3d ? s->l : 0;
  cesent::validate(spec);
  return spec;
}

cesent_state_spec from_spec(const cesent::StateSpec& s) {
  return {s.family == cesent::Family::radial3d ? CESENT_RADIAL3D : CESENT_LINEAR1D,
          s.sector == cesent::Sector::plus ? CESENT_PLUS : CESENT_MINUS, s.n, s.l};
}

cesent_report from_report(const cesent::EntropyReport& r) {
  cesent_report out{};
  out.spec = from_spec(r.spec);
  out.s_pos = r.s_pos;
  out.s_mom = r.s_mom;
  out.sum = r.sum;
  out.dimension = r.dimension;
  out.bbm_bound = r.bbm_bound;
  out.margin = r.margin;
  out.err_pos = r.err_pos;
  out.err_mom = r.err_mom;
  out.position_norm = r.position_norm;
  out.momentum_norm = r.momentum_norm;
  out.suspected_erratum = r.suspected_erratum ? 1 : 0;
  out.bbm_satisfied = cesent::bbm_check(r).satisfied ? 1 : 0;
  return out;
}

const cesent::QuadratureConfig& config_of(const cesent_config* cfg) {
  static const cesent::QuadratureConfig defaults;
  return cfg ? cfg->cfg : defaults;
}

template <typename T>
void require(const T* p, const char* what) {
  if (!p) throw cesent::InvalidArgument(std::string("null pointer: ") + what);
}

}  // namespace

#define CESENT_API_PROLOGUE \
  try {                     \
    last_error().clear();

#define CESENT_API_EPILOGUE                                \
  }                                                        \
  catch (const cesent::Error& e) {                         \
    return fail(to_status(e.code()), e.what());            \
  }                                                        \
  catch (const std::bad_alloc&) {                          \
    return fail(CESENT_ERR_INTERNAL, "out of memory");     \
  }                                                        \
  catch (const std::exception& e) {                        \
    return fail(CESENT_ERR_INTERNAL, e.what());            \
  }                                                        \
  catch (...) {                                            \
    return fail(CESENT_ERR_INTERNAL, "unknown error");     \
  }

namespace {

template <typename Setter>
cesent_status update_config(cesent_config* cfg, Setter&& set) {
  CESENT_API_PROLOGUE
  require(cfg, "cfg");
  cesent::QuadratureConfig next = cfg->cfg;
  set(next);
  next.validate();
  cfg->cfg = next;
  return CESENT_OK;
  CESENT_API_EPILOGUE
}

}  // namespace

namespace {

void check_cell(const cesent_table* t, size_t row, size_t column) {
  require(t, "table");
  if (row >= t->table.cells.size() || column >= t->table.columns.size()) {
    throw cesent::InvalidArgument("table index out of range");
  }
}

}  // namespace

extern "C" {

const char* cesent_version(void) { return "1.0.0"; }

const char* cesent_status_string(cesent_status status) {
  switch (status) {
    case CESENT_OK: return "ok";
    case CESENT_ERR_INVALID_ARGUMENT: return "invalid argument";
    case CESENT_ERR_NON_CONVERGENCE: return "quadrature did not converge";
    case CESENT_ERR_GRID_TOO_COARSE: return "grid too coarse";
    case CESENT_ERR_ILL_CONDITIONED: return "ill-conditioned";
    case CESENT_ERR_FIT_FAILURE: return "fit failure";
    case CESENT_ERR_PARSEVAL: return "Parseval check failed";
    case CESENT_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* cesent_last_error(void) { return last_error().c_str(); }

cesent_status cesent_config_create(cesent_config** out) {
  CESENT_API_PROLOGUE
  require(out, "out");
  *out = new cesent_config{};
  return CESENT_OK;
  CESENT_API_EPILOGUE
}

void cesent_config_destroy(cesent_config* cfg) { delete cfg; }

cesent_status cesent_config_set_rel_tol(cesent_config* cfg, double v) {
  return update_config(cfg, [v](cesent::QuadratureConfig& c) { c.rel_tol = v; });
}

cesent_status cesent_config_set_abs_tol(cesent_config* cfg, double v) {
  return update_config(cfg, [v](cesent::QuadratureConfig& c) { c.abs_tol = v; });
}

cesent_status cesent_config_set_truncation_radius(cesent_config* cfg, double v) {
  return update_config(cfg, [v](cesent::QuadratureConfig& c) { c.truncation_radius = v; });
}

cesent_status cesent_config_set_max_panels(cesent_config* cfg, int v) {
  return update_config(cfg, [v](cesent::QuadratureConfig& c) { c.max_panels = v; });
}

cesent_status cesent_config_get(const cesent_config* cfg, double* rel_tol, double* abs_tol,
                                double* truncation_radius, int* max_panels) {
  CESENT_API_PROLOGUE
  require(cfg, "cfg");
  if (rel_tol) *rel_tol = cfg->cfg.rel_tol;
  if (abs_tol) *abs_tol = cfg->cfg.abs_tol;
  if (truncation_radius) *truncation_radius = cfg->cfg.truncation_radius;
  if (max_panels) *max_panels = cfg->cfg.max_panels;
  return CESENT_OK;
  CESENT_API_EPILOGUE
}

cesent_status cesent_validate_spec(const cesent_state_spec* spec) {
  CESENT_API_PROLOGUE
  to_spec(spec);
  return CESENT_OK;
  CESENT_API_EPILOGUE
}

cesent_status cesent_energy(const cesent_state_spec* spec, double* out) {
  CESENT_API_PROLOGUE
  require(out, "out");
  *out = cesent::energy(to_spec(spec));
  return CESENT_OK;
  CESENT_API_EPILOGUE
}

double cesent_bbm_bound(int dimension) {
  return dimension >= 1 ? cesent::bbm_bound(dimension) : std::numeric_limits<double>::quiet_NaN();
}

cesent_status cesent_psi_position(const cesent_state_spec* spec, double x, double* out) {
  CESENT_API_PROLOGUE
  require(out, "out");
  *out = cesent::psi_position(to_spec(spec), x);
  return CESENT_OK;
  CESENT_API_EPILOGUE
}

cesent_status cesent_state_radius(const cesent_config* cfg, const cesent_state_spec* spec, double* out) {
  CESENT_API_PROLOGUE
  require(out, "out");
  *out = cesent::state_radius(to_spec(spec), config_of(cfg));
  return CESENT_OK;
  CESENT_API_EPILOGUE
}

cesent_status cesent_entropy_report(const cesent_config* cfg, const cesent_state_spec* spec, cesent_report* out) {
  CESENT_API_PROLOGUE
  require(out, "out");
  *out = from_report(cesent::entropy_report(to_spec(spec), config_of(cfg)));
  return CESENT_OK;
  CESENT_API_EPILOGUE
}

cesent_status cesent_amplitude_create(const cesent_config* cfg, const cesent_state_spec* spec,
                                      cesent_amplitude** out) {
  CESENT_API_PROLOGUE
  require(out, "out");
  *out = new cesent_amplitude{cesent::MomentumAmplitude(to_spec(spec), config_of(cfg))};
  return CESENT_OK;
  CESENT_API_EPILOGUE
}

void cesent_amplitude_destroy(cesent_amplitude* amp) { delete amp; }

cesent_status cesent_amplitude_eval(const cesent_amplitude* amp, double p, double* re, double* im) {
  CESENT_API_PROLOGUE
  require(amp, "amp");
  const std::complex<double> v = amp->amp.full(p);
  if (re) *re = v.real();
  if (im) *im = v.imag();
  return CESENT_OK;
  CESENT_API_EPILOGUE
}

cesent_status cesent_amplitude_density(const cesent_amplitude* amp, double p, double* out) {
  CESENT_API_PROLOGUE
  require(amp, "amp");
  require(out, "out");
  const double v = amp->amp.value(p);
  *out = v * v;
  return CESENT_OK;
  CESENT_API_EPILOGUE
}

cesent_status cesent_amplitude_radius(const cesent_amplitude* amp, double* out) {
  CESENT_API_PROLOGUE
  require(amp, "amp");
  require(out, "out");
  *out = amp->amp.radius();
  return CESENT_OK;
  CESENT_API_EPILOGUE
}

cesent_status cesent_amplitude_is_direct(const cesent_amplitude* amp, int* out) {
  CESENT_API_PROLOGUE
  require(amp, "amp");
  require(out, "out");
  *out = amp->amp.method() == cesent::MomentumMethod::direct_transform ? 1 : 0;
  return CESENT_OK;
  CESENT_API_EPILOGUE
}

cesent_status cesent_table_compute(const cesent_config* cfg, int table_id, int threads, cesent_table** out) {
  CESENT_API_PROLOGUE
  require(out, "out");
  *out = new cesent_table{cesent::compute_table(table_id, config_of(cfg), threads)};
  return CESENT_OK;
  CESENT_API_EPILOGUE
}

void cesent_table_destroy(cesent_table* table) { delete table; }

cesent_status cesent_table_shape(const cesent_table* table, size_t* rows, size_t* columns) {
  CESENT_API_PROLOGUE
  require(table, "table");
  if (rows) *rows = table->table.cells.size();
  if (columns) *columns = table->table.columns.size();
  return CESENT_OK;
  CESENT_API_EPILOGUE
}

cesent_status cesent_table_column_name(const cesent_table* table, size_t column, const char** out) {
  CESENT_API_PROLOGUE
  check_cell(table, 0, column);
  require(out, "out");
  *out = table->table.columns[column].c_str();
  return CESENT_OK;
  CESENT_API_EPILOGUE
}

cesent_status cesent_table_row_n(const cesent_table* table, size_t row, int* out) {
  CESENT_API_PROLOGUE
  check_cell(table, row, 0);
  require(out, "out");
  *out = table->table.n[row];
  return CESENT_OK;
  CESENT_API_EPILOGUE
}

cesent_status cesent_table_cell(const cesent_table* table, size_t row, size_t column, double* value, int* present) {
  CESENT_API_PROLOGUE
  check_cell(table, row, column);
  const auto& cell = table->table.cells[row][column];
  if (present) *present = cell ? 1 : 0;
  if (value) *value = cell.value_or(0.0);
  return CESENT_OK;
  CESENT_API_EPILOGUE
}

cesent_status cesent_table_golden(const cesent_table* table, size_t row, size_t column, double* value,
                                  int* present) {
  CESENT_API_PROLOGUE
  check_cell(table, row, column);
  const auto& cell = table->table.golden[row][column];
  if (present) *present = cell ? 1 : 0;
  if (value) *value = cell.value_or(0.0);
  return CESENT_OK;
  CESENT_API_EPILOGUE
}

cesent_status cesent_table_report_count(const cesent_table* table, size_t* out) {
  CESENT_API_PROLOGUE
  require(table, "table");
  require(out, "out");
  *out = table->table.reports.size();
  return CESENT_OK;
  CESENT_API_EPILOGUE
}

cesent_status cesent_table_report(const cesent_table* table, size_t index, cesent_report* out) {
  CESENT_API_PROLOGUE
  require(table, "table");
  require(out, "out");
  if (index >= table->table.reports.size()) throw cesent::InvalidArgument("report index out of range");
  *out = from_report(table->table.reports[index]);
  return CESENT_OK;
  CESENT_API_EPILOGUE
}

}  // extern "C"
