#pragma once

// RAII ownership of C API handles.

#include <memory>
#include <stdexcept>
#include <string>

#include "cesent/cesent.h"

namespace cesent::cli {

struct ApiError : std::runtime_error {
  ApiError(cesent_status status, const std::string& what) : std::runtime_error(what), status(status) {}
  cesent_status status;
};

inline void check(cesent_status status) {
  if (status != CESENT_OK) {
    const std::string msg = cesent_last_error();
    throw ApiError(status, msg.empty() ? cesent_status_string(status) : msg);
  }
}

struct ConfigDeleter {
  void operator()(cesent_config* c) const { cesent_config_destroy(c); }
};
struct AmplitudeDeleter {
  void operator()(cesent_amplitude* a) const { cesent_amplitude_destroy(a); }
};
struct TableDeleter {
  void operator()(cesent_table* t) const { cesent_table_destroy(t); }
};

using Config = std::unique_ptr<cesent_config, ConfigDeleter>;
using Amplitude = std::unique_ptr<cesent_amplitude, AmplitudeDeleter>;
using Table = std::unique_ptr<cesent_table, TableDeleter>;

inline Config make_config() {
  cesent_config* c = nullptr;
  check(cesent_config_create(&c));
  return Config(c);
}

inline Amplitude make_amplitude(const cesent_config* cfg, const cesent_state_spec& spec) {
  cesent_amplitude* a = nullptr;
  check(cesent_amplitude_create(cfg, &spec, &a));
  return Amplitude(a);
}

inline Table make_table(const cesent_config* cfg, int id, int threads) {
  cesent_table* t = nullptr;
  check(cesent_table_compute(cfg, id, threads, &t));
  return Table(t);
}

}  // namespace cesent::cli
