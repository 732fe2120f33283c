#include "core/state.hpp"

#include "core/error.hpp"

namespace cesent {

void validate(const StateSpec& spec) {
  if (spec.n < 0 || spec.n > kMaxQuantumN) {
    throw InvalidArgument("invalid quantum number n=" + std::to_string(spec.n) + " (expected 0.." +
                          std::to_string(kMaxQuantumN) + ")");
  }
  if (spec.family == Family::radial3d && (spec.l < 0 || spec.l > kMaxQuantumL)) {
    throw InvalidArgument("invalid quantum number l=" + std::to_string(spec.l) + " (expected 0.." +
                          std::to_string(kMaxQuantumL) + ")");
  }
}

int angular_momentum(const StateSpec& spec) {
  if (spec.family == Family::linear1d) return 0;
  return spec.sector == Sector::plus ? spec.l : spec.l + 1;
}

int dimension(Family family) { return family == Family::radial3d ? 3 : 1; }

std::string to_string(Family family) { return family == Family::radial3d ? "radial" : "linear"; }

std::string to_string(Sector sector) { return sector == Sector::plus ? "plus" : "minus"; }

std::string describe(const StateSpec& spec) {
  std::string s = to_string(spec.family) + "/" + to_string(spec.sector) + " n=" + std::to_string(spec.n);
  if (spec.family == Family::radial3d) s += " l=" + std::to_string(spec.l);
  return s;
}

}  // namespace cesent
