#pragma once

#include "core/quadrature.hpp"
#include "core/state.hpp"

namespace cesent {

// D (1 + ln pi), natural logarithm.
double bbm_bound(int dimension);

struct EntropyReport {
  StateSpec spec;
  double s_pos = 0.0;
  double s_mom = 0.0;
  double sum = 0.0;
  int dimension = 1;
  double bbm_bound = 0.0;
  double margin = 0.0;
  double err_pos = 0.0;
  double err_mom = 0.0;
  double position_norm = 1.0;  // printed-normalization check before renormalization
  double momentum_norm = 1.0;  // Parseval integral
  bool suspected_erratum = false;
};

// -int |Y_l^0|^2 ln |Y_l^0|^2 dOmega.
QuadratureResult angular_entropy(int l_eff, const QuadratureConfig& cfg);

// Shannon entropies in nats. radial3d uses the product split
//   S = -int_0^inf chi^2 ln(chi^2/r^2) dr + angular_entropy(L),
// exact for psi = (chi/r) Y_L^0, with L = l (plus) or l+1 (minus).
QuadratureResult position_entropy(const StateSpec& spec, const QuadratureConfig& cfg);

// Same split in momentum space, from the momentum module's amplitude.
// Throws ParsevalFailure if the amplitude's norm deviates from 1 by more than 1e-6.
QuadratureResult momentum_entropy(const StateSpec& spec, const QuadratureConfig& cfg);

EntropyReport entropy_report(const StateSpec& spec, const QuadratureConfig& cfg);

struct BbmCheck {
  bool satisfied = false;
  double margin = 0.0;
};

inline constexpr double kBbmTolerance = 1e-6;

BbmCheck bbm_check(const EntropyReport& report);

}  // namespace cesent
