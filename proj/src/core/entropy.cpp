#include "core/entropy.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "core/error.hpp"
#include "core/momentum.hpp"
#include "core/specfun.hpp"
#include "core/wavefunctions.hpp"

namespace cesent {

namespace {

constexpr double kParsevalTolerance = 1e-6;

QuadratureResult add(QuadratureResult a, const QuadratureResult& b) {
  a.value += b.value;
  a.error += b.error;
  a.panels += b.panels;
  return a;
}

}  // namespace

double bbm_bound(int dimension) {
  if (dimension < 1) throw InvalidArgument("bbm_bound: dimension must be >= 1");
  return dimension * (1.0 + std::log(std::numbers::pi));
}

QuadratureResult angular_entropy(int l_eff, const QuadratureConfig& cfg) {
  if (l_eff < 0) throw InvalidArgument("angular_entropy: negative l");
  const double c = (2.0 * l_eff + 1.0) / (4.0 * std::numbers::pi);
  QuadratureResult r = entropy_functional(
      [&](double u) {
        const double pl = specfun::legendre(l_eff, u);
        return c * pl * pl;
      },
      IntegrationDomain::finite(-1.0, 1.0), cfg);
  r.value *= 2.0 * std::numbers::pi;
  r.error *= 2.0 * std::numbers::pi;
  return r;
}

QuadratureResult position_entropy(const StateSpec& spec, const QuadratureConfig& cfg) {
  const PositionState psi(spec, cfg);
  const Bounds b = psi.bounds();
  if (spec.family == Family::linear1d) {
    return entropy_functional(
        [&](double x) {
          const double v = psi(x);
          return v * v;
        },
        IntegrationDomain::finite(b.lo, b.hi), cfg);
  }
  const QuadratureResult radial = entropy_functional(
      [&](double r) {
        const double v = psi(r) / r;
        return v * v;
      },
      IntegrationDomain::finite(b.lo, b.hi), cfg, [](double r) { return r * r; });
  return add(radial, angular_entropy(angular_momentum(spec), cfg));
}

namespace {

QuadratureResult momentum_entropy_of(const MomentumAmplitude& amp, const QuadratureConfig& cfg) {
  const Bounds b = amp.bounds();
  const StateSpec& spec = amp.spec();
  if (spec.family == Family::linear1d) {
    return entropy_functional(
        [&](double p) {
          const double v = amp.value(p);
          return v * v;
        },
        IntegrationDomain::finite(b.lo, b.hi), cfg);
  }
  const QuadratureResult radial = entropy_functional(
      [&](double p) {
        const double v = amp.value(p) / p;
        return v * v;
      },
      IntegrationDomain::finite(b.lo, b.hi), cfg, [](double p) { return p * p; });
  return add(radial, angular_entropy(angular_momentum(spec), cfg));
}

double checked_parseval(const MomentumAmplitude& amp, const QuadratureConfig& cfg) {
  const double norm = parseval(amp, cfg).value;
  if (std::abs(norm - 1.0) > kParsevalTolerance) {
    throw ParsevalFailure("momentum amplitude of " + describe(amp.spec()) + " has norm " + std::to_string(norm));
  }
  return norm;
}

}  // namespace

QuadratureResult momentum_entropy(const StateSpec& spec, const QuadratureConfig& cfg) {
  const MomentumAmplitude amp(spec, cfg);
  checked_parseval(amp, cfg);
  return momentum_entropy_of(amp, cfg);
}

EntropyReport entropy_report(const StateSpec& spec, const QuadratureConfig& cfg) {
  validate(spec);
  EntropyReport r;
  r.spec = spec;
  r.dimension = dimension(spec.family);
  r.bbm_bound = bbm_bound(r.dimension);

  const NormReport norm = norm_check(spec, cfg);
  r.position_norm = norm.norm;
  r.suspected_erratum = norm.suspected_erratum;

  const QuadratureResult pos = position_entropy(spec, cfg);
  const MomentumAmplitude amp(spec, cfg);
  r.momentum_norm = checked_parseval(amp, cfg);
  const QuadratureResult mom = momentum_entropy_of(amp, cfg);

  r.s_pos = pos.value;
  r.err_pos = pos.error;
  r.s_mom = mom.value;
  r.err_mom = mom.error;
  r.sum = r.s_pos + r.s_mom;
  r.margin = r.sum - r.bbm_bound;
  return r;
}

BbmCheck bbm_check(const EntropyReport& report) {
  const double margin = report.sum - report.bbm_bound;
  return {margin >= -kBbmTolerance, margin};
}

}  // namespace cesent
