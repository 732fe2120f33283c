#include "core/wavefunctions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "core/error.hpp"
#include "core/grid.hpp"
#include "core/specfun.hpp"
#include "core/susy.hpp"

namespace cesent {

using specfun::hermite;
using specfun::laguerre;
using specfun::log_gamma;

namespace {

constexpr double kLogEnvelopeFloor = 41.446531673892822;  // ln(1e18)
constexpr double kNormErratumThreshold = 1e-6;

// ln sqrt(2 n! / Gamma(n+l+3/2))
double log_radial_plus_norm(int n, int l) {
  return 0.5 * (std::numbers::ln2 + log_gamma(n + 1.0) - log_gamma(n + l + 1.5));
}

// ln sqrt(1 / (2^n n! sqrt(pi)))
double log_hermite_norm(int n) {
  return -0.5 * (n * std::numbers::ln2 + log_gamma(n + 1.0) + 0.5 * std::log(std::numbers::pi));
}

}  // namespace

double exceptional_normalization(Family family, int n, int l) {
  if (n < 0) throw InvalidArgument("invalid quantum number");
  if (family == Family::radial3d) {
    return std::exp(0.5 * (log_gamma(n + 1.0) - std::log(2.0 * n + 2.0 * l + 5.0) - log_gamma(n + l + 1.5)));
  }
  if (n == 0) return std::sqrt(2.0 / std::sqrt(std::numbers::pi));
  const int k = n - 1;
  return std::exp(-0.5 * ((k + 1) * std::numbers::ln2 + log_gamma(k + 1.0) + std::log(k + 3.0) +
                          0.5 * std::log(std::numbers::pi)));
}

double exceptional_poly(Family family, int n, int l, double x) {
  if (n < 0) throw InvalidArgument("invalid quantum number");
  if (family == Family::radial3d) {
    if (x < 0.0) throw InvalidArgument("radial coordinate must be >= 0");
    const double r2 = x * x;
    const double c = 2.0 * l + 3.0;
    const double d = 2.0 * r2 + c;
    return (4.0 * laguerre({n, l + 0.5}, r2) + 2.0 * d * laguerre({n, l + 1.5}, r2)) / c;
  }
  if (n == 0) return 1.0;
  return (1.0 + 2.0 * x * x) * hermite(n, x) + 4.0 * x * hermite(n - 1, x);
}

double weight(Family family, int l, double x) {
  const double x2 = x * x;
  if (family == Family::radial3d) {
    if (x < 0.0) throw InvalidArgument("radial coordinate must be >= 0");
    const double c = 2.0 * l + 3.0;
    const double ratio = c / (2.0 * x2 + c);
    return ratio * ratio * std::exp(-x2) * std::pow(x, 2.0 * l + 4.0);
  }
  const double d = 1.0 + 2.0 * x2;
  return std::exp(-x2) / (d * d);
}

double psi_position(const StateSpec& spec, double x) {
  validate(spec);
  const int n = spec.n;
  const int l = spec.l;
  const double x2 = x * x;
  if (spec.family == Family::radial3d) {
    if (x < 0.0) throw InvalidArgument("radial coordinate must be >= 0");
    if (spec.sector == Sector::plus) {
      return std::exp(log_radial_plus_norm(n, l) - 0.5 * x2) * std::pow(x, l + 1.0) * laguerre({n, l + 0.5}, x2);
    }
    const double d = 2.0 * x2 + 2.0 * l + 3.0;
    const double bracket = 4.0 * laguerre({n, l + 0.5}, x2) + 2.0 * d * laguerre({n, l + 1.5}, x2);
    return exceptional_normalization(Family::radial3d, n, l) * std::exp(-0.5 * x2) * std::pow(x, l + 2.0) / d *
           bracket;
  }
  if (spec.sector == Sector::plus) return std::exp(log_hermite_norm(n) - 0.5 * x2) * hermite(n, x);
  const double d = 1.0 + 2.0 * x2;
  if (n == 0) return exceptional_normalization(Family::linear1d, 0, 0) * std::exp(-0.5 * x2) / d;
  const int k = n - 1;
  return exceptional_normalization(Family::linear1d, n, 0) * std::exp(-0.5 * x2) / d *
         (d * hermite(k + 1, x) + 4.0 * x * hermite(k, x));
}

double state_radius(const StateSpec& spec, const QuadratureConfig& cfg) {
  const double d = 2.0 * spec.n + spec.l + 2.0;
  const double log_peak = d * std::log(d) - d;
  double r = std::sqrt(d) + 1.0;
  while (2.0 * d * std::log(r) - r * r > log_peak - kLogEnvelopeFloor) r += 0.25;
  return std::max(cfg.truncation_radius, r);
}

IntegrationDomain state_domain(Family family) {
  return family == Family::radial3d ? IntegrationDomain::half_line() : IntegrationDomain::full_line();
}

NormReport norm_check(const StateSpec& spec, const QuadratureConfig& cfg) {
  validate(spec);
  QuadratureConfig local = cfg;
  local.truncation_radius = state_radius(spec, cfg);
  const QuadratureResult r = integrate(
      [&](double x) {
        const double v = psi_position(spec, x);
        return v * v;
      },
      state_domain(spec.family), local);
  return {r.value, r.error, std::abs(r.value - 1.0) > kNormErratumThreshold};
}

PositionState::PositionState(const StateSpec& spec, const QuadratureConfig& cfg)
    : spec_(spec), norm_(norm_check(spec, cfg)), radius_(state_radius(spec, cfg)) {
  scale_ = 1.0 / std::sqrt(norm_.norm);
}

Bounds PositionState::bounds() const { return truncate(state_domain(spec_.family), radius_); }

OverlapResult orthogonality_check(Family family, int l, int n1, int n2, const QuadratureConfig& cfg) {
  QuadratureConfig local = cfg;
  const int nmax = std::max(n1, n2);
  local.truncation_radius = state_radius({family, Sector::minus, nmax, l}, cfg);
  const IntegrationDomain dom = state_domain(family);
  auto overlap = [&](int a, int b) {
    return integrate([&](double x) { return exceptional_poly(family, a, l, x) * exceptional_poly(family, b, l, x) *
                                            weight(family, l, x); },
                     dom, local)
        .value;
  };
  OverlapResult out;
  out.value = overlap(n1, n2);
  out.scaled = out.value / std::sqrt(overlap(n1, n1) * overlap(n2, n2));
  return out;
}

int count_nodes(const StateSpec& spec, const QuadratureConfig& cfg, double h) {
  const Bounds b = truncate(state_domain(spec.family), state_radius(spec, cfg));
  const std::vector<double> pts = uniform_points(b.lo, b.hi, h);
  std::vector<double> vals;
  vals.reserve(pts.size());
  double peak = 0.0;
  for (double x : pts) {
    vals.push_back(psi_position(spec, x));
    peak = std::max(peak, std::abs(vals.back()));
  }
  int nodes = 0;
  int last_sign = 0;
  for (double v : vals) {
    if (std::abs(v) < 1e-10 * peak) continue;
    const int s = v > 0.0 ? 1 : -1;
    if (last_sign != 0 && s != last_sign) ++nodes;
    last_sign = s;
  }
  return nodes;
}

double schrodinger_residual(const StateSpec& spec, const QuadratureConfig& cfg, double h) {
  validate(spec);
  const double radius = state_radius(spec, cfg);
  const double lo = spec.family == Family::radial3d ? 0.05 : -radius;
  GridFunction psi = sample<double>([&](double x) { return psi_position(spec, x); }, uniform_points(lo, radius, h));
  const GridFunction d2 = second_derivative(psi);
  const double e = energy(spec);
  GridFunction res = d2;
  for (size_t i = 0; i < d2.size(); ++i) {
    const double x = d2.points[i];
    const double v = psi.values[i + 2];
    res.values[i] = -0.5 * d2.values[i] + (potential(spec.family, spec.sector, spec.l, x) - e) * v;
  }
  return l2_norm(res);
}

}  // namespace cesent
