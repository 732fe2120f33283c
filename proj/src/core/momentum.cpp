#include "core/momentum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "core/error.hpp"
#include "core/specfun.hpp"

namespace cesent {

using specfun::hermite;
using specfun::laguerre;
using specfun::log_gamma;
using specfun::spherical_bessel;

namespace {

constexpr double kSupportThreshold = 1e-9;
constexpr double kMaxMomentumRadius = 80.0;
const double kSqrt2OverPi = std::sqrt(2.0 / std::numbers::pi);

// i^k for integer k.
complex ipow(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

double sign_pow(int k) { return (k % 2 == 0) ? 1.0 : -1.0; }

QuadratureConfig make_transform_cfg(const QuadratureConfig& cfg) {
  QuadratureConfig t = cfg;
  t.abs_tol = cfg.abs_tol * 0.1;
  return t;
}

bool linear_odd(int n) { return n % 2 != 0; }

// Integral of f(x) cos(px) (even) or f(x) sin(px) (odd) over [0, radius], times sqrt(2/pi).
double half_line_fourier(const Integrand& f, bool odd, double p, double radius, const QuadratureConfig& cfg) {
  const auto kernel = [&](double x) { return f(x) * (odd ? std::sin(p * x) : std::cos(p * x)); };
  return kSqrt2OverPi * integrate(kernel, 0.0, radius, cfg).value;
}

double riccati_bessel_transform(const Integrand& f, int order, double p, double radius,
                                const QuadratureConfig& cfg) {
  if (p == 0.0) return 0.0;
  const auto kernel = [&](double r) {
    const double z = p * r;
    return z * spherical_bessel(order, z) * f(r);
  };
  return integrate(kernel, 0.0, radius, cfg).value;
}

}  // namespace

double momentum_plus(const StateSpec& spec, double p) {
  validate(spec);
  if (spec.sector != Sector::plus) throw InvalidArgument("momentum_plus: plus sector only");
  if (spec.family == Family::radial3d && p < 0.0) throw InvalidArgument("radial momentum must be >= 0");
  // Oscillator eigenstates are self-reciprocal up to phase.
  return psi_position(spec, p);
}

MomentumAmplitude::MomentumAmplitude(const StateSpec& spec, const QuadratureConfig& cfg)
    : spec_(spec),
      transform_cfg_(make_transform_cfg(cfg)),
      method_(spec.sector == Sector::plus ? MomentumMethod::closed_form : MomentumMethod::direct_transform),
      position_(spec, cfg) {
  transform_cfg_.truncation_radius = position_.radius();
  if (spec.family == Family::radial3d) {
    const int big_l = angular_momentum(spec);
    phase_ = ipow(-big_l);
    if (spec.sector == Sector::plus) phase_ *= sign_pow(spec.n);
  } else if (spec.sector == Sector::plus) {
    phase_ = ipow(-spec.n);
  } else {
    phase_ = linear_odd(spec.n) ? complex(0.0, -1.0) : complex(1.0, 0.0);
  }

  if (method_ == MomentumMethod::closed_form) {
    radius_ = position_.radius();
    return;
  }
  double r = position_.radius();
  while (r < kMaxMomentumRadius &&
         std::max(std::abs(direct_transform(r)), std::abs(direct_transform(r + 0.5))) > kSupportThreshold) {
    r += 1.0;
  }
  radius_ = r;
}

double MomentumAmplitude::value(double p) const {
  if (method_ == MomentumMethod::closed_form) return momentum_plus(spec_, p);
  if (spec_.family == Family::radial3d && p < 0.0) throw InvalidArgument("radial momentum must be >= 0");
  return direct_transform(p);
}

double MomentumAmplitude::direct_transform(double p) const {
  const auto psi = [this](double x) { return position_(x); };
  if (spec_.family == Family::radial3d) {
    return kSqrt2OverPi * riccati_bessel_transform(psi, angular_momentum(spec_), p, position_.radius(), transform_cfg_);
  }
  return half_line_fourier(psi, linear_odd(spec_.n), p, position_.radius(), transform_cfg_);
}

Bounds MomentumAmplitude::bounds() const { return truncate(state_domain(spec_.family), radius_); }

complex momentum_minus_radial(const StateSpec& spec, double p, const QuadratureConfig& cfg) {
  if (spec.family != Family::radial3d || spec.sector != Sector::minus) {
    throw InvalidArgument("momentum_minus_radial: radial minus sector only");
  }
  if (p < 0.0) throw InvalidArgument("radial momentum must be >= 0");
  return MomentumAmplitude(spec, cfg)(p);
}

complex momentum_minus_linear(const StateSpec& spec, double p, const QuadratureConfig& cfg) {
  if (spec.family != Family::linear1d || spec.sector != Sector::minus) {
    throw InvalidArgument("momentum_minus_linear: linear minus sector only");
  }
  return MomentumAmplitude(spec, cfg).full(p);
}

QuadratureResult parseval(const MomentumAmplitude& amp, const QuadratureConfig& cfg) {
  const Bounds b = amp.bounds();
  return integrate(
      [&](double p) {
        const double v = amp.value(p);
        return v * v;
      },
      b.lo, b.hi, cfg);
}

// ---------------------------------------------------------------------------
// Intertwining decomposition

namespace {

StateSpec partner_plus(const StateSpec& minus) {
  validate(minus);
  if (minus.sector != Sector::minus) throw InvalidArgument("intertwining: minus-sector state required");
  if (minus.family == Family::radial3d) {
    if (minus.l + 1 > kMaxQuantumL) throw InvalidArgument("intertwining: l too large");
    return {Family::radial3d, Sector::plus, minus.n, minus.l + 1};
  }
  if (minus.n < 1) throw InvalidArgument("intertwining: the singlet (n=0) has no plus-sector partner");
  return {Family::linear1d, Sector::plus, minus.n, 0};
}

}  // namespace

Intertwining::Intertwining(const StateSpec& minus_spec, const QuadratureConfig& cfg)
    : spec_(minus_spec),
      transform_cfg_(make_transform_cfg(cfg)),
      minus_(minus_spec, cfg),
      plus_(partner_plus(minus_spec), cfg) {
  const int n = spec_.n;
  const int l = spec_.l;
  r_max_ = state_radius(spec_, cfg);
  transform_cfg_.truncation_radius = r_max_;
  if (spec_.family == Family::radial3d) {
    plus_coef_ = std::sqrt((2.0 * n + 2.0 * l + 3.0) / (2.0 * n + 2.0 * l + 5.0));
    i_coef_ = std::exp(0.5 * (std::log(32.0) + log_gamma(n + 1.0) - std::log(std::numbers::pi) -
                              std::log(2.0 * n + 2.0 * l + 5.0) - log_gamma(n + l + 1.5)));
  } else {
    const int k = n - 1;
    const double c_k = exceptional_normalization(Family::linear1d, n, 0);
    const double m = std::exp(0.5 * (0.5 * std::log(std::numbers::pi) + (k + 1) * std::numbers::ln2 +
                                     log_gamma(k + 2.0)));
    plus_coef_ = c_k * m;
    i_coef_ = 4.0 * c_k;
  }
}

complex Intertwining::direct_i(double p) const {
  const int n = spec_.n;
  const int l = spec_.l;
  if (spec_.family == Family::radial3d) {
    const auto f = [n, l](double r) {
      const double r2 = r * r;
      return std::pow(r, l + 2.0) * std::exp(-0.5 * r2) * laguerre({n, l + 0.5}, r2) / (2.0 * r2 + 2.0 * l + 3.0);
    };
    return riccati_bessel_transform(f, l + 1, p, r_max_, transform_cfg_);
  }
  const int k = n - 1;
  const auto f = [k](double x) { return x * hermite(k, x) * std::exp(-0.5 * x * x) / (1.0 + 2.0 * x * x); };
  const bool odd = linear_odd(k + 1);
  const double v = half_line_fourier(f, odd, p, r_max_, transform_cfg_);
  return odd ? complex(0.0, -v) : complex(v, 0.0);
}

complex Intertwining::reconstruct(double p, complex i_value) const {
  const complex i_phase = spec_.family == Family::radial3d ? ipow(-(spec_.l + 1)) : complex(1.0, 0.0);
  return plus_coef_ * plus_.full(p) + i_phase * i_coef_ * i_value;
}

complex Intertwining::extract(double p) const {
  const complex i_phase = spec_.family == Family::radial3d ? ipow(-(spec_.l + 1)) : complex(1.0, 0.0);
  const complex minus_term = minus_.full(p);
  const complex plus_term = plus_coef_ * plus_.full(p);
  const complex diff = minus_term - plus_term;
  const double scale = std::max(std::abs(minus_term), std::abs(plus_term));
  if (scale > 0.0 && std::abs(diff) < 1e-10 * scale) {
    throw IllConditioned("intertwining: I(p) term cancels at p=" + std::to_string(p));
  }
  return diff / (i_phase * i_coef_);
}

Decomposition Intertwining::decompose(double p) const {
  const complex extracted = extract(p);
  const complex rebuilt = reconstruct(p, direct_i(p));
  return {extracted, std::abs(rebuilt - minus_.full(p))};
}

ComplexGridFunction Intertwining::sample(double a, double b, double h, std::vector<bool>* usable) const {
  ComplexGridFunction g;
  g.points = uniform_points(a, b, h);
  g.domain = IntegrationDomain::finite(g.points.front(), g.points.back());
  g.values.resize(g.points.size());
  if (usable) usable->assign(g.points.size(), true);
  for (size_t j = 0; j < g.points.size(); ++j) {
    try {
      g.values[j] = extract(g.points[j]);
    } catch (const IllConditioned&) {
      if (!usable) throw;
      (*usable)[j] = false;
      g.values[j] = 0.0;
    }
  }
  return g;
}

Decomposition intertwining_decomposition(const StateSpec& spec, double p, const QuadratureConfig& cfg) {
  return Intertwining(spec, cfg).decompose(p);
}

// ---------------------------------------------------------------------------
// ODE for I(p)

const char* to_string(OdeVariant v) {
  switch (v) {
    case OdeVariant::as_printed: return "as_printed";
    case OdeVariant::negated_source: return "negated_source";
    case OdeVariant::decomposition_normalized: return "decomposition_normalized";
  }
  return "unknown";
}

namespace {

double ode_potential(const StateSpec& spec, double p) {
  if (spec.family == Family::radial3d) {
    const double l = spec.l;
    return (l + 1.0) * (l + 2.0) / (p * p) + l + 1.5;
  }
  return 0.5;
}

}  // namespace

complex ode_source(const StateSpec& spec, double p, OdeVariant variant) {
  const double sign = variant == OdeVariant::negated_source ? -1.0 : 1.0;
  if (spec.family == Family::radial3d) {
    // The published source term already matches the I of the intertwining sum.
    const int n = spec.n;
    const int l = spec.l;
    const double p2 = p * p;
    const double bracket = laguerre({n, l + 1.5}, p2) + (n > 0 ? laguerre({n - 1, l + 1.5}, p2) : 0.0);
    return sign * 0.5 * sign_pow(n) * std::sqrt(0.5 * std::numbers::pi) * std::pow(p, l + 2.0) *
           std::exp(-0.5 * p2) * bracket;
  }
  const int k = spec.n - 1;
  const double shape =
      std::exp(-0.5 * p * p) * ((k > 0 ? 2.0 * k * hermite(k - 1, p) : 0.0) - p * hermite(k, p));
  if (variant == OdeVariant::decomposition_normalized) return 0.5 * complex(0.0, 1.0) * ipow(-k) * shape;
  const double norm = std::exp(-0.5 * ((k + 2) * std::numbers::ln2 + log_gamma(k + 1.0) +
                                       0.5 * std::log(std::numbers::pi)));
  return sign * ipow(k - 1) * norm * shape;
}

double i_ode_residual(const StateSpec& spec, const ComplexGridFunction& samples, OdeVariant variant,
                      const std::vector<bool>& usable) {
  validate_uniform(samples);
  if (!usable.empty() && usable.size() != samples.size()) throw InvalidArgument("usable mask length mismatch");
  const double h = samples.spacing();
  const auto& v = samples.values;
  const auto ok = [&](size_t lo, size_t hi) {
    if (usable.empty()) return true;
    for (size_t j = lo; j <= hi; ++j)
      if (!usable[j]) return false;
    return true;
  };
  double sum = 0.0;
  double richardson = 0.0;
  for (size_t j = 2; j + 2 < samples.size(); ++j) {
    if (!ok(j - 2, j + 2)) continue;
    const double p = samples.points[j];
    const complex d2 = (-v[j - 2] + 16.0 * v[j - 1] - 30.0 * v[j] + 16.0 * v[j + 1] - v[j + 2]) / (12.0 * h * h);
    const complex res = d2 - ode_potential(spec, p) * v[j] + ode_source(spec, p, variant);
    sum += std::norm(res);
    if (j >= 4 && j + 4 < samples.size() && ok(j - 4, j + 4)) {
      const complex d2c =
          (-v[j - 4] + 16.0 * v[j - 2] - 30.0 * v[j] + 16.0 * v[j + 2] - v[j + 4]) / (48.0 * h * h);
      richardson += std::norm((d2 - d2c) / 15.0);
    }
  }
  if (std::sqrt(richardson * h) > 1e-3) throw GridTooCoarse("i_ode_residual: grid too coarse for 5-point I''");
  return std::sqrt(sum * h);
}

OdeVariantReport classify_ode_variant(const StateSpec& spec, const ComplexGridFunction& samples,
                                      const std::vector<bool>& usable) {
  OdeVariantReport r;
  r.printed_residual = i_ode_residual(spec, samples, OdeVariant::as_printed, usable);
  r.negated_residual = i_ode_residual(spec, samples, OdeVariant::negated_source, usable);
  r.normalized_residual = i_ode_residual(spec, samples, OdeVariant::decomposition_normalized, usable);
  r.best = OdeVariant::as_printed;
  r.best_residual = r.printed_residual;
  if (r.negated_residual < r.best_residual) {
    r.best = OdeVariant::negated_source;
    r.best_residual = r.negated_residual;
  }
  if (r.normalized_residual < r.best_residual) {
    r.best = OdeVariant::decomposition_normalized;
    r.best_residual = r.normalized_residual;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Closed form of I(p), linear family

namespace {

double closed_form_g(int n, double q) {
  return (n > 0 ? 2.0 * n * hermite(n - 1, q) : 0.0) - q * hermite(n, q);
}

double growing_integrand(int n, double q) {
  return std::exp(-0.5 * q * (std::numbers::sqrt2 + q)) * closed_form_g(n, q);
}

double decaying_integrand(int n, double q) {
  return std::exp(0.5 * q * (std::numbers::sqrt2 - q)) * closed_form_g(n, q);
}

}  // namespace

double closed_form_to_decomposition_scale(int n) {
  return sign_pow(n - 1) *
         std::exp(0.5 * (n * std::numbers::ln2 + log_gamma(n + 1.0) + 0.5 * std::log(std::numbers::pi)));
}

LinearIFit fit_linear_i(int n, const QuadratureConfig& cfg) {
  if (n < 0 || n + 1 > kMaxQuantumN) throw InvalidArgument("invalid quantum number");
  LinearIFit fit;
  fit.n = n;
  fit.k_coef = ipow(n + 1) / (2.0 * std::exp(0.5 * ((n + 1) * std::numbers::ln2 + log_gamma(n + 1.0) +
                                                    0.5 * std::log(std::numbers::pi))));
  const double radius = state_radius({Family::linear1d, Sector::plus, n, 0}, cfg) + 4.0;
  const double a_inf = integrate([n](double q) { return growing_integrand(n, q); }, 1.0, radius, cfg).value;
  const double b_minf = integrate([n](double q) { return decaying_integrand(n, q); }, 1.0, -radius, cfg).value;
  fit.c1 = -fit.k_coef * a_inf;
  fit.c2 = fit.k_coef * b_minf;

  // Two-sided decay: a mis-fitted constant leaves a mode growing like e^{|p|/sqrt2}.
  for (double s : {1.0, -1.0}) {
    const double near = std::abs(i_closed_form_linear(n, 8.0 * s, fit, cfg));
    const double far = std::abs(i_closed_form_linear(n, 12.0 * s, fit, cfg));
    if (!(far <= near) || !(far <= 1e-3)) {
      throw FitFailure("fit_linear_i: no two-sided decay for n=" + std::to_string(n));
    }
  }
  return fit;
}

complex i_closed_form_linear(int n, double p, const LinearIFit& fit, const QuadratureConfig& cfg) {
  if (fit.n != n) throw InvalidArgument("i_closed_form_linear: fit belongs to another n");
  const double a = integrate([n](double q) { return growing_integrand(n, q); }, 1.0, p, cfg).value;
  const double b = integrate([n](double q) { return decaying_integrand(n, q); }, 1.0, p, cfg).value;
  const double up = std::exp(p / std::numbers::sqrt2);
  const double down = std::exp(-p / std::numbers::sqrt2);
  return up * (fit.c1 + fit.k_coef * a) + down * (fit.c2 - fit.k_coef * b);
}

double singlet_momentum_as_printed(double p) {
  const double pref = std::pow(std::numbers::pi * std::numbers::e, 0.25) / (2.0 * std::numbers::sqrt2);
  const double a = p / std::numbers::sqrt2;
  return pref * (2.0 * std::cosh(a) - std::exp(-a) * std::erf(0.5 - a) -
                 std::exp(p * std::numbers::sqrt2) * std::erf(0.5 + a));
}

double singlet_momentum_corrected(double p) {
  const double pref = std::pow(std::numbers::pi * std::numbers::e, 0.25) / (2.0 * std::numbers::sqrt2);
  const double a = std::abs(p) / std::numbers::sqrt2;
  // 2cosh a - e^{-a} erf(1/2-a) - e^{a} erf(1/2+a), regrouped to avoid cancellation.
  return pref * (std::exp(a) * std::erfc(0.5 + a) + std::exp(-a) * (1.0 + std::erf(a - 0.5)));
}

}  // namespace cesent
