#pragma once

#include <functional>

namespace cesent {

struct IntegrationDomain {
  enum class Kind { finite, half_line, full_line };

  Kind kind = Kind::finite;
  double a = 0.0;
  double b = 1.0;

  static IntegrationDomain finite(double a, double b);
  static IntegrationDomain half_line() { return {Kind::half_line, 0.0, 0.0}; }
  static IntegrationDomain full_line() { return {Kind::full_line, 0.0, 0.0}; }
};

struct QuadratureConfig {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  // Infinite domains are cut at this radius. Every integrand here carries a
  // Gaussian envelope; e^{-r^2} at r = 12 is far below double resolution of the peak.
  double truncation_radius = 12.0;
  int max_panels = 4096;

  void validate() const;
};

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
  int panels = 0;
};

using Integrand = std::function<double(double)>;

// Finite bounds [lo, hi] after truncation of an infinite domain.
struct Bounds {
  double lo;
  double hi;
};
Bounds truncate(const IntegrationDomain& domain, double radius);

// Adaptive Gauss-Legendre panel bisection. Converged when the summed panel
// error estimate drops below max(rel_tol*|value|, abs_tol); otherwise throws
// NonConvergence once max_panels is exhausted.
QuadratureResult integrate(const Integrand& f, const IntegrationDomain& domain, const QuadratureConfig& cfg);

// Same, on explicit finite bounds (lo > hi integrates backwards).
QuadratureResult integrate(const Integrand& f, double lo, double hi, const QuadratureConfig& cfg);

// -int J(x) rho(x) ln rho(x) dx, with the integrand taken as 0 where rho <= 0
// or underflows. J defaults to 1; the radial entropy split passes J = r^2.
QuadratureResult entropy_functional(const Integrand& density, const IntegrationDomain& domain,
                                    const QuadratureConfig& cfg, const Integrand& jacobian = {});

// 0 ln 0 := 0. Values within 1e-12 below zero are clamped; more negative throws.
double entropy_integrand(double density);

}  // namespace cesent
