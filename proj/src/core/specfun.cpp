#include "core/specfun.hpp"

#include <math.h>

#include <cmath>
#include <string>

#include "core/error.hpp"

namespace cesent::specfun {

double hermite(int n, double x) {
  if (n < 0) throw InvalidArgument("hermite: negative degree");
  if (n == 0) return 1.0;
  double prev = 1.0;
  double curr = 2.0 * x;
  for (int k = 1; k < n; ++k) {
    const double next = 2.0 * x * curr - 2.0 * k * prev;
    prev = curr;
    curr = next;
  }
  return curr;
}

double laguerre(PolyIndex idx, double x) {
  if (idx.n < 0) throw InvalidArgument("laguerre: negative degree");
  if (!(idx.alpha > -1.0)) throw InvalidArgument("laguerre: alpha must exceed -1");
  const double a = idx.alpha;
  if (idx.n == 0) return 1.0;
  double prev = 1.0;
  double curr = 1.0 + a - x;
  for (int k = 1; k < idx.n; ++k) {
    const double next = ((2.0 * k + 1.0 + a - x) * curr - (k + a) * prev) / (k + 1.0);
    prev = curr;
    curr = next;
  }
  return curr;
}

namespace {

// Power series z^l/(2l+1)!! * sum_k (-z^2/2)^k / (k! (2l+3)(2l+5)...(2l+2k+1)).
double spherical_bessel_series(int l, double z) {
  double lead = 1.0;
  for (int k = 1; k <= l; ++k) lead *= z / (2.0 * k + 1.0);
  const double q = -0.5 * z * z;
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < 200; ++k) {
    term *= q / (k * (2.0 * l + 2.0 * k + 1.0));
    sum += term;
    if (std::abs(term) <= 1e-17 * std::abs(sum)) break;
  }
  return lead * sum;
}

}  // namespace

double spherical_bessel(int l, double z) {
  if (l < 0) throw InvalidArgument("spherical_bessel: negative order");
  if (z < 0.0 || !std::isfinite(z)) throw InvalidArgument("spherical_bessel: argument must be finite and >= 0");
  if (z == 0.0) return l == 0 ? 1.0 : 0.0;
  // Closed forms cancel catastrophically for z below the order; the series is exact there.
  if (z < 1e-4 || z < l + 1.0) return spherical_bessel_series(l, z);
  const double s = std::sin(z);
  const double c = std::cos(z);
  const double j0 = s / z;
  if (l == 0) return j0;
  const double j1 = s / (z * z) - c / z;
  if (l == 1) return j1;
  if (l == 2) return (3.0 / (z * z * z) - 1.0 / z) * s - 3.0 * c / (z * z);
  double prev = j0;
  double curr = j1;
  for (int k = 1; k < l; ++k) {
    const double next = (2.0 * k + 1.0) / z * curr - prev;
    prev = curr;
    curr = next;
  }
  return curr;
}

double legendre(int l, double u) {
  if (l < 0) throw InvalidArgument("legendre: negative degree");
  if (!(std::abs(u) <= 1.0)) throw InvalidArgument("legendre: argument outside [-1, 1]");
  if (l == 0) return 1.0;
  double prev = 1.0;
  double curr = u;
  for (int k = 1; k < l; ++k) {
    const double next = ((2.0 * k + 1.0) * u * curr - k * prev) / (k + 1.0);
    prev = curr;
    curr = next;
  }
  return curr;
}

double legendre_derivative(int l, double u) {
  if (l == 0) return 0.0;
  if (std::abs(u) == 1.0) return (u > 0 ? 1.0 : (l % 2 == 0 ? -1.0 : 1.0)) * 0.5 * l * (l + 1.0);
  return l * (u * legendre(l, u) - legendre(l - 1, u)) / (u * u - 1.0);
}

double aux(AuxKind kind, double x) {
  switch (kind) {
    case AuxKind::erf:
      return std::erf(x);
    case AuxKind::log_gamma:
      if (!(x > 0.0)) throw InvalidArgument("log_gamma: argument must be positive");
      {
        int sign = 0;  // lgamma_r: std::lgamma writes the global signgam
        return ::lgamma_r(x, &sign);
      }
  }
  throw InvalidArgument("aux: unknown kind");
}

}  // namespace cesent::specfun
