#include "core/susy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "core/error.hpp"

namespace cesent {

namespace {

void require_positive_radius(Family family, double x) {
  if (family == Family::radial3d && !(x > 0.0)) throw InvalidArgument("radial coordinate must be > 0");
}

}  // namespace

double superpotential(Family family, int l, double x) {
  require_positive_radius(family, x);
  if (family == Family::linear1d) return x + 4.0 * x / (1.0 + 2.0 * x * x);
  const double d = 2.0 * x * x + 2.0 * l + 3.0;
  return x + (l + 1.0) / x + 4.0 * x / d;
}

double superpotential_derivative(Family family, int l, double x) {
  require_positive_radius(family, x);
  if (family == Family::linear1d) {
    const double d = 1.0 + 2.0 * x * x;
    return 1.0 + 4.0 * (1.0 - 2.0 * x * x) / (d * d);
  }
  const double c = 2.0 * l + 3.0;
  const double d = 2.0 * x * x + c;
  return 1.0 - (l + 1.0) / (x * x) + 4.0 * (c - 2.0 * x * x) / (d * d);
}

double potential(Family family, Sector sector, int l, double x) {
  require_positive_radius(family, x);
  const double x2 = x * x;
  if (family == Family::linear1d) {
    if (sector == Sector::plus) return 0.5 * x2 + 2.5;
    const double d = 1.0 + 2.0 * x2;
    return 0.5 * x2 - 4.0 / d + 16.0 * x2 / (d * d) + 1.5;
  }
  if (sector == Sector::plus) return 0.5 * x2 + l * (l + 1.0) / (2.0 * x2) + l + 3.5;
  const double d = 2.0 * x2 + 2.0 * l + 3.0;
  return 0.5 * x2 + (l + 1.0) * (l + 2.0) / (2.0 * x2) +
         4.0 * x / d * (2.0 * x + 2.0 * (l + 1.0) / x + 4.0 * x / d) + l - 1.5;
}

double energy(const StateSpec& spec) {
  validate(spec);
  if (spec.family == Family::radial3d) return 2.0 * spec.n + 2.0 * spec.l + 5.0;
  if (spec.sector == Sector::plus) return spec.n + 3.0;
  return spec.n == 0 ? 0.0 : spec.n + 2.0;
}

namespace {

// 5-point first derivative with stride s (s=1: spacing h, s=2: spacing 2h).
double d1(const std::vector<double>& v, size_t i, size_t s, double h) {
  return (v[i - 2 * s] - 8.0 * v[i - s] + 8.0 * v[i + s] - v[i + 2 * s]) / (12.0 * h * s);
}

}  // namespace

GridFunction apply_ladder(LadderDirection direction, const GridFunction& psi, Family family, int l,
                          double derivative_tol) {
  validate_uniform(psi);
  const double h = psi.spacing();
  const double sign = direction == LadderDirection::raise_plus ? 1.0 : -1.0;
  GridFunction out;
  const size_t n = psi.size();
  double worst = 0.0;
  for (size_t i = 4; i + 4 < n; ++i) {
    const double fine = d1(psi.values, i, 1, h);
    const double coarse = d1(psi.values, i, 2, h);
    worst = std::max(worst, std::abs(fine - coarse) / 15.0);
    const double x = psi.points[i];
    out.points.push_back(x);
    out.values.push_back((sign * fine + superpotential(family, l, x) * psi.values[i]) / std::numbers::sqrt2);
  }
  if (worst > derivative_tol) {
    throw GridTooCoarse("ladder: estimated derivative error " + std::to_string(worst) + " exceeds tolerance");
  }
  if (out.points.size() < kMinGridPoints) throw InvalidArgument("ladder: grid too short");
  out.domain = IntegrationDomain::finite(out.points.front(), out.points.back());
  return out;
}

template <typename T>
BasicGridFunction<T> second_derivative(const BasicGridFunction<T>& g) {
  validate_uniform(g);
  const double h = g.spacing();
  BasicGridFunction<T> out;
  const auto& v = g.values;
  for (size_t i = 2; i + 2 < g.size(); ++i) {
    out.points.push_back(g.points[i]);
    out.values.push_back((-v[i - 2] + 16.0 * v[i - 1] - 30.0 * v[i] + 16.0 * v[i + 1] - v[i + 2]) / (12.0 * h * h));
  }
  out.domain = IntegrationDomain::finite(out.points.front(), out.points.back());
  return out;
}

template GridFunction second_derivative(const GridFunction&);
template ComplexGridFunction second_derivative(const ComplexGridFunction&);

}  // namespace cesent
