#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "core/quadrature.hpp"

namespace cesent {

// A function sampled on a strictly increasing grid (uniform for every
// finite-difference consumer in this library).
template <typename T>
struct BasicGridFunction {
  IntegrationDomain domain;
  std::vector<double> points;
  std::vector<T> values;

  size_t size() const { return points.size(); }
  double spacing() const { return points.size() > 1 ? points[1] - points[0] : 0.0; }
};

using GridFunction = BasicGridFunction<double>;
using ComplexGridFunction = BasicGridFunction<std::complex<double>>;

inline constexpr size_t kMinGridPoints = 16;

// count points a, a+h, ..., b (b included up to rounding).
std::vector<double> uniform_points(double a, double b, double h);

// Throws InvalidArgument unless the grid is strictly increasing, finite,
// uniform to 1e-9 relative, and has at least kMinGridPoints points.
template <typename T>
void validate_uniform(const BasicGridFunction<T>& g);

template <typename T>
BasicGridFunction<T> sample(const std::function<T(double)>& f, std::vector<double> points) {
  BasicGridFunction<T> g;
  g.domain = IntegrationDomain::finite(points.front(), points.back());
  g.values.reserve(points.size());
  for (double x : points) g.values.push_back(f(x));
  g.points = std::move(points);
  return g;
}

// Discrete L2 norm sqrt(h * sum |v|^2) on a uniform grid.
template <typename T>
double l2_norm(const BasicGridFunction<T>& g);

}  // namespace cesent
