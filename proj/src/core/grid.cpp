#include "core/grid.hpp"

#include <cmath>

#include "core/error.hpp"

namespace cesent {

std::vector<double> uniform_points(double a, double b, double h) {
  if (!(b > a) || !(h > 0.0)) throw InvalidArgument("uniform grid requires a < b and h > 0");
  const auto count = static_cast<size_t>(std::llround((b - a) / h)) + 1;
  std::vector<double> pts(count);
  for (size_t i = 0; i < count; ++i) pts[i] = a + static_cast<double>(i) * h;
  return pts;
}

template <typename T>
void validate_uniform(const BasicGridFunction<T>& g) {
  if (g.points.size() != g.values.size()) throw InvalidArgument("grid: points/values length mismatch");
  if (g.points.size() < kMinGridPoints) throw InvalidArgument("grid: fewer than 16 points");
  const double h = g.spacing();
  if (!(h > 0.0)) throw InvalidArgument("grid: points must be strictly increasing");
  for (size_t i = 1; i < g.points.size(); ++i) {
    const double d = g.points[i] - g.points[i - 1];
    if (!(d > 0.0) || std::abs(d - h) > 1e-9 * std::max(1.0, std::abs(g.points[i]))) {
      throw InvalidArgument("grid: spacing is not uniform");
    }
  }
  for (const T& v : g.values) {
    if (!std::isfinite(std::abs(v))) throw InvalidArgument("grid: non-finite value");
  }
}

template <typename T>
double l2_norm(const BasicGridFunction<T>& g) {
  double sum = 0.0;
  for (const T& v : g.values) sum += std::norm(v);
  return std::sqrt(sum * g.spacing());
}

template void validate_uniform(const GridFunction&);
template void validate_uniform(const ComplexGridFunction&);
template double l2_norm(const GridFunction&);
template double l2_norm(const ComplexGridFunction&);

}  // namespace cesent
