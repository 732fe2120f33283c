#include "core/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

#include "core/error.hpp"
#include "core/specfun.hpp"

namespace cesent {

namespace {

constexpr int kOrder = 10;
constexpr int kInitialPanels = 16;
constexpr double kNegativeDensityTolerance = 1e-12;

struct Rule {
  std::array<double, kOrder> nodes{};
  std::array<double, kOrder> weights{};
};

Rule make_rule() {
  Rule rule;
  for (int i = 0; i < kOrder; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (kOrder + 0.5));
    for (int it = 0; it < 100; ++it) {
      const double dx = specfun::legendre(kOrder, x) / specfun::legendre_derivative(kOrder, x);
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double dp = specfun::legendre_derivative(kOrder, x);
    rule.nodes[i] = x;
    rule.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

const Rule& rule() {
  static const Rule r = make_rule();
  return r;
}

double gauss(const Integrand& f, double a, double b) {
  const Rule& r = rule();
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  double sum = 0.0;
  for (int i = 0; i < kOrder; ++i) sum += r.weights[i] * f(mid + half * r.nodes[i]);
  return half * sum;
}

struct Panel {
  double a;
  double b;
  double whole;
  double left;
  double right;

  double value() const { return left + right; }
  double error() const { return std::abs(whole - left - right); }
};

Panel make_panel(const Integrand& f, double a, double b, double whole) {
  const double m = 0.5 * (a + b);
  return {a, b, whole, gauss(f, a, m), gauss(f, m, b)};
}

bool by_error(const Panel& x, const Panel& y) { return x.error() < y.error(); }

}  // namespace

IntegrationDomain IntegrationDomain::finite(double a, double b) {
  if (!(a < b)) throw InvalidArgument("finite domain requires a < b");
  return {Kind::finite, a, b};
}

void QuadratureConfig::validate() const {
  if (!(rel_tol > 0.0) || !(abs_tol > 0.0)) throw InvalidArgument("quadrature tolerances must be positive");
  if (!(truncation_radius > 0.0)) throw InvalidArgument("truncation radius must be positive");
  if (max_panels < 16) throw InvalidArgument("max_panels must be at least 16");
}

Bounds truncate(const IntegrationDomain& domain, double radius) {
  switch (domain.kind) {
    case IntegrationDomain::Kind::finite:
      return {domain.a, domain.b};
    case IntegrationDomain::Kind::half_line:
      return {0.0, radius};
    case IntegrationDomain::Kind::full_line:
      return {-radius, radius};
  }
  return {0.0, 0.0};
}

QuadratureResult integrate(const Integrand& f, double lo, double hi, const QuadratureConfig& cfg) {
  cfg.validate();
  if (lo == hi) return {0.0, 0.0, 0};
  if (lo > hi) {
    QuadratureResult r = integrate(f, hi, lo, cfg);
    r.value = -r.value;
    return r;
  }

  std::vector<Panel> heap;
  heap.reserve(static_cast<size_t>(cfg.max_panels) + 1);
  const double width = (hi - lo) / kInitialPanels;
  for (int i = 0; i < kInitialPanels; ++i) {
    const double a = lo + i * width;
    const double b = (i + 1 == kInitialPanels) ? hi : a + width;
    heap.push_back(make_panel(f, a, b, gauss(f, a, b)));
  }
  std::make_heap(heap.begin(), heap.end(), by_error);

  auto totals = [&heap] {
    double value = 0.0;
    double error = 0.0;
    for (const Panel& p : heap) {
      value += p.value();
      error += p.error();
    }
    return QuadratureResult{value, error, static_cast<int>(heap.size())};
  };

  QuadratureResult total = totals();
  while (true) {
    if (!std::isfinite(total.value)) throw InvalidArgument("integrand is not finite on the domain");
    const double target = std::max(cfg.rel_tol * std::abs(total.value), cfg.abs_tol);
    if (total.error <= target) {
      total = totals();
      if (total.error <= std::max(cfg.rel_tol * std::abs(total.value), cfg.abs_tol)) return total;
    }
    if (static_cast<int>(heap.size()) >= cfg.max_panels) {
      total = totals();
      char msg[128];
      std::snprintf(msg, sizeof msg, "quadrature did not converge within %d panels (achieved error %.3e)",
                    cfg.max_panels, total.error);
      throw NonConvergence(msg, total.value, total.error);
    }
    std::pop_heap(heap.begin(), heap.end(), by_error);
    const Panel worst = heap.back();
    heap.pop_back();
    const double m = 0.5 * (worst.a + worst.b);
    const Panel left = make_panel(f, worst.a, m, worst.left);
    const Panel right = make_panel(f, m, worst.b, worst.right);
    total.value += left.value() + right.value() - worst.value();
    total.error += left.error() + right.error() - worst.error();
    heap.push_back(left);
    std::push_heap(heap.begin(), heap.end(), by_error);
    heap.push_back(right);
    std::push_heap(heap.begin(), heap.end(), by_error);
    total.panels = static_cast<int>(heap.size());
  }
}

QuadratureResult integrate(const Integrand& f, const IntegrationDomain& domain, const QuadratureConfig& cfg) {
  const Bounds bounds = truncate(domain, cfg.truncation_radius);
  return integrate(f, bounds.lo, bounds.hi, cfg);
}

double entropy_integrand(double density) {
  if (density < -kNegativeDensityTolerance) {
    throw InvalidArgument("density is negative (" + std::to_string(density) + ")");
  }
  if (!(density > 0.0) || !std::isnormal(density)) return 0.0;
  return -density * std::log(density);
}

QuadratureResult entropy_functional(const Integrand& density, const IntegrationDomain& domain,
                                    const QuadratureConfig& cfg, const Integrand& jacobian) {
  if (jacobian) {
    return integrate([&](double x) { return jacobian(x) * entropy_integrand(density(x)); }, domain, cfg);
  }
  return integrate([&](double x) { return entropy_integrand(density(x)); }, domain, cfg);
}

}  // namespace cesent
