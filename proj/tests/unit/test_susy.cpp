#include <doctest.h>

#include <cmath>
#include <numbers>

#include "core/error.hpp"
#include "core/grid.hpp"
#include "core/susy.hpp"
#include "core/wavefunctions.hpp"

using namespace cesent;
using doctest::Approx;

namespace {

GridFunction sampled(const StateSpec& spec, double a, double b, double h) {
  return sample<double>([&](double x) { return psi_position(spec, x); }, uniform_points(a, b, h));
}

double max_abs_diff(const GridFunction& g, const std::function<double(double)>& f, double scale) {
  double worst = 0.0;
  for (size_t i = 0; i < g.size(); ++i) worst = std::max(worst, std::abs(scale * g.values[i] - f(g.points[i])));
  return worst;
}

}  // namespace

TEST_CASE("superpotential examples") {
  CHECK(superpotential(Family::radial3d, 0, 1.0) == Approx(2.8));
  CHECK(superpotential(Family::linear1d, 0, 0.0) == 0.0);
  CHECK(superpotential(Family::linear1d, 0, 1.0) == Approx(2.333333).epsilon(1e-6));
  CHECK_THROWS_AS(superpotential(Family::radial3d, 0, 0.0), InvalidArgument);
  CHECK_THROWS_AS(superpotential(Family::radial3d, 1, -1.0), InvalidArgument);
}

TEST_CASE("superpotential derivative matches finite differences") {
  const double h = 1e-5;
  for (Family f : {Family::radial3d, Family::linear1d}) {
    for (int l = 0; l <= 3; ++l) {
      for (double x = 0.2; x < 6.0; x += 0.35) {
        const double fd = (superpotential(f, l, x + h) - superpotential(f, l, x - h)) / (2 * h);
        CHECK(superpotential_derivative(f, l, x) == Approx(fd).epsilon(1e-7));
      }
    }
  }
}

TEST_CASE("potential examples") {
  CHECK(potential(Family::linear1d, Sector::plus, 0, 0.0) == Approx(2.5));
  CHECK(potential(Family::linear1d, Sector::minus, 0, 0.0) == Approx(-2.5));
  CHECK(potential(Family::radial3d, Sector::plus, 0, 1.0) == Approx(4.0));
}

TEST_CASE("partner potentials differ from (W^2 +- W')/2 by a constant") {
  for (Family f : {Family::radial3d, Family::linear1d}) {
    for (int l = 0; l <= (f == Family::radial3d ? 3 : 0); ++l) {
      for (Sector s : {Sector::plus, Sector::minus}) {
        const double sign = s == Sector::plus ? 1.0 : -1.0;
        const auto shift = [&](double x) {
          const double w = superpotential(f, l, x);
          return potential(f, s, l, x) - 0.5 * (w * w + sign * superpotential_derivative(f, l, x));
        };
        const double c0 = shift(0.3);
        for (int i = 0; i < 100; ++i) {
          const double x = f == Family::radial3d ? 0.05 + 0.08 * i : -4.0 + 0.08 * i;
          if (f == Family::linear1d || x > 0) CHECK(std::abs(shift(x) - c0) <= 1e-8);
        }
        // The printed shifts make the factorization exact (no extra constant).
        CHECK(std::abs(c0) <= 1e-12);
      }
    }
  }
}

TEST_CASE("energy examples and degeneracy pairing") {
  CHECK(energy({Family::radial3d, Sector::minus, 0, 0}) == 5.0);
  CHECK(energy({Family::linear1d, Sector::minus, 0, 0}) == 0.0);
  CHECK(energy({Family::linear1d, Sector::plus, 2, 0}) == 5.0);
  for (int n = 0; n <= 9; ++n) {
    for (int l = 0; l <= 3; ++l)
      CHECK(energy({Family::radial3d, Sector::plus, n, l}) == energy({Family::radial3d, Sector::minus, n, l}));
    CHECK(energy({Family::linear1d, Sector::plus, n, 0}) == energy({Family::linear1d, Sector::minus, n + 1, 0}));
  }
  CHECK_THROWS_AS(energy({Family::linear1d, Sector::plus, -1, 0}), InvalidArgument);
  CHECK_THROWS_AS(energy({Family::radial3d, Sector::plus, 0, 4}), InvalidArgument);
}

TEST_CASE("linear superpotential approaches x") {
  for (double x = 2.0; x < 50.0; x += 0.5) {
    CHECK(std::abs(superpotential(Family::linear1d, 0, x) - x) <= 2.0 / x);
    CHECK(std::abs(superpotential(Family::linear1d, 0, -x) + x) <= 2.0 / x);
  }
}

TEST_CASE("A+ annihilates the zero-energy singlet") {
  const GridFunction psi = sampled({Family::linear1d, Sector::minus, 0, 0}, -10.0, 10.0, 1e-3);
  const GridFunction out = apply_ladder(LadderDirection::raise_plus, psi, Family::linear1d, 0);
  CHECK(l2_norm(out) <= 1e-6);
}

TEST_CASE("A+ maps radial minus states onto plus states of the same n and l") {
  for (int l = 0; l <= 1; ++l) {
    for (int n = 0; n <= 3; ++n) {
      const StateSpec minus{Family::radial3d, Sector::minus, n, l};
      const StateSpec plus{Family::radial3d, Sector::plus, n, l};
      const GridFunction psi = sampled(minus, 0.05, 10.0, 1e-3);
      const GridFunction out = apply_ladder(LadderDirection::raise_plus, psi, Family::radial3d, l);
      const double scale = 1.0 / std::sqrt(energy(minus));
      CAPTURE(n);
      CAPTURE(l);
      CHECK(max_abs_diff(out, [&](double r) { return psi_position(plus, r); }, scale) <= 1e-6);
    }
  }
}

TEST_CASE("A- maps linear plus states onto the minus state one level up") {
  for (int n = 0; n <= 4; ++n) {
    const StateSpec plus{Family::linear1d, Sector::plus, n, 0};
    const StateSpec minus{Family::linear1d, Sector::minus, n + 1, 0};
    const GridFunction psi = sampled(plus, -10.0, 10.0, 1e-3);
    const GridFunction out = apply_ladder(LadderDirection::lower_minus, psi, Family::linear1d, 0);
    const double scale = 1.0 / std::sqrt(energy(plus));
    CAPTURE(n);
    CHECK(max_abs_diff(out, [&](double x) { return psi_position(minus, x); }, scale) <= 1e-6);
    // And back: A+ psi^-_{n+1} / sqrt(E) = psi^+_n (L2).
    const GridFunction back =
        apply_ladder(LadderDirection::raise_plus, sampled(minus, -10.0, 10.0, 1e-3), Family::linear1d, 0);
    GridFunction diff = back;
    for (size_t i = 0; i < diff.size(); ++i) diff.values[i] = scale * back.values[i] - psi_position(plus, back.points[i]);
    CHECK(l2_norm(diff) <= 1e-6);
  }
}

TEST_CASE("ladder reports a grid that is too coarse") {
  const GridFunction psi = sampled({Family::linear1d, Sector::plus, 6, 0}, -8.0, 8.0, 0.25);
  CHECK_THROWS_AS(apply_ladder(LadderDirection::lower_minus, psi, Family::linear1d, 0), GridTooCoarse);
}

TEST_CASE("second derivative of a polynomial is exact") {
  const GridFunction g = sample<double>([](double x) { return x * x * x; }, uniform_points(-1.0, 1.0, 0.01));
  const GridFunction d2 = second_derivative(g);
  CHECK(d2.size() == g.size() - 4);
  for (size_t i = 0; i < d2.size(); ++i) CHECK(d2.values[i] == Approx(6 * d2.points[i]).epsilon(1e-8));
}
