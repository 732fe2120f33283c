#pragma once

#include "core/grid.hpp"
#include "core/state.hpp"

namespace cesent {

// Fixed model constants: epsilon = 3 in the confluent-hypergeometric deformation,
// hbar = m = omega = 1.
inline constexpr int kEpsilon = 3;

// W(r) = r + (l+1)/r + u'/u with u = (2r^2+2l+3)/(2l+3), or W(x) = x + 4x/(1+2x^2).
double superpotential(Family family, int l, double x);
double superpotential_derivative(Family family, int l, double x);

// Closed-form partner potentials V_+ and V_-, constant shifts included.
double potential(Family family, Sector sector, int l, double x);

double energy(const StateSpec& spec);

enum class LadderDirection {
  raise_plus,   // A^+ = (d/dx + W)/sqrt2, maps the minus sector onto the plus sector
  lower_minus,  // A^- = (-d/dx + W)/sqrt2, maps the plus sector onto the minus sector
};

// Applies A^+ or A^- to a uniformly sampled function using 5-point central
// differences. The result lives on the interior (4 points dropped per side).
// Throws GridTooCoarse when the Richardson estimate of the derivative error
// (h versus 2h stencils) exceeds derivative_tol anywhere.
GridFunction apply_ladder(LadderDirection direction, const GridFunction& psi, Family family, int l,
                          double derivative_tol = 1e-6);

// 5-point second derivative on the interior of a uniform grid (2 points dropped per side).
template <typename T>
BasicGridFunction<T> second_derivative(const BasicGridFunction<T>& g);

}  // namespace cesent
