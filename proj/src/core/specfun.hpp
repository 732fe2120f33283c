#pragma once

// Special functions used by the eigenstate formulas. All polynomials are
// evaluated by upward three-term recurrence; degrees stay small (n <= 12).

namespace cesent::specfun {

struct PolyIndex {
  int n = 0;
  double alpha = 0.0;
};

// Physicists' Hermite H_n(x).
double hermite(int n, double x);

// Generalized Laguerre L_n^alpha(x). Requires n >= 0, alpha > -1.
double laguerre(PolyIndex idx, double x);

// Standard spherical Bessel j_l(z) = sqrt(pi/(2z)) J_{l+1/2}(z), z >= 0.
double spherical_bessel(int l, double z);

// Legendre P_l(u), |u| <= 1.
double legendre(int l, double u);

// Derivative P_l'(u), used for Gauss-Legendre node refinement.
double legendre_derivative(int l, double u);

enum class AuxKind { erf, log_gamma };

double aux(AuxKind kind, double x);

inline double erf(double x) { return aux(AuxKind::erf, x); }
inline double log_gamma(double x) { return aux(AuxKind::log_gamma, x); }

}  // namespace cesent::specfun
