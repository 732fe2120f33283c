#pragma once

#include <complex>
#include <vector>

#include "core/grid.hpp"
#include "core/quadrature.hpp"
#include "core/state.hpp"
#include "core/wavefunctions.hpp"

namespace cesent {

using complex = std::complex<double>;

enum class MomentumMethod { closed_form, direct_transform };

// Momentum-space amplitude of one state. For radial3d this is the reduced
// amplitude g(p) (full amplitude g(p)/p * Y_L^0, normalized as int_0^inf |g|^2 dp = 1);
// for linear1d it is the Fourier transform (2 pi)^{-1/2} int e^{-ipx} psi(x) dx.
//
// operator() returns the amplitude with its constant global phase removed,
// which leaves a real function of p. phase() returns that factor, so the
// transform in the conventions above is phase() * (*this)(p).
class MomentumAmplitude {
 public:
  MomentumAmplitude(const StateSpec& spec, const QuadratureConfig& cfg);

  complex operator()(double p) const { return {value(p), 0.0}; }
  double value(double p) const;
  complex full(double p) const { return phase_ * value(p); }

  const StateSpec& spec() const { return spec_; }
  MomentumMethod method() const { return method_; }
  complex phase() const { return phase_; }
  bool global_phase_dropped() const { return phase_ != complex(1.0, 0.0); }

  // Momentum truncation radius: beyond it |amplitude| <= 1e-9.
  double radius() const { return radius_; }
  Bounds bounds() const;

 private:
  double direct_transform(double p) const;

  StateSpec spec_;
  QuadratureConfig transform_cfg_;
  MomentumMethod method_;
  complex phase_{1.0, 0.0};
  PositionState position_;
  double radius_ = 0.0;
};

// Closed forms of the plus sector (phase removed). The plus state (n, l) has
// angular momentum l: sqrt(2 n!/Gamma(n+l+3/2)) p^{l+1} e^{-p^2/2} L_n^{l+1/2}(p^2);
// linear1d returns the Hermite function.
double momentum_plus(const StateSpec& spec, double p);

// Direct numerical transforms of the minus sector. Radial returns g(p) without
// the i^{-(l+1)} phase; linear returns the complex Fourier transform itself.
complex momentum_minus_radial(const StateSpec& spec, double p, const QuadratureConfig& cfg);
complex momentum_minus_linear(const StateSpec& spec, double p, const QuadratureConfig& cfg);

// int |amplitude|^2 dp over the momentum domain.
QuadratureResult parseval(const MomentumAmplitude& amp, const QuadratureConfig& cfg);

struct Decomposition {
  complex i_value;   // I(p) extracted by inverting the intertwining sum
  double residual;   // |sum rebuilt from the independently integrated I - direct amplitude|
};

// Splits a minus-sector momentum amplitude into the plus-sector amplitude it
// intertwines with and the remainder I(p):
//   radial: G^-(p) = sqrt((2n+2l+3)/(2n+2l+5)) G^+_{n,l+1}(p) + i^{-(l+1)} kappa I(p),
//           kappa = sqrt(32 n! / (pi (2n+2l+5) Gamma(n+l+3/2))),
//           I(p) = int_0^inf (pr) j_{l+1}(pr) r^{l+2} e^{-r^2/2} L_n^{l+1/2}(r^2) / (2r^2+2l+3) dr;
//   linear (minus index n = k+1):
//           Psi^-(p) = C_k [sqrt(sqrt(pi) 2^{k+1} (k+1)!) Psi^+_{k+1}(p) + 4 I(p)],
//           I(p) = FT[x H_k(x) e^{-x^2/2} / (1+2x^2)](p).
// G^+ carries the Fourier-Bessel eigenphase (-1)^n (-i)^{l+1} of the oscillator state.
class Intertwining {
 public:
  Intertwining(const StateSpec& minus_spec, const QuadratureConfig& cfg);

  // Inverts the sum for I(p). Throws IllConditioned where the I-term is lost
  // in cancellation between the minus and plus terms.
  complex extract(double p) const;
  // I(p) from its own integral representation.
  complex direct_i(double p) const;
  // Right-hand side of the sum for a given I (full amplitude, phases included).
  complex reconstruct(double p, complex i_value) const;
  Decomposition decompose(double p) const;

  // Extracted I(p) on a uniform grid; usable[j] is false where extraction is ill-conditioned.
  ComplexGridFunction sample(double a, double b, double h, std::vector<bool>* usable = nullptr) const;

  const MomentumAmplitude& minus() const { return minus_; }
  const MomentumAmplitude& plus() const { return plus_; }
  double plus_coefficient() const { return plus_coef_; }
  double i_coefficient() const { return i_coef_; }

 private:
  StateSpec spec_;
  QuadratureConfig transform_cfg_;
  MomentumAmplitude minus_;
  MomentumAmplitude plus_;
  double plus_coef_ = 0.0;
  double i_coef_ = 0.0;
  double r_max_ = 0.0;
};

Decomposition intertwining_decomposition(const StateSpec& spec, double p, const QuadratureConfig& cfg);

// Inhomogeneous term of the second-order equation satisfied by I(p).
enum class OdeVariant {
  as_printed,                // source term exactly as published
  negated_source,            // opposite sign
  decomposition_normalized,  // source re-derived for I as normalized in the intertwining sum
};

const char* to_string(OdeVariant v);

// Source s(p) in  I'' - q(p) I + s(p) = 0.
complex ode_source(const StateSpec& spec, double p, OdeVariant variant);

// L2 norm over the interior grid of I'' - q I + s, with I'' by 5-point
// differences. Stencils touching a point with usable=false are skipped.
// Throws GridTooCoarse when the h-vs-2h Richardson estimate of the I'' error
// exceeds 1e-3 in L2.
double i_ode_residual(const StateSpec& spec, const ComplexGridFunction& samples,
                      OdeVariant variant = OdeVariant::as_printed, const std::vector<bool>& usable = {});

struct OdeVariantReport {
  OdeVariant best = OdeVariant::as_printed;
  double best_residual = 0.0;
  double printed_residual = 0.0;
  double negated_residual = 0.0;
  double normalized_residual = 0.0;
};

OdeVariantReport classify_ode_variant(const StateSpec& spec, const ComplexGridFunction& samples,
                                      const std::vector<bool>& usable = {});

// Elementary closed form of I(p) for the linear family (n is the plus-sector
// index, the minus state being n+1):
//   I(p) = e^{p/sqrt2} (C1 + K A(p)) + e^{-p/sqrt2} (C2 - K B(p)),
//   A(p) = int_1^p e^{-q(sqrt2+q)/2} g(q) dq,  B(p) = int_1^p e^{q(sqrt2-q)/2} g(q) dq,
//   g = 2n H_{n-1} - q H_n,  K = i^{n+1} / (2 sqrt(2^{n+1} n! sqrt(pi))).
// C1 cancels the growing mode at +inf, C2 the growing mode at -inf.
struct LinearIFit {
  int n = 0;
  complex k_coef;
  complex c1;
  complex c2;
};

LinearIFit fit_linear_i(int n, const QuadratureConfig& cfg);
complex i_closed_form_linear(int n, double p, const LinearIFit& fit, const QuadratureConfig& cfg);

// The closed form is normalized like the published ODE; the intertwining sum's
// I equals this factor times it: (-1)^{n-1} sqrt(2^n n! sqrt(pi)).
double closed_form_to_decomposition_scale(int n);

// Published closed form of the singlet's momentum amplitude, as printed and
// with the exponent e^{p sqrt2} read as e^{p/sqrt2}.
double singlet_momentum_as_printed(double p);
double singlet_momentum_corrected(double p);

}  // namespace cesent
