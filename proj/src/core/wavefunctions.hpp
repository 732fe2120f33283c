#pragma once

#include "core/quadrature.hpp"
#include "core/state.hpp"

namespace cesent {

// Reduced radial wavefunction chi(r) (radial3d, r >= 0) or the 1-D
// wavefunction (linear1d), exactly as the closed forms are printed,
// i.e. without numerical renormalization.
double psi_position(const StateSpec& spec, double x);

// Exceptional polynomial p_n and weight w of the minus sector:
// psi_n^- = N_n sqrt(w) p_n. For linear1d, n counts from the singlet (p_0 = 1).
double exceptional_poly(Family family, int n, int l, double x);
double weight(Family family, int l, double x);

// The printed normalization N_n of the minus-sector factorization.
double exceptional_normalization(Family family, int n, int l);

// Truncation radius for integrals over this state: the configured radius, or
// further out if the envelope x^{2d} e^{-x^2} (d grows with n, l) has not yet
// fallen below 1e-18 of its peak.
double state_radius(const StateSpec& spec, const QuadratureConfig& cfg);

// Domain of the state: [0, inf) for radial3d, the whole line for linear1d.
IntegrationDomain state_domain(Family family);

struct NormReport {
  double norm = 0.0;
  double error = 0.0;
  // |norm - 1| > 1e-6: the printed constant is suspect and downstream
  // quantities use the numerically renormalized state.
  bool suspected_erratum = false;
};

NormReport norm_check(const StateSpec& spec, const QuadratureConfig& cfg);

// Position-space eigenstate, renormalized by its computed norm.
class PositionState {
 public:
  PositionState(const StateSpec& spec, const QuadratureConfig& cfg);

  double operator()(double x) const { return scale_ * psi_position(spec_, x); }

  const StateSpec& spec() const { return spec_; }
  const NormReport& norm() const { return norm_; }
  double radius() const { return radius_; }
  Bounds bounds() const;

 private:
  StateSpec spec_;
  NormReport norm_;
  double scale_ = 1.0;
  double radius_ = 0.0;
};

struct OverlapResult {
  double value = 0.0;   // int p_{n1} p_{n2} w
  double scaled = 0.0;  // value / sqrt(diag(n1) diag(n2))
};

OverlapResult orthogonality_check(Family family, int l, int n1, int n2, const QuadratureConfig& cfg);

// Real zeros of the state on its truncation domain, counted as sign changes on
// a grid of spacing h, ignoring samples below 1e-10 of the maximum magnitude.
int count_nodes(const StateSpec& spec, const QuadratureConfig& cfg, double h = 1e-3);

// L2 norm of -psi''/2 + V psi - E psi on a uniform grid of spacing h.
// Radial grids start at r = 0.05 to stay clear of the centrifugal singularity.
double schrodinger_residual(const StateSpec& spec, const QuadratureConfig& cfg, double h = 1e-3);

}  // namespace cesent
