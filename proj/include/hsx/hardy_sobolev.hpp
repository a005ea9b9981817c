#ifndef HSX_HARDY_SOBOLEV_HPP
#define HSX_HARDY_SOBOLEV_HPP

#include <optional>
#include <vector>

#include "hsx/boundary.hpp"
#include "hsx/laguerre.hpp"
#include "hsx/types.hpp"
#include "hsx/weighted.hpp"

namespace hsx {

/// Element of the holomorphic Sobolev-Hardy space on the upper half-plane,
/// carried by its boundary stack and/or (p = 2) its half-line spectrum.
struct HardySobolevElement {
  std::optional<BoundarySample> boundary;
  std::optional<SpectrumSample> fourier;
  int order = 0;
  Real exponent = 2.0;
  Real construction_residual = 0.0;
};

struct ElementOptions {
  Real hardy_tolerance = 1e-3;
};

/// Boundary-representation element; rejects stacks whose Cauchy-vanishing
/// residual exceeds the tolerance (the data is not an upper-boundary trace).
HardySobolevElement make_boundary_element(BoundarySample sample,
                                          const ElementOptions& options = {});

/// Fourier-representation element (p = 2 only).
HardySobolevElement make_fourier_element(SpectrumSample sample);

/// Element for spectra of the form p(t) e^{-t} given in the L_m(2t) basis.
/// Both representations are built; the boundary stack uses the exact rational
/// transform, so it is accurate over the whole grid.
HardySobolevElement element_from_laguerre(const VectorXr& coeffs, int order,
                                          Real exponent, const RealGrid& grid,
                                          const HalfLineGrid& half_grid);

/// Cauchy integral (1/2 pi i) int F_l(x)/(x - z) dx for Im z > 0. For p = inf
/// the normalized kernel 1/(x-z) - 1/(x+i) is used.
Complex cauchy_eval(const HardySobolevElement& f, Complex z);

/// Poisson integral of stack level k at z = x + i y.
Complex poisson_eval(const HardySobolevElement& f, int level, Complex z);

struct DerivativeEvalResult {
  Complex value;
  Real variant_discrepancy = 0.0;  // k!-kernel vs integrated-by-parts route
  bool stack_consistent = true;
};

/// F^{(k)}(z) via the k!-kernel; also evaluated through the once-integrated
/// kernel against D^{(k-1)} as a stack-consistency diagnostic.
DerivativeEvalResult derivative_eval(const HardySobolevElement& f, int level, Complex z,
                                     Real flag_tolerance = 1e-3);

/// Value-only route of derivative_eval (no consistency diagnostic); the
/// evaluation primitive for batch drivers.
Complex interior_eval(const HardySobolevElement& f, int level, Complex z);

Real hs_norm(const HardySobolevElement& f);

struct EmbeddingReport {
  Real sup_val = 0.0;
  Real bound = 0.0;
  bool pass = false;
};

/// Checks sup_{C+} |F| <= e^{1/e} ||F|| over the standard probe lattice
/// (near-boundary rows dominate) plus the boundary grid itself.
EmbeddingReport embedding_check(const HardySobolevElement& f);

struct ProductReport {
  HardySobolevElement product;
  Real lhs = 0.0;
  Real rhs = 0.0;
  bool pass = false;
};

/// Pointwise product through Leibniz on the boundary stacks, with the
/// submultiplicativity bound C (2^{p(n+1)}-1)^{1/p} / (2^p-1)^{1/p}, C = e^{1/e}
/// (for p = inf: 2^{n+1}-1). Requires n >= 1.
ProductReport product(const HardySobolevElement& f, const HardySobolevElement& g);

/// Row of F(x + i y) values over the whole grid via one multiplier pass
/// (Riesz projection damped by e^{-y xi}).
ArrayXc upper_halfplane_row(const BoundarySample& f, Real height);

inline constexpr Real kEmbeddingConstant = 1.4446678610097661337;  // e^{1/e}

}  // namespace hsx

#endif
