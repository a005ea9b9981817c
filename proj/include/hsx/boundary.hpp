#ifndef HSX_BOUNDARY_HPP
#define HSX_BOUNDARY_HPP

#include <optional>
#include <vector>

#include "hsx/grids.hpp"
#include "hsx/multiplier.hpp"
#include "hsx/types.hpp"

namespace hsx {

/// Sampled function on the line together with its weak-derivative stack.
/// stack[k] holds D^(k) f on the grid; the stack is validated against the
/// fundamental-theorem law F_k(b) - F_k(a) = int_a^b F_{k+1}.
struct BoundarySample {
  RealGrid grid;
  std::vector<ArrayXc> stack;
  int order = 0;
  Real exponent = 2.0;  // p in [1, inf]; inf encoded as infinity()
  Real ftc_defect = 0.0;
};

enum class LiftMethod { Spectral, FiniteDifference };

// The rejection floor accommodates the periodization tails of x^{-2}-decaying
// data at desk scale; smooth decaying stacks sit orders of magnitude below it.
inline constexpr Real kDefaultFtcTolerance = 5e-5;

struct LiftOptions {
  LiftMethod method = LiftMethod::Spectral;
  Real ftc_tolerance = kDefaultFtcTolerance;
};

/// Builds the derivative stack from level-0 samples. Rejects stacks whose FTC
/// defect exceeds the tolerance (the samples do not resolve a Sobolev function
/// of this order at this resolution).
BoundarySample lift_to_sobolev(const ArrayXc& values, const RealGrid& grid, int order,
                               Real exponent, const LiftOptions& options = {});

/// Wraps an externally built stack (closed-form derivatives); same validation.
BoundarySample make_boundary_sample(const RealGrid& grid, std::vector<ArrayXc> stack,
                                    Real exponent,
                                    Real ftc_tolerance = kDefaultFtcTolerance);

/// Trapezoid L^p norm of one stack level (grid max for p = inf).
Real level_lp_norm(const BoundarySample& f, int level);

/// W_n^p norm: p-sum of level norms, or sum of sup-norms for p = inf.
Real sobolev_norm(const BoundarySample& f);

/// Max over a dyadic family of windows of |F_k(b) - F_k(a) - int_a^b F_{k+1}|.
Real ftc_residual(const BoundarySample& f, int level);

enum class HalfPlane { Plus, Minus };

std::vector<Complex> default_hardy_probes(HalfPlane half);

/// Normalized Cauchy-vanishing defect: max over probes of
/// |int f(x)/(x - conj(z)) dx| / (||f||_p ||(x - conj(z))^{-1}||_q).
/// The quadrature completes the tails with the fitted c/x decay model.
Real hardy_residual(const BoundarySample& f, HalfPlane half,
                    const std::vector<Complex>& probes);
Real hardy_residual(const BoundarySample& f, HalfPlane half);

struct DecompositionResult {
  BoundarySample plus;
  BoundarySample minus;
  Real reconstruction_error = 0.0;
  Real hardy_residual_plus = 0.0;
  Real hardy_residual_minus = 0.0;
  std::optional<Real> orthogonality_defect;  // p = 2 only
};

/// f -> (f/2 + i/2 Hf, f/2 - i/2 Hf) applied levelwise; 1 < p < inf only.
DecompositionResult plemelj_split(const BoundarySample& f);

}  // namespace hsx

#endif
