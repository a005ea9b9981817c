#ifndef HSX_LAGUERRE_HPP
#define HSX_LAGUERRE_HPP

#include "hsx/types.hpp"

namespace hsx {

// Polynomials expanded in L_m(2t). The family {p(t) e^{-t}} is closed under
// multiplication by t (tridiagonal action on coefficients) and has exact
// rational Fourier-Laplace transforms, which is what makes closed-form
// boundary traces possible: with sigma = 1 - i z,
//   int_0^inf L_m(2t) e^{-sigma t} dt = (sigma - 2)^m / sigma^{m+1},
// and |(sigma-2)/sigma| = 1 on the real line, so the evaluation is stable.

/// L_m(u) for m = 0..max_degree at the given points; row m holds L_m.
MatrixXr laguerre_values(const ArrayXr& u, int max_degree);

/// Coefficients of t * p(t) in the L_m(2t) basis (degree grows by one).
VectorXr laguerre_multiply_by_t(const VectorXr& coeffs);

/// p(t) at the given points via the three-term recurrence.
ArrayXr laguerre_eval(const VectorXr& coeffs, const ArrayXr& t);

/// Transform of (i t)^k p(t) e^{-t} at complex z (Im z >= 0):
/// int_0^inf (i t)^k p(t) e^{-t} e^{i z t} dt.
Complex laguerre_trace(const VectorXr& coeffs, Complex z, int derivative_order);

/// Vectorized trace over many real boundary points.
ArrayXc laguerre_trace_on_line(const VectorXr& coeffs, const ArrayXr& x,
                               int derivative_order, Real height = 0.0);

}  // namespace hsx

#endif
