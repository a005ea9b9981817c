#ifndef HSX_MULTIPLIER_HPP
#define HSX_MULTIPLIER_HPP

#include <functional>
#include <string>

#include "hsx/grids.hpp"
#include "hsx/types.hpp"

namespace hsx {

/// How the sign-ambiguous Nyquist bin is resolved.
enum class NyquistPolicy {
  Zero,                // odd symbols (hilbert, odd derivatives)
  Fixed,               // fixed value (riesz projections use 1/2)
  EvaluateAtPositive,  // continuous symbols: m(+|xi_nyq|)
};

/// Fourier multiplier m(xi) together with the data the discrete engine needs
/// at the special bins: one-sided limits at xi = 0 and the Nyquist rule.
/// Convention: fhat(xi) = int f(x) e^{-i xi x} dx, so riesz-plus keeps xi > 0.
struct MultiplierSpec {
  std::function<Complex(Real)> symbol;
  Complex limit_right0{0.0, 0.0};  // m(0+)
  Complex limit_left0{0.0, 0.0};   // m(0-)
  NyquistPolicy nyquist_policy = NyquistPolicy::Zero;
  Complex nyquist_value{0.0, 0.0};
  std::string name;
};

MultiplierSpec hilbert_multiplier();
MultiplierSpec riesz_plus_multiplier();
MultiplierSpec riesz_minus_multiplier();
MultiplierSpec derivative_multiplier(int order);

struct MultiplierResult {
  ArrayXc values;
  bool tail_ok = true;
  Real tail_ratio = 0.0;  // max(|f(-L)|, |f(L-h)|) / max|f|
};

/// FFT, pointwise multiply by m(xi_k), inverse FFT. The xi = 0 bin gets the
/// average of the one-sided limits. Symbols with a jump at xi = 0 produce
/// outputs with 1/x tails whose periodization the engine removes analytically
/// through the leading-order image sum of c/x, c = [m(0+) - m(0-)] * fhat(0) * i/(2 pi).
MultiplierResult apply_multiplier(const ArrayXc& samples, const RealGrid& grid,
                                  const MultiplierSpec& spec, Real tail_bound = 1e-6);

/// Signed grid frequencies xi_k = pi k / L in FFT bin order.
ArrayXr grid_frequencies(const RealGrid& grid);

}  // namespace hsx

#endif
