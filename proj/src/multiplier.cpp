#include "hsx/multiplier.hpp"

#include <cmath>

#include <unsupported/Eigen/FFT>

namespace hsx {

MultiplierSpec hilbert_multiplier() {
  MultiplierSpec s;
  s.symbol = [](Real xi) -> Complex {
    if (xi > 0.0) return Complex(0.0, -1.0);
    if (xi < 0.0) return Complex(0.0, 1.0);
    return Complex(0.0, 0.0);
  };
  s.limit_right0 = Complex(0.0, -1.0);
  s.limit_left0 = Complex(0.0, 1.0);
  s.nyquist_policy = NyquistPolicy::Zero;
  s.name = "hilbert";
  return s;
}

MultiplierSpec riesz_plus_multiplier() {
  MultiplierSpec s;
  s.symbol = [](Real xi) -> Complex { return xi > 0.0 ? 1.0 : 0.0; };
  s.limit_right0 = 1.0;
  s.limit_left0 = 0.0;
  s.nyquist_policy = NyquistPolicy::Fixed;
  s.nyquist_value = 0.5;  // keeps P+ + P- = I exact at every bin
  s.name = "riesz-plus";
  return s;
}

MultiplierSpec riesz_minus_multiplier() {
  MultiplierSpec s;
  s.symbol = [](Real xi) -> Complex { return xi < 0.0 ? 1.0 : 0.0; };
  s.limit_right0 = 0.0;
  s.limit_left0 = 1.0;
  s.nyquist_policy = NyquistPolicy::Fixed;
  s.nyquist_value = 0.5;
  s.name = "riesz-minus";
  return s;
}

MultiplierSpec derivative_multiplier(int order) {
  if (order < 0) throw InvalidInput("derivative_multiplier: order must be >= 0");
  MultiplierSpec s;
  s.symbol = [order](Real xi) -> Complex {
    return std::pow(Complex(0.0, xi), order);
  };
  s.limit_right0 = order == 0 ? 1.0 : 0.0;
  s.limit_left0 = s.limit_right0;
  s.nyquist_policy =
      order % 2 == 0 ? NyquistPolicy::EvaluateAtPositive : NyquistPolicy::Zero;
  s.name = "derivative-" + std::to_string(order);
  return s;
}

ArrayXr grid_frequencies(const RealGrid& grid) {
  const Eigen::Index n = grid.point_count;
  ArrayXr xi(n);
  const Real base = kPi / grid.half_width;
  for (Eigen::Index k = 0; k < n; ++k) {
    const Eigen::Index signed_k = (k <= n / 2) ? k : k - n;
    xi[k] = base * static_cast<Real>(signed_k);
  }
  return xi;
}

MultiplierResult apply_multiplier(const ArrayXc& samples, const RealGrid& grid,
                                  const MultiplierSpec& spec, Real tail_bound) {
  const Eigen::Index n = grid.point_count;
  if (samples.size() != n) {
    throw InvalidInput("apply_multiplier: sample count does not match grid");
  }

  MultiplierResult out;
  const Real fmax = samples.abs().maxCoeff();
  const Real tail = std::max(std::abs(samples[0]), std::abs(samples[n - 1]));
  out.tail_ratio = fmax > 0.0 ? tail / fmax : 0.0;
  out.tail_ok = out.tail_ratio <= tail_bound;

  Eigen::FFT<Real> fft;
  VectorXc in = samples.matrix();
  VectorXc hat(n);
  fft.fwd(hat, in);

  const ArrayXr xi = grid_frequencies(grid);
  for (Eigen::Index k = 1; k < n; ++k) {
    if (k == n / 2) continue;
    hat[k] *= spec.symbol(xi[k]);
  }
  hat[0] *= 0.5 * (spec.limit_right0 + spec.limit_left0);
  switch (spec.nyquist_policy) {
    case NyquistPolicy::Zero:
      hat[n / 2] = Complex(0.0, 0.0);
      break;
    case NyquistPolicy::Fixed:
      hat[n / 2] *= spec.nyquist_value;
      break;
    case NyquistPolicy::EvaluateAtPositive:
      hat[n / 2] *= spec.symbol(std::abs(xi[n / 2]));
      break;
  }

  VectorXc res(n);
  fft.inv(res, hat);
  out.values = res.array();

  // De-aliasing of the slowly decaying output induced by a jump of m at xi=0.
  // The image sum of c/x over the 2L-periodization is c [ (pi/2L) cot(pi x/2L) - 1/x ].
  const Complex jump = spec.limit_right0 - spec.limit_left0;
  if (jump != Complex(0.0, 0.0)) {
    const Complex fhat0 = grid.step * samples.sum();
    const Complex c = jump * fhat0 * Complex(0.0, 1.0) / (2.0 * kPi);
    if (c != Complex(0.0, 0.0)) {
      const Real l = grid.half_width;
      for (Eigen::Index j = 0; j < n; ++j) {
        const Real x = grid.nodes[j];
        if (x == 0.0) continue;
        const Real w = (kPi / (2.0 * l)) / std::tan(kPi * x / (2.0 * l)) - 1.0 / x;
        out.values[j] -= c * w;
      }
    }
  }
  return out;
}

}  // namespace hsx
