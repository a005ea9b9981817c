#include "hsx/boundary.hpp"

#include <algorithm>
#include <cmath>

namespace hsx {

namespace detail {
Real ftc_defect_all_levels(const BoundarySample& f);
}  // namespace detail
using detail::ftc_defect_all_levels;

namespace {

void check_exponent(Real p) {
  if (!(p >= 1.0)) throw InvalidInput("exponent must satisfy p >= 1");
}

ArrayXc finite_difference(const ArrayXc& v, Real h) {
  const Eigen::Index n = v.size();
  ArrayXc d(n);
  for (Eigen::Index j = 1; j + 1 < n; ++j) d[j] = (v[j + 1] - v[j - 1]) / (2.0 * h);
  d[0] = (v[1] - v[0]) / h;
  d[n - 1] = (v[n - 1] - v[n - 2]) / h;
  return d;
}

}  // namespace

BoundarySample lift_to_sobolev(const ArrayXc& values, const RealGrid& grid, int order,
                               Real exponent, const LiftOptions& options) {
  if (values.size() != grid.point_count) {
    throw InvalidInput("lift_to_sobolev: sample count does not match grid");
  }
  if (!values.isFinite().all()) throw InvalidInput("lift_to_sobolev: non-finite samples");
  if (order < 0) throw InvalidInput("lift_to_sobolev: order must be >= 0");
  check_exponent(exponent);

  BoundarySample f;
  f.grid = grid;
  f.order = order;
  f.exponent = exponent;
  f.stack.resize(order + 1);
  f.stack[0] = values;
  for (int k = 1; k <= order; ++k) {
    if (options.method == LiftMethod::Spectral) {
      f.stack[k] = apply_multiplier(values, grid, derivative_multiplier(k)).values;
    } else {
      f.stack[k] = finite_difference(f.stack[k - 1], grid.step);
    }
  }
  f.ftc_defect = ftc_defect_all_levels(f);
  if (f.ftc_defect > options.ftc_tolerance) {
    throw InvalidInput(
        "lift_to_sobolev: derivative stack violates the fundamental-theorem law "
        "(defect " +
        std::to_string(f.ftc_defect) + "); not a Sobolev function at this resolution");
  }
  return f;
}

BoundarySample make_boundary_sample(const RealGrid& grid, std::vector<ArrayXc> stack,
                                    Real exponent, Real ftc_tolerance) {
  if (stack.empty()) throw InvalidInput("boundary sample: empty stack");
  for (const auto& level : stack) {
    if (level.size() != grid.point_count) {
      throw InvalidInput("boundary sample: level length does not match grid");
    }
    if (!level.isFinite().all()) throw InvalidInput("boundary sample: non-finite level");
  }
  check_exponent(exponent);
  BoundarySample f;
  f.grid = grid;
  f.stack = std::move(stack);
  f.order = static_cast<int>(f.stack.size()) - 1;
  f.exponent = exponent;
  f.ftc_defect = ftc_defect_all_levels(f);
  if (f.ftc_defect > ftc_tolerance) {
    throw InvalidInput("boundary sample: stack violates the fundamental-theorem law");
  }
  return f;
}

Real level_lp_norm(const BoundarySample& f, int level) {
  if (level < 0 || level > f.order) throw InvalidInput("level out of range");
  const ArrayXr a = f.stack[level].abs();
  if (!is_finite_exponent(f.exponent)) return a.maxCoeff();
  const Real p = f.exponent;
  Real acc = 0.0;
  for (Eigen::Index j = 0; j < a.size(); ++j) acc += std::pow(a[j], p);
  acc -= 0.5 * (std::pow(a[0], p) + std::pow(a[a.size() - 1], p));
  acc *= f.grid.step;
  if (p > 1.0) {
    // complete the |x| > L tails under the fitted |f| ~ |c|/x decay model
    const Real l = f.grid.half_width;
    const Real cp = std::pow(a[0] * l, p) + std::pow(a[a.size() - 1] * l, p);
    acc += cp * std::pow(l, 1.0 - p) / (p - 1.0);
  }
  return std::pow(acc, 1.0 / p);
}

Real sobolev_norm(const BoundarySample& f) {
  if (!is_finite_exponent(f.exponent)) {
    Real acc = 0.0;
    for (int k = 0; k <= f.order; ++k) acc += level_lp_norm(f, k);
    return acc;
  }
  Real acc = 0.0;
  for (int k = 0; k <= f.order; ++k) acc += std::pow(level_lp_norm(f, k), f.exponent);
  return std::pow(acc, 1.0 / f.exponent);
}

namespace detail {

// Dyadic window family: symmetric and one-sided windows with half-widths
// L/2, L/4, ..., down to L/32. Wide windows keep the trapezoid exact enough
// for smooth data while still flagging any broken stack level.
std::vector<std::pair<Eigen::Index, Eigen::Index>> dyadic_windows(const RealGrid& g) {
  std::vector<std::pair<Eigen::Index, Eigen::Index>> w;
  const Eigen::Index n = g.point_count;
  const Eigen::Index mid = n / 2;
  for (int m = 1; m <= 5; ++m) {
    const Eigen::Index half = n >> (m + 1);  // index distance for L/2^m
    if (half < 2) break;
    w.emplace_back(mid - half, mid + half);
    w.emplace_back(mid, mid + half);
    w.emplace_back(mid - half, mid);
  }
  return w;
}

Real ftc_level_defect(const BoundarySample& f, int k) {
  Real worst = 0.0;
  const Real h = f.grid.step;
  const ArrayXc& g = f.stack[k + 1];
  for (const auto& [ia, ib] : dyadic_windows(f.grid)) {
    Complex integral(0.0, 0.0);
    for (Eigen::Index j = ia; j <= ib; ++j) integral += g[j];
    integral -= 0.5 * (g[ia] + g[ib]);
    integral *= h;
    // standard trapezoid end correction, slopes taken from the level itself
    const Complex da = (g[ia + 1] - g[ia - 1]) / (2.0 * h);
    const Complex db = (g[ib + 1] - g[ib - 1]) / (2.0 * h);
    integral -= h * h / 12.0 * (db - da);
    const Complex jump = f.stack[k][ib] - f.stack[k][ia];
    worst = std::max(worst, std::abs(jump - integral));
  }
  return worst;
}

Real ftc_defect_all_levels(const BoundarySample& f) {
  Real worst = 0.0;
  for (int k = 0; k < f.order; ++k) worst = std::max(worst, ftc_level_defect(f, k));
  return worst;
}

}  // namespace detail

Real ftc_residual(const BoundarySample& f, int level) {
  if (level < 0 || level >= f.order) {
    throw InvalidInput("ftc_residual: level must satisfy 0 <= k < n");
  }
  return detail::ftc_level_defect(f, level);
}

std::vector<Complex> default_hardy_probes(HalfPlane half) {
  std::vector<Complex> p = {{0.0, 1.0}, {0.0, 2.0}, {1.0, 1.0}, {-1.0, 1.0}, {0.0, 5.0}};
  if (half == HalfPlane::Minus) {
    for (auto& z : p) z = std::conj(z);
  }
  return p;
}

namespace {

// Trapezoid of f(x)/(x - pole) over the grid plus the analytic completion of
// the |x| > L tails under the fitted decay model f ~ c/x.
Complex cauchy_pairing(const ArrayXc& f, const RealGrid& g, Complex pole) {
  ArrayXc integrand =
      f / (g.nodes.cast<Complex>() - pole);
  Complex main = trapezoid(integrand, g.step);
  const Eigen::Index n = g.point_count;
  const Complex c = 0.5 * (f[n - 1] * g.nodes[n - 1] + f[0] * g.nodes[0]);
  const Real l = g.half_width;
  const Complex tail =
      (c / pole) * (std::log(1.0 + pole / l) - std::log(1.0 - pole / l));
  return main + tail;
}

Real conjugate_exponent(Real p) {
  if (!is_finite_exponent(p)) return 1.0;
  if (p == 1.0) return kInfExponent;
  return p / (p - 1.0);
}

// || (x - conj z)^{-1} ||_q = ( |Im z|^{1-q} sqrt(pi) Gamma((q-1)/2) / Gamma(q/2) )^{1/q}.
Real cauchy_kernel_norm(Complex z, Real q) {
  const Real b = std::abs(z.imag());
  if (!is_finite_exponent(q)) return 1.0 / b;
  const Real integral = std::pow(b, 1.0 - q) * std::sqrt(kPi) *
                        std::exp(std::lgamma(0.5 * (q - 1.0)) - std::lgamma(0.5 * q));
  return std::pow(integral, 1.0 / q);
}

}  // namespace

Real hardy_residual(const BoundarySample& f, HalfPlane half,
                    const std::vector<Complex>& probes) {
  if (probes.empty()) throw InvalidInput("hardy_residual: no probes");
  const Real min_height = 2.0 * f.grid.step;
  for (const Complex& z : probes) {
    const bool upper = z.imag() > 0.0;
    if ((half == HalfPlane::Plus && !upper) || (half == HalfPlane::Minus && upper)) {
      throw InvalidInput("hardy_residual: probe lies in the wrong half-plane");
    }
    if (std::abs(z.imag()) < min_height) {
      throw InvalidInput("hardy_residual: probe too close to the real line");
    }
  }
  if (!is_finite_exponent(f.exponent)) {
    // Bounded traces pair against the normalized two-factor kernel
    // 1/((x - conj z)(x + i)); the single-factor kernel has no dual norm here.
    const Complex anchor =
        half == HalfPlane::Plus ? Complex(0.0, -1.0) : Complex(0.0, 1.0);
    Real worst = 0.0;
    for (int k = 0; k <= f.order; ++k) {
      const Real fn = f.stack[k].abs().maxCoeff();
      if (fn == 0.0) continue;
      for (const Complex& z : probes) {
        const Complex pole = std::conj(z);
        ArrayXc den = (f.grid.nodes.cast<Complex>() - pole) *
                      (f.grid.nodes.cast<Complex>() - anchor);
        const Complex v = trapezoid(ArrayXc(f.stack[k] / den), f.grid.step);
        const Real kn = trapezoid(ArrayXr(den.abs().inverse()), f.grid.step);
        worst = std::max(worst, std::abs(v) / (fn * kn));
      }
    }
    return worst;
  }
  const Real q = conjugate_exponent(f.exponent);
  Real worst = 0.0;
  for (int k = 0; k <= f.order; ++k) {
    const Real fn = level_lp_norm(f, k);
    if (fn == 0.0) continue;
    for (const Complex& z : probes) {
      const Complex v = cauchy_pairing(f.stack[k], f.grid, std::conj(z));
      worst = std::max(worst, std::abs(v) / (fn * cauchy_kernel_norm(z, q)));
    }
  }
  return worst;
}

Real hardy_residual(const BoundarySample& f, HalfPlane half) {
  return hardy_residual(f, half, default_hardy_probes(half));
}

DecompositionResult plemelj_split(const BoundarySample& f) {
  if (!(f.exponent > 1.0) || !is_finite_exponent(f.exponent)) {
    throw InvalidInput(
        "plemelj_split: the direct-sum decomposition holds for 1 < p < inf only; "
        "it fails at the endpoints p = 1 and p = inf");
  }
  DecompositionResult res;
  res.plus.grid = res.minus.grid = f.grid;
  res.plus.order = res.minus.order = f.order;
  res.plus.exponent = res.minus.exponent = f.exponent;
  res.plus.stack.resize(f.order + 1);
  res.minus.stack.resize(f.order + 1);

  // The projections are Fourier multipliers, so they commute with the
  // derivative multiplier: split each stack level independently.
  const MultiplierSpec mp = riesz_plus_multiplier();
  const MultiplierSpec mm = riesz_minus_multiplier();
  for (int k = 0; k <= f.order; ++k) {
    res.plus.stack[k] = apply_multiplier(f.stack[k], f.grid, mp).values;
    res.minus.stack[k] = apply_multiplier(f.stack[k], f.grid, mm).values;
  }
  res.plus.ftc_defect = ftc_defect_all_levels(res.plus);
  res.minus.ftc_defect = ftc_defect_all_levels(res.minus);

  BoundarySample defect = f;
  for (int k = 0; k <= f.order; ++k) {
    defect.stack[k] = f.stack[k] - res.plus.stack[k] - res.minus.stack[k];
  }
  res.reconstruction_error = sobolev_norm(defect);
  res.hardy_residual_plus = hardy_residual(res.plus, HalfPlane::Plus);
  res.hardy_residual_minus = hardy_residual(res.minus, HalfPlane::Minus);

  if (f.exponent == 2.0) {
    Complex ip(0.0, 0.0);
    for (int k = 0; k <= f.order; ++k) {
      ip += f.grid.step * (res.plus.stack[k] * res.minus.stack[k].conjugate()).sum();
    }
    res.orthogonality_defect = std::abs(ip);
  }
  return res;
}

}  // namespace hsx
