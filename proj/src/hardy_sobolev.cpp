#include "hsx/hardy_sobolev.hpp"

#include <cmath>

namespace hsx {

namespace {

const BoundarySample& require_boundary(const HardySobolevElement& f) {
  if (!f.boundary) {
    throw InvalidInput("operation requires a boundary-representation element");
  }
  return *f.boundary;
}

// Trapezoid Cauchy pairing with c/x tail completion, shared with boundary.cpp
// in spirit; kernel power 1 only needs the completion (higher powers decay fast).
Complex cauchy_integral(const ArrayXc& f, const RealGrid& g, Complex z, int power) {
  ArrayXc den = g.nodes.cast<Complex>() - z;
  ArrayXc integrand(f.size());
  if (power == 1) {
    integrand = f / den;
  } else {
    ArrayXc d = den;
    for (int j = 1; j < power; ++j) d *= den;
    integrand = f / d;
  }
  Complex main = trapezoid(integrand, g.step);
  if (power == 1) {
    const Eigen::Index n = g.point_count;
    const Complex c = 0.5 * (f[n - 1] * g.nodes[n - 1] + f[0] * g.nodes[0]);
    const Real l = g.half_width;
    main += (c / z) * (std::log(1.0 + z / l) - std::log(1.0 - z / l));
  }
  return main;
}

void require_upper(const HardySobolevElement& f, Complex z) {
  const Real h = f.boundary ? f.boundary->grid.step : 0.0;
  if (!(z.imag() > 0.0)) throw InvalidInput("evaluation point must lie in Im z > 0");
  if (f.boundary && z.imag() < 2.0 * h) {
    throw InvalidInput("evaluation point too close to the real line for this grid");
  }
}

}  // namespace

HardySobolevElement make_boundary_element(BoundarySample sample,
                                          const ElementOptions& options) {
  HardySobolevElement f;
  f.order = sample.order;
  f.exponent = sample.exponent;
  f.construction_residual = hardy_residual(sample, HalfPlane::Plus);
  if (f.construction_residual > options.hardy_tolerance) {
    throw InvalidInput(
        "boundary data is not an upper-half-plane trace (Cauchy-vanishing residual " +
        std::to_string(f.construction_residual) + ")");
  }
  f.boundary = std::move(sample);
  return f;
}

HardySobolevElement make_fourier_element(SpectrumSample sample) {
  if (sample.exponent != 2.0) {
    throw InvalidInput("fourier representation exists for p = 2 only");
  }
  HardySobolevElement f;
  f.order = sample.order;
  f.exponent = 2.0;
  f.fourier = std::move(sample);
  return f;
}

HardySobolevElement element_from_laguerre(const VectorXr& coeffs, int order,
                                          Real exponent, const RealGrid& grid,
                                          const HalfLineGrid& half_grid) {
  std::vector<ArrayXc> stack(order + 1);
  for (int k = 0; k <= order; ++k) {
    stack[k] = laguerre_trace_on_line(coeffs, grid.nodes, k);
  }
  HardySobolevElement f;
  f.order = order;
  f.exponent = exponent;
  f.boundary = make_boundary_sample(grid, std::move(stack), exponent);
  f.construction_residual = hardy_residual(*f.boundary, HalfPlane::Plus);
  if (exponent == 2.0) {
    ArrayXc vals = laguerre_eval(coeffs, half_grid.nodes) *
                   (-half_grid.nodes).exp();
    SpectrumSample s = make_spectrum_sample(half_grid, vals, order, 2.0);
    VectorXr c = coeffs;
    s.evaluator = [c](Real t) -> Complex {
      ArrayXr tt(1);
      tt[0] = t;
      return Complex(laguerre_eval(c, tt)[0] * std::exp(-t), 0.0);
    };
    f.fourier = std::move(s);
  }
  return f;
}

Complex cauchy_eval(const HardySobolevElement& f, Complex z) {
  const BoundarySample& b = require_boundary(f);
  require_upper(f, z);
  if (!is_finite_exponent(f.exponent)) {
    // Normalized kernel keeps the pairing absolutely convergent for bounded traces.
    ArrayXc den1 = b.grid.nodes.cast<Complex>() - z;
    ArrayXc den2 = b.grid.nodes.cast<Complex>() + Complex(0.0, 1.0);
    ArrayXc integrand = b.stack[0] * (1.0 / den1 - 1.0 / den2);
    return trapezoid(integrand, b.grid.step) / (2.0 * kPi * Complex(0.0, 1.0));
  }
  return cauchy_integral(b.stack[0], b.grid, z, 1) / (2.0 * kPi * Complex(0.0, 1.0));
}

Complex poisson_eval(const HardySobolevElement& f, int level, Complex z) {
  const BoundarySample& b = require_boundary(f);
  require_upper(f, z);
  if (level < 0 || level > f.order) throw InvalidInput("poisson_eval: level out of range");
  const Real x = z.real();
  const Real y = z.imag();
  ArrayXr dx = b.grid.nodes - x;
  ArrayXr kernel = y / (dx.square() + y * y) / kPi;
  ArrayXc integrand = b.stack[level] * kernel.cast<Complex>();
  return trapezoid(integrand, b.grid.step);
}

Complex interior_eval(const HardySobolevElement& f, int level, Complex z) {
  const BoundarySample& b = require_boundary(f);
  require_upper(f, z);
  if (level < 0 || level > f.order) throw InvalidInput("interior_eval: level out of range");
  if (level == 0) return cauchy_eval(f, z);
  Real factorial = 1.0;
  for (int j = 2; j <= level; ++j) factorial *= j;
  return factorial * cauchy_integral(b.stack[0], b.grid, z, level + 1) /
         (2.0 * kPi * Complex(0.0, 1.0));
}

DerivativeEvalResult derivative_eval(const HardySobolevElement& f, int level, Complex z,
                                     Real flag_tolerance) {
  const BoundarySample& b = require_boundary(f);
  require_upper(f, z);
  if (level < 0 || level > f.order) {
    throw InvalidInput("derivative_eval: level out of range");
  }
  DerivativeEvalResult r;
  if (level == 0) {
    r.value = cauchy_eval(f, z);
    r.variant_discrepancy = 0.0;
    return r;
  }
  Real factorial = 1.0;
  for (int j = 2; j <= level; ++j) factorial *= j;
  const Complex main = factorial *
                       cauchy_integral(b.stack[0], b.grid, z, level + 1) /
                       (2.0 * kPi * Complex(0.0, 1.0));
  // Integrated-by-parts route: one kernel power against D^{(k-1)}.
  const Complex variant = cauchy_integral(b.stack[level - 1], b.grid, z, 2) /
                          (2.0 * kPi * Complex(0.0, 1.0));
  r.value = main;
  r.variant_discrepancy = std::abs(main - variant);
  const Real scale = std::max(std::abs(main), std::abs(variant));
  r.stack_consistent = r.variant_discrepancy <= 10.0 * flag_tolerance * std::max(scale, 1.0);
  return r;
}

Real hs_norm(const HardySobolevElement& f) {
  if (f.boundary) return sobolev_norm(*f.boundary);
  if (f.fourier) return ln_norm(*f.fourier);
  throw InvalidInput("element has no representation");
}

ArrayXc upper_halfplane_row(const BoundarySample& f, Real height) {
  if (!(height > 0.0)) throw InvalidInput("row height must be positive");
  MultiplierSpec spec;
  const Real y = height;
  spec.symbol = [y](Real xi) -> Complex {
    return xi > 0.0 ? Complex(std::exp(-y * xi), 0.0) : Complex(0.0, 0.0);
  };
  spec.limit_right0 = 1.0;
  spec.limit_left0 = 0.0;
  spec.nyquist_policy = NyquistPolicy::Fixed;
  spec.nyquist_value = 0.0;
  spec.name = "cauchy-row";
  return apply_multiplier(f.stack[0], f.grid, spec).values;
}

EmbeddingReport embedding_check(const HardySobolevElement& f) {
  if (f.order < 1) throw InvalidInput("embedding_check: requires n >= 1");
  const BoundarySample& b = require_boundary(f);
  EmbeddingReport rep;
  rep.sup_val = b.stack[0].abs().maxCoeff();
  const Real h = b.grid.step;
  const std::vector<Real> rows = {4.0 * h, 0.1, 0.5, 1.0, 5.0, 25.0};
  const Eigen::Index stride = 16;
  const Eigen::Index lo = b.grid.point_count / 4;
  const Eigen::Index hi = 3 * b.grid.point_count / 4;
  for (Real y : rows) {
    const ArrayXc row = upper_halfplane_row(b, y);
    for (Eigen::Index j = lo; j <= hi; j += stride) {
      rep.sup_val = std::max(rep.sup_val, std::abs(row[j]));
    }
  }
  rep.bound = kEmbeddingConstant * hs_norm(f);
  rep.pass = rep.sup_val <= rep.bound * (1.0 + 1e-6);
  return rep;
}

ProductReport product(const HardySobolevElement& f, const HardySobolevElement& g) {
  if (f.order != g.order || f.exponent != g.exponent) {
    throw InvalidInput("product: operands must share order and exponent");
  }
  if (f.order < 1) {
    throw InvalidInput(
        "product: pointwise multiplication needs n >= 1; the classical n = 0 "
        "space is not an algebra");
  }
  const BoundarySample& a = require_boundary(f);
  const BoundarySample& b = require_boundary(g);
  if (a.grid.point_count != b.grid.point_count) {
    throw InvalidInput("product: operands must share a grid");
  }
  const int n = f.order;
  std::vector<ArrayXc> stack(n + 1);
  for (int k = 0; k <= n; ++k) {
    ArrayXc lev = ArrayXc::Zero(a.grid.point_count);
    Real binom = 1.0;
    for (int j = 0; j <= k; ++j) {
      lev += binom * a.stack[k - j] * b.stack[j];
      binom = binom * (k - j) / (j + 1.0);
    }
    stack[k] = std::move(lev);
  }
  ProductReport rep;
  BoundarySample prod_sample = make_boundary_sample(a.grid, std::move(stack), f.exponent);
  rep.product.order = n;
  rep.product.exponent = f.exponent;
  rep.product.construction_residual = hardy_residual(prod_sample, HalfPlane::Plus);
  rep.lhs = sobolev_norm(prod_sample);
  rep.product.boundary = std::move(prod_sample);
  const Real p = f.exponent;
  Real constant;
  if (is_finite_exponent(p)) {
    constant = kEmbeddingConstant *
               std::pow((std::pow(2.0, p * (n + 1)) - 1.0) / (std::pow(2.0, p) - 1.0),
                        1.0 / p);
  } else {
    constant = std::pow(2.0, n + 1) - 1.0;
  }
  rep.rhs = constant * hs_norm(f) * hs_norm(g);
  rep.pass = rep.lhs <= rep.rhs * (1.0 + 1e-9);
  return rep;
}

}  // namespace hsx
