#include <cmath>

#include "doctest.h"
#include "hsx/hardy_sobolev.hpp"
#include "hsx/hilbert_model.hpp"

using namespace hsx;

namespace {

const RealGrid& desk_grid() {
  static const RealGrid g = make_real_grid(200.0, 1 << 16);
  return g;
}

const HalfLineGrid& quad_grid() {
  static const HalfLineGrid g = make_halfline_grid("gauss-laguerre", 128, 1.0);
  return g;
}

// F_l(x) = 1/(x+i)^2, the transform of -t e^{-t}
HardySobolevElement rational_square(int n, Real p) {
  VectorXr c(2);
  c << -0.5, 0.5;
  return element_from_laguerre(c, n, p, desk_grid(), quad_grid());
}

}  // namespace

TEST_CASE("cauchy evaluation against residue values") {
  const HardySobolevElement f = rational_square(1, 2.0);
  CHECK(std::abs(cauchy_eval(f, Complex(0.0, 1.0)) - Complex(-0.25, 0.0)) < 1e-4);

  // F_l = 1/(2(1-ix)) is the transform of e^{-t}/2
  VectorXr ch(1);
  ch << 0.5;
  const HardySobolevElement g =
      element_from_laguerre(ch, 0, 2.0, desk_grid(), quad_grid());
  CHECK(std::abs(cauchy_eval(g, Complex(0.0, 2.0)) - Complex(1.0 / 6.0, 0.0)) < 1e-4);

  const HardySobolevElement z = make_boundary_element(
      lift_to_sobolev(ArrayXc::Zero(desk_grid().point_count), desk_grid(), 0, 2.0));
  CHECK(std::abs(cauchy_eval(z, Complex(0.0, 1.0))) == 0.0);

  CHECK_THROWS_AS(cauchy_eval(f, Complex(0.0, -1.0)), InvalidInput);
  CHECK_THROWS_AS(cauchy_eval(f, Complex(0.0, 1e-5)), InvalidInput);
}

TEST_CASE("poisson evaluation reproduces interior values levelwise") {
  const HardySobolevElement f = rational_square(1, 2.0);
  CHECK(std::abs(poisson_eval(f, 0, Complex(0.0, 1.0)) - Complex(-0.25, 0.0)) < 1e-4);
  // F'(i) = -2/(2i)^3 = -i/4
  CHECK(std::abs(poisson_eval(f, 1, Complex(0.0, 1.0)) - Complex(0.0, -0.25)) < 1e-4);
}

TEST_CASE("derivative evaluation and the integrated-by-parts diagnostic") {
  const HardySobolevElement f = rational_square(2, 2.0);
  const DerivativeEvalResult d1 = derivative_eval(f, 1, Complex(0.0, 1.0));
  CHECK(std::abs(d1.value - Complex(0.0, -0.25)) < 1e-4);
  CHECK(d1.stack_consistent);

  const DerivativeEvalResult d2 = derivative_eval(f, 2, Complex(0.0, 2.0));
  CHECK(std::abs(d2.value - Complex(6.0 / 81.0, 0.0)) < 1e-4);
  CHECK(d2.variant_discrepancy < 1e-3);

  const DerivativeEvalResult d0 = derivative_eval(f, 0, Complex(0.0, 1.0));
  CHECK(d0.value == cauchy_eval(f, Complex(0.0, 1.0)));
}

TEST_CASE("interior evaluations agree across the three routes") {
  const HardySobolevElement f = rational_square(1, 2.0);
  const std::vector<Complex> probes = {{0.0, 1.0}, {1.0, 1.0}, {0.0, 2.0}, {-2.0, 0.5}};
  for (Complex z : probes) {
    const Complex a = cauchy_eval(f, z);
    const Complex b = poisson_eval(f, 0, z);
    const Complex c = holomorphic_fourier(*f.fourier, z);
    CHECK(std::abs(a - b) < 1e-4);
    CHECK(std::abs(a - c) < 1e-4);
  }
}

TEST_CASE("hs norm through both representations") {
  const HardySobolevElement f = rational_square(1, 2.0);
  CHECK(hs_norm(f) == doctest::Approx(std::sqrt(2.0 * kPi)).epsilon(1e-6));

  VectorXr ce(1);
  ce << 1.0;
  HardySobolevElement g = element_from_laguerre(ce, 1, 2.0, desk_grid(), quad_grid());
  HardySobolevElement g_fourier;
  g_fourier.order = 1;
  g_fourier.exponent = 2.0;
  g_fourier.fourier = g.fourier;
  CHECK(hs_norm(g_fourier) == doctest::Approx(std::sqrt(1.5 * kPi)).epsilon(1e-10));
}

TEST_CASE("nesting: dropping stack levels never increases the norm") {
  for (int n = 2; n >= 1; --n) {
    const HardySobolevElement f = rational_square(n, 2.0);
    const HardySobolevElement g = rational_square(n - 1, 2.0);
    CHECK(hs_norm(g) <= hs_norm(f) + 1e-12);
  }
}

TEST_CASE("embedding bound with the explicit constant") {
  const HardySobolevElement f = rational_square(1, 2.0);
  const EmbeddingReport rep = embedding_check(f);
  CHECK(rep.sup_val == doctest::Approx(1.0).epsilon(1e-4));
  CHECK(rep.bound == doctest::Approx(kEmbeddingConstant * std::sqrt(2.0 * kPi)).epsilon(1e-6));
  CHECK(rep.pass);

  const HardySobolevElement z = make_boundary_element(
      lift_to_sobolev(ArrayXc::Zero(desk_grid().point_count), desk_grid(), 1, 2.0));
  const EmbeddingReport zr = embedding_check(z);
  CHECK(zr.sup_val == 0.0);
  CHECK(zr.pass);
}

TEST_CASE("boundary convergence of the poisson rows at linear rate") {
  const HardySobolevElement f = rational_square(1, 2.0);
  const BoundarySample& b = *f.boundary;
  const Real h = b.grid.step;
  Real prev = -1.0;
  for (Real y : {16.0 * h, 8.0 * h, 4.0 * h}) {
    const ArrayXc row = upper_halfplane_row(b, y);
    Real gap = 0.0;
    for (Eigen::Index j = b.grid.point_count / 4; j <= 3 * b.grid.point_count / 4;
         j += 16) {
      gap = std::max(gap, std::abs(row[j] - b.stack[0][j]));
    }
    // |F(x+iy) - F(x)| <= y sup|F'| with sup|F'| = 2 for this symbol
    CHECK(gap <= 2.5 * y);
    if (prev > 0.0) CHECK(gap < prev);
    prev = gap;
  }
}

TEST_CASE("leibniz product against the closed form") {
  const HardySobolevElement f = rational_square(1, 2.0);
  const ProductReport rep = product(f, f);
  CHECK(rep.pass);
  // (FG)_l = 1/(x+i)^4: beta integrals give 5pi/16 + 35pi/8 = 75pi/16
  CHECK(rep.lhs == doctest::Approx(std::sqrt(75.0 * kPi / 16.0)).epsilon(1e-6));
  CHECK(rep.rhs == doctest::Approx(kEmbeddingConstant * std::sqrt(5.0) * 2.0 * kPi)
                       .epsilon(1e-6));

  const HardySobolevElement z = make_boundary_element(
      lift_to_sobolev(ArrayXc::Zero(desk_grid().point_count), desk_grid(), 1, 2.0));
  const ProductReport zr = product(f, z);
  CHECK(zr.lhs == 0.0);
  CHECK(zr.pass);
}

TEST_CASE("product refuses the classical order") {
  const HardySobolevElement f = rational_square(0, 2.0);
  CHECK_THROWS_AS(product(f, f), InvalidInput);
}

TEST_CASE("bounded traces: normalized kernel evaluation and the sup-norm algebra") {
  const RealGrid& g = desk_grid();
  // G(x) = (x-i)/(x+i), the boundary trace of a bounded holomorphic function
  ArrayXc g0(g.point_count), g1(g.point_count);
  for (Eigen::Index j = 0; j < g.point_count; ++j) {
    const Complex x(g.nodes[j], 0.0);
    g0[j] = (x - Complex(0.0, 1.0)) / (x + Complex(0.0, 1.0));
    g1[j] = 2.0 * Complex(0.0, 1.0) /
            ((x + Complex(0.0, 1.0)) * (x + Complex(0.0, 1.0)));
  }
  ElementOptions opts;
  opts.hardy_tolerance = 1e-2;
  const HardySobolevElement f = make_boundary_element(
      make_boundary_sample(g, {g0, g1}, kInfExponent), opts);

  // normalized Cauchy kernel reproduces interior values of bounded elements
  CHECK(std::abs(cauchy_eval(f, Complex(0.0, 2.0)) - Complex(1.0 / 3.0, 0.0)) < 5e-3);
  CHECK(std::abs(cauchy_eval(f, Complex(0.0, 1.0))) < 5e-3);

  // sup-norm product bound with constant 2^{n+1} - 1
  const ProductReport rep = product(f, f);
  CHECK(rep.pass);
  const Real fn = hs_norm(f);
  CHECK(rep.rhs == doctest::Approx(3.0 * fn * fn).epsilon(1e-12));
  CHECK(rep.lhs <= rep.rhs);
}

TEST_CASE("element construction rejects lower-boundary data") {
  const RealGrid& g = desk_grid();
  ArrayXc v(g.point_count);
  for (Eigen::Index j = 0; j < g.point_count; ++j) {
    v[j] = 1.0 / (2.0 * (1.0 + Complex(0.0, 1.0) * g.nodes[j]));
  }
  std::vector<ArrayXc> stack = {v};
  CHECK_THROWS_AS(make_boundary_element(make_boundary_sample(g, stack, 2.0)),
                  InvalidInput);
}
