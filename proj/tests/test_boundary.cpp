#include <cmath>

#include "doctest.h"
#include "hsx/boundary.hpp"

using namespace hsx;

namespace {

const RealGrid& desk_grid() {
  static const RealGrid g = make_real_grid(200.0, 1 << 16);
  return g;
}

ArrayXc sample(const RealGrid& g, const std::function<Complex(Real)>& f) {
  ArrayXc v(g.point_count);
  for (Eigen::Index j = 0; j < g.point_count; ++j) v[j] = f(g.nodes[j]);
  return v;
}

}  // namespace

TEST_CASE("spectral lift reproduces calculus derivatives") {
  const RealGrid& g = desk_grid();
  const BoundarySample f = lift_to_sobolev(
      sample(g, [](Real x) { return Complex(1.0 / (1.0 + x * x), 0.0); }), g, 1, 2.0);
  Real worst = 0.0;
  for (Eigen::Index j = 0; j < g.point_count; ++j) {
    const Real x = g.nodes[j];
    if (std::abs(x) > 100.0) continue;
    const Real expected = -2.0 * x / std::pow(1.0 + x * x, 2);
    worst = std::max(worst, std::abs(f.stack[1][j] - expected));
  }
  CHECK(worst < 1e-4);

  const BoundarySample gsn = lift_to_sobolev(
      sample(g, [](Real x) { return Complex(std::exp(-x * x), 0.0); }), g, 2, 2.0);
  Real worst2 = 0.0;
  for (Eigen::Index j = 0; j < g.point_count; ++j) {
    const Real x = g.nodes[j];
    const Real expected = (4.0 * x * x - 2.0) * std::exp(-x * x);
    worst2 = std::max(worst2, std::abs(gsn.stack[2][j] - expected));
  }
  CHECK(worst2 < 1e-6);
}

TEST_CASE("constant samples lift with a vanishing derivative at p=inf") {
  const RealGrid g = make_real_grid(50.0, 1024);
  const BoundarySample f =
      lift_to_sobolev(ArrayXc::Constant(1024, Complex(2.5, -1.0)), g, 1, kInfExponent);
  CHECK(f.stack[1].abs().maxCoeff() < 1e-12);
  CHECK(sobolev_norm(f) == doctest::Approx(std::abs(Complex(2.5, -1.0))).epsilon(1e-12));
  CHECK(ftc_residual(f, 0) < 1e-12);
}

TEST_CASE("sobolev norm against beta integrals") {
  const RealGrid& g = desk_grid();
  const ArrayXc v = sample(g, [](Real x) { return Complex(1.0 / (1.0 + x * x), 0.0); });
  const BoundarySample f1 = lift_to_sobolev(v, g, 1, 2.0);
  CHECK(sobolev_norm(f1) == doctest::Approx(std::sqrt(0.75 * kPi)).epsilon(1e-6));
  const BoundarySample f0 = lift_to_sobolev(v, g, 0, 2.0);
  CHECK(sobolev_norm(f0) == doctest::Approx(std::sqrt(0.5 * kPi)).epsilon(1e-6));
  const BoundarySample z = lift_to_sobolev(ArrayXc::Zero(g.point_count), g, 2, 2.0);
  CHECK(sobolev_norm(z) == 0.0);
}

TEST_CASE("ftc residual accepts smooth stacks and flags broken ones") {
  const RealGrid& g = desk_grid();
  const BoundarySample f = lift_to_sobolev(
      sample(g, [](Real x) { return Complex(std::exp(-x * x), 0.0); }), g, 1, 2.0);
  CHECK(ftc_residual(f, 0) < 1e-6);

  std::vector<ArrayXc> broken = {f.stack[0], ArrayXc::Zero(g.point_count)};
  CHECK_THROWS_AS(make_boundary_sample(g, broken, 2.0), InvalidInput);
  // the defect of the broken stack is the plain increment max
  BoundarySample loose = make_boundary_sample(g, broken, 2.0, 10.0);
  CHECK(ftc_residual(loose, 0) > 0.5);
}

TEST_CASE("plemelj split of the lorentzian matches partial fractions") {
  const RealGrid& g = desk_grid();
  const BoundarySample f = lift_to_sobolev(
      sample(g, [](Real x) { return Complex(1.0 / (1.0 + x * x), 0.0); }), g, 0, 2.0);
  const DecompositionResult dec = plemelj_split(f);
  Real worst = 0.0;
  for (Eigen::Index j = 0; j < g.point_count; ++j) {
    const Real x = g.nodes[j];
    if (std::abs(x) > 100.0) continue;
    const Complex fp = 1.0 / (2.0 * (1.0 - Complex(0.0, 1.0) * x));
    const Complex fm = 1.0 / (2.0 * (1.0 + Complex(0.0, 1.0) * x));
    worst = std::max(worst, std::abs(dec.plus.stack[0][j] - fp));
    worst = std::max(worst, std::abs(dec.minus.stack[0][j] - fm));
  }
  CHECK(worst < 1e-4);
  CHECK(dec.reconstruction_error < 1e-10);
  CHECK(dec.hardy_residual_plus < 1e-3);
  CHECK(dec.hardy_residual_minus < 1e-3);
}

TEST_CASE("real even data splits into conjugate halves") {
  const RealGrid& g = desk_grid();
  const BoundarySample f = lift_to_sobolev(
      sample(g, [](Real x) { return Complex(std::exp(-0.25 * x * x), 0.0); }), g, 1, 2.0);
  const DecompositionResult dec = plemelj_split(f);
  Real worst = 0.0;
  for (Eigen::Index j = 0; j < g.point_count; ++j) {
    worst = std::max(worst,
                     std::abs(dec.minus.stack[0][j] - std::conj(dec.plus.stack[0][j])));
  }
  CHECK(worst < 1e-10);
}

TEST_CASE("zero input splits to zero") {
  const RealGrid g = make_real_grid(50.0, 4096);
  const DecompositionResult dec =
      plemelj_split(lift_to_sobolev(ArrayXc::Zero(4096), g, 1, 2.0));
  CHECK(sobolev_norm(dec.plus) == 0.0);
  CHECK(sobolev_norm(dec.minus) == 0.0);
  CHECK(dec.reconstruction_error == 0.0);
  CHECK(dec.hardy_residual_plus == 0.0);
}

TEST_CASE("split refuses the endpoint exponents") {
  const RealGrid g = make_real_grid(50.0, 4096);
  BoundarySample f = lift_to_sobolev(ArrayXc::Zero(4096), g, 1, 2.0);
  f.exponent = 1.0;
  CHECK_THROWS_AS(plemelj_split(f), InvalidInput);
  f.exponent = kInfExponent;
  CHECK_THROWS_AS(plemelj_split(f), InvalidInput);
}

TEST_CASE("mean-zero data: orthogonality and idempotence of the split") {
  const RealGrid& g = desk_grid();
  const BoundarySample f = lift_to_sobolev(
      sample(g, [](Real x) { return Complex(x * std::exp(-x * x), 0.0); }), g, 1, 2.0);
  const DecompositionResult dec = plemelj_split(f);
  REQUIRE(dec.orthogonality_defect.has_value());
  CHECK(*dec.orthogonality_defect <
        1e-6 * sobolev_norm(dec.plus) * sobolev_norm(dec.minus));

  // splitting the plus part again returns (plus, 0) to machine precision
  const DecompositionResult again = plemelj_split(dec.plus);
  Real worst = 0.0;
  for (int k = 0; k <= 1; ++k) {
    worst = std::max(worst, (again.plus.stack[k] - dec.plus.stack[k]).abs().maxCoeff());
    worst = std::max(worst, again.minus.stack[k].abs().maxCoeff());
  }
  CHECK(worst < 1e-12 * dec.plus.stack[0].abs().maxCoeff());
}

TEST_CASE("hardy residual separates the two half-planes") {
  const RealGrid& g = desk_grid();
  std::vector<ArrayXc> plus_stack = {
      sample(g, [](Real x) { return 1.0 / (2.0 * (1.0 - Complex(0.0, 1.0) * x)); })};
  const BoundarySample fplus = make_boundary_sample(g, plus_stack, 2.0);
  CHECK(hardy_residual(fplus, HalfPlane::Plus) < 1e-3);

  std::vector<ArrayXc> minus_stack = {
      sample(g, [](Real x) { return 1.0 / (2.0 * (1.0 + Complex(0.0, 1.0) * x)); })};
  const BoundarySample fminus = make_boundary_sample(g, minus_stack, 2.0);
  // lower-boundary data probed as an upper trace must fail loudly
  CHECK(hardy_residual(fminus, HalfPlane::Plus) > 0.1);
  CHECK(hardy_residual(fminus, HalfPlane::Minus) < 1e-3);
}

TEST_CASE("hardy residual guards its probes") {
  const RealGrid g = make_real_grid(50.0, 4096);
  const BoundarySample f = lift_to_sobolev(ArrayXc::Zero(4096), g, 0, 2.0);
  CHECK_THROWS_AS(hardy_residual(f, HalfPlane::Plus, {Complex(0.0, -1.0)}), InvalidInput);
  CHECK_THROWS_AS(hardy_residual(f, HalfPlane::Plus, {Complex(0.0, 1e-4)}), InvalidInput);
  CHECK(hardy_residual(f, HalfPlane::Plus) == 0.0);
}
