#include <cmath>

#include "doctest.h"
#include "hsx/operator_lab.hpp"

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

}  // namespace

TEST_CASE("symbol closures validated and poles screened") {
  CHECK_NOTHROW(moebius_to_disk_symbol());
  CHECK_NOTHROW(cayley_exp_symbol(1.0));
  CHECK_THROWS_AS(cayley_exp_symbol(-1.0), InvalidInput);

  // pole in the upper half-plane is rejected
  VectorXc num(1), den(2);
  num << Complex(1.0, 0.0);
  den << Complex(0.0, -1.0), Complex(1.0, 0.0);  // z - i
  CHECK_THROWS_AS(rational_symbol(num, den), InvalidInput);

  // broken derivative closure is caught by the finite-difference screen
  std::vector<AnalyticSymbol::Closure> bad = {
      [](Complex z) { return z * z; }, [](Complex) { return Complex(0.0, 0.0); }};
  CHECK_THROWS_AS(AnalyticSymbol("broken", std::move(bad), {}), InvalidInput);
}

TEST_CASE("orthonormal basis matches the gamma-moment normalization") {
  const GalerkinBasis b0 = build_onb(0, 1);
  CHECK(b0.coeffs[0][0] == doctest::Approx(1.0 / std::sqrt(kPi)).epsilon(1e-10));
  const GalerkinBasis b1 = build_onb(1, 1);
  CHECK(b1.coeffs[0][0] ==
        doctest::Approx(1.0 / std::sqrt(1.5 * kPi)).epsilon(1e-10));
  const GalerkinBasis big = build_onb(1, 32);
  CHECK(big.orthonormality_defect <= 1e-8);
  CHECK_THROWS_AS(build_onb(1, 64), InvalidInput);
  CHECK_THROWS_AS(build_onb(5, 8), InvalidInput);
}

TEST_CASE("constant symbols assemble to scalar matrices") {
  const GalerkinBasis basis = build_onb(1, 8);
  const GalerkinOperator op = assemble_multiplication(constant_symbol(Complex(3.0, 4.0)), basis);
  const Real defect =
      (op.matrix - Complex(3.0, 4.0) * MatrixXc::Identity(8, 8)).cwiseAbs().maxCoeff();
  CHECK(defect < 1e-8);
  CHECK(op.multiplier_plausible);
}

TEST_CASE("unbounded symbols are rejected at assembly") {
  const GalerkinBasis basis = build_onb(1, 8);
  CHECK_THROWS_AS(
      assemble_multiplication(affine_symbol(Complex(2.0, 0.0), Complex(0.0, 1.0)), basis),
      InvalidInput);
}

TEST_CASE("moebius operator: eigenvalues inside the fattened disk") {
  const GalerkinBasis basis = build_onb(1, 16);
  const AnalyticSymbol psi = moebius_to_disk_symbol();
  const GalerkinOperator op = assemble_multiplication(psi, basis);
  CHECK(op.multiplier_plausible);
  const SpectrumReport rep = spectrum_check(op, psi);
  Real max_abs = 0.0;
  for (Eigen::Index i = 0; i < rep.eigenvalues.size(); ++i) {
    max_abs = std::max(max_abs, std::abs(rep.eigenvalues[i]));
  }
  CHECK(max_abs <= 1.05);
  CHECK(rep.inclusion_pass);

  // truncations do not collapse: the cloud keeps its scale as M grows
  Real prev_max = max_abs;
  for (Eigen::Index m : {24, 32}) {
    const GalerkinOperator bigger = assemble_multiplication(psi, build_onb(1, m));
    const SpectrumReport r2 = spectrum_check(bigger, psi);
    Real mx = 0.0;
    for (Eigen::Index i = 0; i < r2.eigenvalues.size(); ++i) {
      mx = std::max(mx, std::abs(r2.eigenvalues[i]));
    }
    CHECK(mx >= 0.5);  // half the range's max modulus
    prev_max = mx;
  }
  (void)prev_max;
}

TEST_CASE("bounded rational symbol assembles finite and plausible") {
  VectorXc num(1), den(2);
  num << Complex(1.0, 0.0);
  den << Complex(0.0, 1.0), Complex(1.0, 0.0);  // 1/(z+i)
  const AnalyticSymbol psi = rational_symbol(num, den);
  const GalerkinBasis basis = build_onb(1, 16);
  const GalerkinOperator op = assemble_multiplication(psi, basis);
  CHECK(op.matrix.allFinite());
  CHECK(op.multiplier_plausible);
  const SpectrumReport rep = spectrum_check(op, psi);
  // range of 1/(z+i) on the upper half-plane is the disk |w + i/2| < 1/2
  for (Eigen::Index i = 0; i < rep.eigenvalues.size(); ++i) {
    CHECK(std::abs(rep.eigenvalues[i] + Complex(0.0, 0.5)) <= 0.5 + 0.2);
  }
}

TEST_CASE("adjoint residual: small and shrinking with the truncation size") {
  const AnalyticSymbol psi = moebius_to_disk_symbol();
  std::vector<Real> res;
  for (Eigen::Index m : {8, 16, 24, 32}) {
    const GalerkinOperator op = assemble_multiplication(psi, build_onb(1, m));
    res.push_back(adjoint_eigen_residual(op, psi, Complex(0.0, 1.0)));
  }
  CHECK(res[1] <= 0.05);
  for (std::size_t i = 1; i < res.size(); ++i) CHECK(res[i] <= res[i - 1] + 1e-9);

  const GalerkinOperator op16 = assemble_multiplication(psi, build_onb(1, 16));
  CHECK(adjoint_eigen_residual(op16, constant_symbol(Complex(2.0, -1.0)), Complex(0.0, 1.0)) >
        0.0);  // wrong symbol leaves a visible residual
  const GalerkinOperator opc =
      assemble_multiplication(constant_symbol(Complex(2.0, -1.0)), build_onb(1, 16));
  CHECK(adjoint_eigen_residual(opc, constant_symbol(Complex(2.0, -1.0)), Complex(1.0, 2.0)) <
        1e-8);

  // bounded rational symbol at an interior probe
  VectorXc num(1), den(2);
  num << Complex(1.0, 0.0);
  den << Complex(0.0, 1.0), Complex(1.0, 0.0);
  const AnalyticSymbol inv_pole = rational_symbol(num, den);
  const GalerkinOperator opr = assemble_multiplication(inv_pole, build_onb(1, 16));
  CHECK(adjoint_eigen_residual(opr, inv_pole, Complex(0.0, 2.0)) <= 0.05);
}

TEST_CASE("invertibility round trip") {
  const InvertibilityReport rep =
      invertibility_check(shifted_moebius_symbol(Complex(2.0, 0.0)), 0.5, 1, 16);
  CHECK(rep.inf_abs >= 1.0 - 1e-9);
  CHECK(rep.invertible_claim);
  CHECK(rep.roundtrip_defect <= 0.1);

  const InvertibilityReport low = invertibility_check(moebius_to_disk_symbol(), 0.05, 1, 8);
  CHECK_FALSE(low.invertible_claim);  // the symbol vanishes at z = i

  const InvertibilityReport c2 = invertibility_check(constant_symbol(2.0), 0.5, 1, 8);
  CHECK(c2.invertible_claim);
  CHECK(c2.roundtrip_defect < 1e-10);
}

TEST_CASE("composition criteria on the affine family and a bounded image") {
  const AnalyticSymbol phi = affine_symbol(Complex(2.0, 0.0), Complex(0.0, 1.0));
  const CriterionAReport a = composition_criterion_A(phi, 1);
  CHECK(a.pass);
  CHECK(a.inf_A == doctest::Approx(2.0).epsilon(1e-12));
  const CriterionAngularReport ang = composition_criterion_angular(phi);
  CHECK(ang.pass);
  CHECK(ang.sup_ratio == doctest::Approx(0.5).epsilon(0.05));

  const AnalyticSymbol shift = affine_symbol(Complex(1.0, 0.0), Complex(0.0, 1.0));
  const CriterionAngularReport ang2 = composition_criterion_angular(shift);
  CHECK(ang2.pass);
  CHECK(ang2.sup_ratio == doctest::Approx(1.0).epsilon(0.05));

  // bounded image: ratio grows linearly, no finite angular derivative
  std::vector<AnalyticSymbol::Closure> d;
  d.push_back([](Complex z) {
    return Complex(0.0, 1.0) +
           Complex(0.0, 0.5) * (z - Complex(0.0, 1.0)) / (z + Complex(0.0, 1.0));
  });
  d.push_back([](Complex z) {
    return Complex(-1.0, 0.0) / ((z + Complex(0.0, 1.0)) * (z + Complex(0.0, 1.0)));
  });
  const AnalyticSymbol bounded("bounded-image", std::move(d), {Complex(0.0, -1.0)});
  CHECK_FALSE(composition_criterion_angular(bounded).pass);

  // z^2 maps i to -1: not a self-map
  VectorXc num(3), den(1);
  num << Complex(0.0, 0.0), Complex(0.0, 0.0), Complex(1.0, 0.0);
  den << Complex(1.0, 0.0);
  CHECK_THROWS_AS(composition_criterion_A(rational_symbol(num, den), 1), InvalidInput);

  // phi = z + i + 1/(z+i): a genuine self-map whose Re phi' = Re(1 - (z+i)^{-2})
  // can approach zero, so the lattice minimum is reported with no claim
  VectorXc n2(3), d2(2);
  n2 << Complex(0.0, 0.0), Complex(0.0, 2.0), Complex(1.0, 0.0);  // z^2 + 2iz
  d2 << Complex(0.0, 1.0), Complex(1.0, 0.0);                     // z + i
  const AnalyticSymbol drift = rational_symbol(n2, d2);
  const CriterionAReport rep = composition_criterion_A(drift, 1);
  CHECK(std::isfinite(rep.inf_A));
  CHECK(rep.inf_A >= 0.0);
  CHECK(std::isfinite(rep.derivative_sup));
}

TEST_CASE("weighted composition: identity, affine oracle, zero input") {
  VectorXr cs(2);
  cs << -0.5, 0.5;  // F_l = 1/(x+i)^2
  const HardySobolevElement f =
      element_from_laguerre(cs, 1, 2.0, desk_grid(), quad_grid());

  const WeightedCompositionResult idr = weighted_composition_apply(
      constant_symbol(1.0), identity_symbol(), f, 1, 2.0);
  CHECK(idr.ratio_defined);
  CHECK(std::abs(idr.norm_ratio - 1.0) <= 1e-3);

  const AnalyticSymbol phi = affine_symbol(Complex(2.0, 0.0), Complex(0.0, 1.0));
  const WeightedCompositionResult ar =
      weighted_composition_apply(constant_symbol(1.0), phi, f, 1, 2.0);
  CHECK(ar.ratio_defined);
  // oracle: (F o phi)(z) = 1/(2(z+i))^2 = F(z)/4, so the ratio is exactly 1/4
  CHECK(ar.norm_ratio == doctest::Approx(0.25).epsilon(2e-3));

  const HardySobolevElement z = make_boundary_element(
      lift_to_sobolev(ArrayXc::Zero(desk_grid().point_count), desk_grid(), 1, 2.0));
  const WeightedCompositionResult zr = weighted_composition_apply(
      constant_symbol(1.0), identity_symbol(), z, 1, 2.0);
  CHECK_FALSE(zr.ratio_defined);

  // both criteria failing refuses the operation
  std::vector<AnalyticSymbol::Closure> d;
  d.push_back([](Complex z2) {
    return Complex(0.0, 1.0) +
           Complex(0.0, 0.5) * (z2 - Complex(0.0, 1.0)) / (z2 + Complex(0.0, 1.0));
  });
  d.push_back([](Complex z2) {
    return Complex(-1.0, 0.0) / ((z2 + Complex(0.0, 1.0)) * (z2 + Complex(0.0, 1.0)));
  });
  const AnalyticSymbol bounded("bounded-image", std::move(d), {Complex(0.0, -1.0)});
  CHECK_THROWS_AS(
      weighted_composition_apply(constant_symbol(1.0), bounded, f, 1, 2.0),
      InvalidInput);
}

TEST_CASE("psd kernel criterion at and below the exact norm") {
  const AnalyticSymbol one = constant_symbol(1.0);
  const AnalyticSymbol id = identity_symbol();
  const std::vector<Complex> pts = {{0.0, 1.0}, {0.0, 2.0}};
  CHECK(psd_kernel_check(one, id, 1, 1.0, pts).pass);
  CHECK_FALSE(psd_kernel_check(one, id, 1, 0.5, pts).pass);
  // monotone in the bound candidate
  CHECK(psd_kernel_check(one, id, 1, 2.0, pts).pass);
  // psi = 0 leaves a plain kernel Gram, positive for any bound
  CHECK(psd_kernel_check(constant_symbol(0.0), id, 1, 0.0, pts).pass);
  CHECK_THROWS_AS(psd_kernel_check(one, id, 1, -1.0, pts), InvalidInput);
}

TEST_CASE("reciprocal symbol closures") {
  const AnalyticSymbol psi = shifted_moebius_symbol(Complex(2.0, 0.0));
  const AnalyticSymbol inv = reciprocal_symbol(psi);
  for (Complex z : {Complex(0.3, 1.2), Complex(-1.0, 0.4)}) {
    CHECK(std::abs(inv(z) * psi(z) - 1.0) < 1e-12);
  }
}
