#include <cmath>
#include <random>

#include "doctest.h"
#include "hsx/weighted.hpp"

using namespace hsx;

namespace {

const HalfLineGrid& quad_grid() {
  static const HalfLineGrid g = make_halfline_grid("gauss-laguerre", 128, 1.0);
  return g;
}

SpectrumSample exp_sample(int n, Real p) {
  return make_spectrum_sample(
      quad_grid(), [](Real t) { return Complex(std::exp(-t), 0.0); }, n, p);
}

}  // namespace

TEST_CASE("mu norms of exp(-t) against gamma integrals") {
  const SpectrumSample f = exp_sample(1, 2.0);
  CHECK(mu_norm(f, 0, 2.0) == doctest::Approx(std::sqrt(kPi)).epsilon(1e-10));
  CHECK(mu_norm(f, 1, 2.0) == doctest::Approx(std::sqrt(kPi / 2.0)).epsilon(1e-10));
  CHECK_THROWS_AS(mu_norm(f, 2, 2.0), InvalidInput);  // k beyond the sample order
}

TEST_CASE("weighted norm is the p-sum of the component norms") {
  CHECK(ln_norm(exp_sample(1, 2.0)) ==
        doctest::Approx(std::sqrt(1.5 * kPi)).epsilon(1e-10));
  CHECK(ln_norm(exp_sample(0, 2.0)) == doctest::Approx(std::sqrt(kPi)).epsilon(1e-10));
  SpectrumSample z = make_spectrum_sample(quad_grid(), ArrayXc::Zero(128), 3, 2.0);
  CHECK(ln_norm(z) == 0.0);
}

TEST_CASE("norm equivalence ratio stays inside the combinatorial window") {
  const SpectrumSample f1 = exp_sample(1, 2.0);
  const EquivalenceReport r1 = equivalence_report(f1);
  CHECK(r1.ratio == doctest::Approx(1.0).epsilon(1e-12));

  const SpectrumSample f2 = exp_sample(2, 2.0);
  const EquivalenceReport r2 = equivalence_report(f2);
  CHECK(r2.ratio >= 1.0 - 1e-12);
  CHECK(r2.ratio <= std::sqrt(3.0) + 1e-12);
  CHECK(r2.ratio == doctest::Approx(std::sqrt(1.2)).epsilon(1e-10));

  SpectrumSample z = make_spectrum_sample(quad_grid(), ArrayXc::Zero(128), 2, 2.0);
  CHECK_THROWS_AS(equivalence_report(z), InvalidInput);
}

TEST_CASE("pointwise domination bounds the full norm by the endpoint pair") {
  std::mt19937 rng(2024);
  std::uniform_real_distribution<Real> u(-1.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + trial % 3;
    const Real decay = 0.5 + 0.25 * (trial % 4);
    ArrayXc vals(quad_grid().node_count);
    const Real a = u(rng), b = u(rng);
    for (Eigen::Index i = 0; i < vals.size(); ++i) {
      const Real t = quad_grid().nodes[i];
      vals[i] = Complex(a + b * t, u(rng) * 0.1) * std::exp(-decay * t);
    }
    const SpectrumSample f = make_spectrum_sample(quad_grid(), vals, n, 2.0);
    const EquivalenceReport rep = equivalence_report(f);
    CHECK(rep.full <= std::pow(n + 1.0, 0.5) * rep.two_term * (1.0 + 1e-12));
    CHECK(rep.ratio >= 1.0 - 1e-12);
  }
}

TEST_CASE("embedding chain: weighted control gives order-1 and plain-L1 control") {
  // gallery spectra with finite weighted norms
  const std::vector<std::function<Complex(Real)>> gallery = {
      [](Real t) { return Complex(std::exp(-t), 0.0); },
      [](Real t) { return Complex(t * std::exp(-t), 0.0); },
      [](Real t) { return Complex(std::exp(-0.5 * t) * std::cos(t), 0.0); }};
  for (const auto& f : gallery) {
    const SpectrumSample s2 = make_spectrum_sample(quad_grid(), f, 2, 2.0);
    REQUIRE(std::isfinite(ln_norm(s2)));
    const SpectrumSample s1 = make_spectrum_sample(quad_grid(), f, 1, 2.0);
    CHECK(std::isfinite(ln_norm(s1)));
    // plain L1 quadrature sum is finite,
    // and truncated-domain sums converge as the grid extends
    Real prev_l1 = -1.0;
    Real prev_gap = std::numeric_limits<Real>::infinity();
    Real limit = 0.0;
    {
      const HalfLineGrid wide = make_halfline_grid("exp-graded", 16384, 0.25);
      ArrayXc v(wide.node_count);
      for (Eigen::Index i = 0; i < wide.node_count; ++i) v[i] = f(wide.nodes[i]);
      limit = (wide.weights * v.abs()).sum();
    }
    for (Eigen::Index m : {512, 1024, 2048, 4096}) {
      const HalfLineGrid g = make_halfline_grid("exp-graded", m, 1.0);
      ArrayXc v(g.node_count);
      for (Eigen::Index i = 0; i < g.node_count; ++i) v[i] = f(g.nodes[i]);
      const Real l1 = (g.weights * v.abs()).sum();
      CHECK(std::isfinite(l1));
      const Real gap = std::abs(l1 - limit);
      if (prev_l1 >= 0.0) CHECK(gap <= prev_gap + 1e-12);
      prev_l1 = l1;
      prev_gap = gap;
    }
  }
}

TEST_CASE("hilbert-case inner product matches the squared norm") {
  const SpectrumSample f = exp_sample(2, 2.0);
  const Complex ip = ln_inner_product(f, f);
  CHECK(std::abs(ip.imag()) < 1e-14);
  const Real nn = ln_norm(f);
  CHECK(std::abs(ip.real() - nn * nn) / (nn * nn) < 1e-10);

  // conjugate symmetry on a complex pair
  ArrayXc gvals(quad_grid().node_count);
  for (Eigen::Index i = 0; i < gvals.size(); ++i) {
    const Real t = quad_grid().nodes[i];
    gvals[i] = Complex(std::cos(t), std::sin(0.5 * t)) * std::exp(-t);
  }
  const SpectrumSample g = make_spectrum_sample(quad_grid(), gvals, 2, 2.0);
  CHECK(std::abs(ln_inner_product(f, g) - std::conj(ln_inner_product(g, f))) < 1e-12);
}
