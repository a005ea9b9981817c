#include <cmath>

#include "doctest.h"
#include "hsx/grids.hpp"

using namespace hsx;

TEST_CASE("real grid layout") {
  const RealGrid g = make_real_grid(1.0, 8);
  CHECK(g.step == doctest::Approx(0.25));
  CHECK(g.nodes[0] == doctest::Approx(-1.0));
  CHECK(g.nodes[4] == doctest::Approx(0.0));
  CHECK(g.nodes[7] == doctest::Approx(0.75));
  for (Eigen::Index j = 1; j < g.point_count; ++j) {
    CHECK(g.nodes[j] > g.nodes[j - 1]);
  }

  const RealGrid big = make_real_grid(200.0, 1 << 16);
  CHECK(big.step == doctest::Approx(400.0 / 65536.0).epsilon(1e-14));
  CHECK(big.step * static_cast<Real>(big.point_count) ==
        doctest::Approx(2.0 * big.half_width));
}

TEST_CASE("real grid rejects bad parameters") {
  CHECK_THROWS_AS(make_real_grid(0.0, 8), InvalidInput);
  CHECK_THROWS_AS(make_real_grid(-1.0, 64), InvalidInput);
  CHECK_THROWS_AS(make_real_grid(1.0, 7), InvalidInput);
  CHECK_THROWS_AS(make_real_grid(1.0, 4), InvalidInput);
}

TEST_CASE("gauss-laguerre grid integrates its own weight") {
  for (Eigen::Index m : {64, 128}) {
    const HalfLineGrid g = make_halfline_grid("gauss-laguerre", m, 1.0);
    const Real w0 = (g.weights * (-g.nodes).exp()).sum();
    CHECK(std::abs(w0 - 1.0) < 1e-10);
    // Gamma(2) = 1
    const Real w1 = (g.weights * g.nodes * (-g.nodes).exp()).sum();
    CHECK(std::abs(w1 - 1.0) < 1e-10);
  }
}

TEST_CASE("gauss-laguerre rescaling absorbs the decay rate") {
  const HalfLineGrid g = make_halfline_grid("gauss-laguerre", 96, 3.0);
  const Real v = (g.weights * (-3.0 * g.nodes).exp()).sum();
  CHECK(std::abs(v - 1.0 / 3.0) < 1e-10);
}

TEST_CASE("exp-graded grid reaches the stated tolerance and converges") {
  const HalfLineGrid g = make_halfline_grid("exp-graded", 4096, 1.0);
  const Real v = (g.weights * (-2.0 * g.nodes).exp()).sum();
  CHECK(std::abs(v - 0.5) < 1e-8);

  const HalfLineGrid g2 = make_halfline_grid("exp-graded", 8192, 1.0);
  const Real v2 = (g2.weights * (-2.0 * g2.nodes).exp()).sum();
  CHECK(std::abs(v2 - 0.5) <= std::abs(v - 0.5) / 4.0);
}

TEST_CASE("half-line grid rejections") {
  CHECK_THROWS_AS(make_halfline_grid("gauss-laguerre", 4, 1.0), InvalidInput);
  CHECK_THROWS_AS(make_halfline_grid("gauss-laguerre", 64, 0.0), InvalidInput);
  CHECK_THROWS_AS(make_halfline_grid("chebyshev", 64, 1.0), InvalidInput);
}

TEST_CASE("compactified rule integrates rational decay spectrally") {
  const CompactifiedLineRule r = make_compactified_line_rule(512);
  // int 1/(1+x^2) = pi
  Real acc = 0.0;
  for (Eigen::Index q = 0; q < r.nodes.size(); ++q) {
    acc += r.weights[q] / (1.0 + r.nodes[q] * r.nodes[q]);
  }
  CHECK(std::abs(acc - kPi) < 1e-12);
}
