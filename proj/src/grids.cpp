#include "hsx/grids.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

namespace hsx {

RealGrid make_real_grid(Real half_width, Eigen::Index point_count) {
  if (!(half_width > 0.0)) {
    throw InvalidInput("make_real_grid: half_width must be positive");
  }
  if (point_count < 8 || point_count % 2 != 0) {
    throw InvalidInput("make_real_grid: point_count must be even and >= 8");
  }
  RealGrid g;
  g.half_width = half_width;
  g.point_count = point_count;
  g.step = 2.0 * half_width / static_cast<Real>(point_count);
  g.nodes = -half_width + g.step * ArrayXr::LinSpaced(point_count, 0.0,
                                                      static_cast<Real>(point_count - 1));
  return g;
}

HalfLineScheme parse_halfline_scheme(const std::string& name) {
  if (name == "gauss-laguerre") return HalfLineScheme::GaussLaguerre;
  if (name == "exp-graded") return HalfLineScheme::ExpGraded;
  throw InvalidInput("unknown half-line scheme: " + name);
}

namespace {

// L_m(x) and L_{m-1}(x) by the forward recurrence (relatively stable beyond
// the turning point, where the growing solution dominates).
void laguerre_pair(Eigen::Index m, Real x, Real& lm, Real& lm1) {
  Real prev = 1.0;
  Real curr = 1.0 - x;
  for (Eigen::Index k = 1; k < m; ++k) {
    const Real next =
        ((2.0 * static_cast<Real>(k) + 1.0 - x) * curr - static_cast<Real>(k) * prev) /
        (static_cast<Real>(k) + 1.0);
    prev = curr;
    curr = next;
  }
  lm = curr;
  lm1 = prev;
}

}  // namespace

void gauss_laguerre_rule(Eigen::Index m, ArrayXr& nodes, ArrayXr& weights) {
  ArrayXr log_weights;
  gauss_laguerre_log_rule(m, nodes, log_weights);
  weights = log_weights.exp();  // tail weights may underflow to zero; that is fine
}

void gauss_laguerre_log_rule(Eigen::Index m, ArrayXr& nodes, ArrayXr& log_weights) {
  if (m < 1) throw InvalidInput("gauss_laguerre_rule: need at least one node");
  if (m > 256) throw InvalidInput("gauss_laguerre_rule: node count capped at 256");
  // Nodes from the Golub-Welsch tridiagonal eigenproblem, then Newton-polished
  // on the recurrence. Eigenvector-based weights lose all relative accuracy in
  // the far tail, so the weights come from the derivative formula
  //   w_i = x_i / ((m+1) L_{m+1}(x_i))^2,
  // assembled in log space.
  MatrixXr jac = MatrixXr::Zero(m, m);
  for (Eigen::Index k = 0; k < m; ++k) {
    jac(k, k) = static_cast<Real>(2 * k + 1);
    if (k + 1 < m) {
      jac(k, k + 1) = static_cast<Real>(k + 1);
      jac(k + 1, k) = static_cast<Real>(k + 1);
    }
  }
  Eigen::SelfAdjointEigenSolver<MatrixXr> es(jac, Eigen::EigenvaluesOnly);
  nodes = es.eigenvalues().array();

  log_weights.resize(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    Real x = nodes[i];
    for (int it = 0; it < 3; ++it) {
      Real lm, lm1;
      laguerre_pair(m, x, lm, lm1);
      // L_m'(x) = m (L_m(x) - L_{m-1}(x)) / x
      const Real dlm = static_cast<Real>(m) * (lm - lm1) / x;
      const Real step = lm / dlm;
      x -= step;
      if (std::abs(step) < 1e-15 * x) break;
    }
    nodes[i] = x;
    Real lp, lp1;
    laguerre_pair(m + 1, x, lp, lp1);
    const Real denom = (static_cast<Real>(m) + 1.0) * lp;
    log_weights[i] = std::log(x) - 2.0 * std::log(std::abs(denom));
  }
}

namespace {

HalfLineGrid make_gauss_laguerre_grid(Eigen::Index m, Real s) {
  ArrayXr tau, logw;
  gauss_laguerre_log_rule(m, tau, logw);
  HalfLineGrid g;
  g.scheme = HalfLineScheme::GaussLaguerre;
  g.node_count = m;
  g.decay_scale = s;
  g.nodes = tau / s;
  // Modified weights w_i e^{tau_i} / s, assembled in log space so the tail
  // weights keep their relative accuracy.
  g.weights = (tau + logw).exp() / s;
  return g;
}

HalfLineGrid make_exp_graded_grid(Eigen::Index m, Real s) {
  // Geometrically graded panel edges on (0, T], composite Simpson per panel.
  const Eigen::Index panels = (m - 1) / 2;
  const Real T = (6.0 + 1.5 * std::log(static_cast<Real>(m))) / s;
  const Real gamma = 6.0;
  ArrayXr edges(panels + 1);
  for (Eigen::Index j = 0; j <= panels; ++j) {
    const Real u = static_cast<Real>(j) / static_cast<Real>(panels);
    edges[j] = T * (std::expm1(gamma * u)) / std::expm1(gamma);
  }
  HalfLineGrid g;
  g.scheme = HalfLineScheme::ExpGraded;
  g.decay_scale = s;
  g.node_count = 2 * panels + 1;
  g.nodes.setZero(g.node_count);
  g.weights.setZero(g.node_count);
  for (Eigen::Index j = 0; j < panels; ++j) {
    const Real a = edges[j];
    const Real b = edges[j + 1];
    const Real mid = 0.5 * (a + b);
    const Real w = (b - a) / 6.0;
    g.nodes[2 * j] = a;
    g.nodes[2 * j + 1] = mid;
    g.nodes[2 * j + 2] = b;
    g.weights[2 * j] += w;
    g.weights[2 * j + 1] += 4.0 * w;
    g.weights[2 * j + 2] += w;
  }
  // Left edge sits at t = 0; nudge it inside the open half-line.
  g.nodes[0] = std::max(g.nodes[0], 1e-300);
  return g;
}

}  // namespace

HalfLineGrid make_halfline_grid(HalfLineScheme scheme, Eigen::Index node_count,
                                Real decay_scale) {
  if (node_count < 8) throw InvalidInput("make_halfline_grid: node count must be >= 8");
  if (!(decay_scale > 0.0)) {
    throw InvalidInput("make_halfline_grid: decay scale must be positive");
  }
  switch (scheme) {
    case HalfLineScheme::GaussLaguerre:
      return make_gauss_laguerre_grid(node_count, decay_scale);
    case HalfLineScheme::ExpGraded:
      return make_exp_graded_grid(node_count, decay_scale);
  }
  throw InvalidInput("make_halfline_grid: unknown scheme");
}

HalfLineGrid make_halfline_grid(const std::string& scheme, Eigen::Index node_count,
                                Real decay_scale) {
  return make_halfline_grid(parse_halfline_scheme(scheme), node_count, decay_scale);
}

CompactifiedLineRule make_compactified_line_rule(Eigen::Index node_count) {
  if (node_count < 8) throw InvalidInput("compactified rule: node count must be >= 8");
  CompactifiedLineRule r;
  r.nodes.resize(node_count);
  r.weights.resize(node_count);
  const Real dth = kPi / static_cast<Real>(node_count);
  for (Eigen::Index q = 0; q < node_count; ++q) {
    const Real th = -0.5 * kPi + (static_cast<Real>(q) + 0.5) * dth;
    const Real c = std::cos(th);
    r.nodes[q] = std::tan(th);
    r.weights[q] = dth / (c * c);
  }
  return r;
}

Real trapezoid(const ArrayXr& values, Real step) {
  if (values.size() < 2) return 0.0;
  return step * (values.sum() - 0.5 * (values[0] + values[values.size() - 1]));
}

Complex trapezoid(const ArrayXc& values, Real step) {
  if (values.size() < 2) return Complex(0.0, 0.0);
  return step * (values.sum() - 0.5 * (values[0] + values[values.size() - 1]));
}

}  // namespace hsx
