#ifndef HSX_GRIDS_HPP
#define HSX_GRIDS_HPP

#include <string>

#include "hsx/types.hpp"

namespace hsx {

/// Uniform symmetric grid on [-L, L): nodes x_j = -L + j*h, h = 2L/N.
struct RealGrid {
  Real half_width = 0.0;
  Eigen::Index point_count = 0;
  Real step = 0.0;
  ArrayXr nodes;
};

RealGrid make_real_grid(Real half_width, Eigen::Index point_count);

enum class HalfLineScheme { GaussLaguerre, ExpGraded };

HalfLineScheme parse_halfline_scheme(const std::string& name);

/// Quadrature carrier for (0, inf). `weights` integrate plain dt:
/// sum_i weights[i] * f(nodes[i]) ~ int_0^inf f(t) dt for f decaying like
/// exp(-decay_scale * t) (Gauss-Laguerre) or smooth with that decay (exp-graded).
struct HalfLineGrid {
  HalfLineScheme scheme = HalfLineScheme::GaussLaguerre;
  Eigen::Index node_count = 0;
  Real decay_scale = 1.0;
  ArrayXr nodes;
  ArrayXr weights;
};

HalfLineGrid make_halfline_grid(HalfLineScheme scheme, Eigen::Index node_count,
                                Real decay_scale);
HalfLineGrid make_halfline_grid(const std::string& scheme, Eigen::Index node_count,
                                Real decay_scale);

/// Raw Gauss-Laguerre rule for weight e^{-t} on (0, inf). Weights sum to 1 in
/// exact arithmetic; far-tail weights may underflow to zero.
void gauss_laguerre_rule(Eigen::Index m, ArrayXr& nodes, ArrayXr& weights);

/// Same rule with log-weights, for consumers that reweight by e^{+t}.
void gauss_laguerre_log_rule(Eigen::Index m, ArrayXr& nodes, ArrayXr& log_weights);

/// Full-line quadrature through x = tan(theta); integrates functions decaying
/// like 1/x^2 (and products of Cauchy-type traces) with spectral accuracy.
struct CompactifiedLineRule {
  ArrayXr nodes;    // tan(theta_q)
  ArrayXr weights;  // (pi/K) sec^2(theta_q)
};

CompactifiedLineRule make_compactified_line_rule(Eigen::Index node_count);

/// Composite trapezoid of sampled values with uniform step h.
Real trapezoid(const ArrayXr& values, Real step);
Complex trapezoid(const ArrayXc& values, Real step);

}  // namespace hsx

#endif
