#include "hsx/weighted.hpp"

#include <cmath>

namespace hsx {

namespace {

void check_sample(const SpectrumSample& f) {
  if (f.values.size() != f.grid.node_count) {
    throw InvalidInput("spectrum sample length does not match grid");
  }
  if (!f.values.isFinite().all()) {
    throw InvalidInput("spectrum sample contains non-finite values");
  }
  if (f.order < 0) throw InvalidInput("spectrum sample order must be >= 0");
  if (!(f.exponent >= 1.0) || !is_finite_exponent(f.exponent)) {
    throw InvalidInput("spectrum exponent must lie in [1, inf)");
  }
}

}  // namespace

SpectrumSample make_spectrum_sample(const HalfLineGrid& grid, ArrayXc values,
                                    int order, Real exponent) {
  SpectrumSample s;
  s.grid = grid;
  s.values = std::move(values);
  s.order = order;
  s.exponent = exponent;
  check_sample(s);
  return s;
}

SpectrumSample make_spectrum_sample(const HalfLineGrid& grid,
                                    const std::function<Complex(Real)>& f, int order,
                                    Real exponent) {
  ArrayXc vals(grid.node_count);
  for (Eigen::Index i = 0; i < grid.node_count; ++i) vals[i] = f(grid.nodes[i]);
  SpectrumSample s = make_spectrum_sample(grid, std::move(vals), order, exponent);
  s.evaluator = f;
  return s;
}

Real mu_norm(const SpectrumSample& f, int k, Real p) {
  check_sample(f);
  if (k < 0 || k > f.order) throw InvalidInput("mu_norm: k out of range [0, n]");
  if (!(p >= 1.0) || !is_finite_exponent(p)) {
    throw InvalidInput("mu_norm: p must lie in [1, inf)");
  }
  const ArrayXr t = f.grid.nodes;
  const ArrayXr absf = f.values.abs();
  Real acc = 0.0;
  for (Eigen::Index i = 0; i < t.size(); ++i) {
    acc += f.grid.weights[i] * 2.0 * kPi * std::pow(t[i], k * p) * std::pow(absf[i], p);
  }
  return std::pow(acc, 1.0 / p);
}

Real ln_norm(const SpectrumSample& f) {
  check_sample(f);
  const Real p = f.exponent;
  Real acc = 0.0;
  for (int k = 0; k <= f.order; ++k) acc += std::pow(mu_norm(f, k, p), p);
  return std::pow(acc, 1.0 / p);
}

EquivalenceReport equivalence_report(const SpectrumSample& f) {
  check_sample(f);
  if (f.order < 1) throw InvalidInput("equivalence_report: requires n >= 1");
  const Real p = f.exponent;
  EquivalenceReport rep;
  const Real m0 = mu_norm(f, 0, p);
  const Real mn = mu_norm(f, f.order, p);
  rep.two_term = std::pow(std::pow(m0, p) + std::pow(mn, p), 1.0 / p);
  rep.full = ln_norm(f);
  if (rep.two_term == 0.0) {
    if (rep.full > 0.0) {
      throw NumericalFault("equivalence_report: endpoint norms vanish but full norm does not");
    }
    throw InvalidInput("equivalence_report: zero sample is degenerate for the ratio");
  }
  rep.ratio = rep.full / rep.two_term;
  return rep;
}

Complex ln_inner_product(const SpectrumSample& f, const SpectrumSample& g) {
  check_sample(f);
  check_sample(g);
  if (f.order != g.order) throw InvalidInput("inner product: order mismatch");
  if (f.exponent != 2.0 || g.exponent != 2.0) {
    throw InvalidInput("inner product: defined for p = 2 only");
  }
  if (f.grid.node_count != g.grid.node_count ||
      (f.grid.nodes - g.grid.nodes).abs().maxCoeff() > 0.0) {
    throw InvalidInput("inner product: samples must share a grid");
  }
  const ArrayXr& t = f.grid.nodes;
  Complex acc(0.0, 0.0);
  for (int k = 0; k <= f.order; ++k) {
    for (Eigen::Index i = 0; i < t.size(); ++i) {
      acc += f.grid.weights[i] * 2.0 * kPi * std::pow(t[i], 2 * k) * f.values[i] *
             std::conj(g.values[i]);
    }
  }
  return acc;
}

}  // namespace hsx
