#include "hsx/operator_lab.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "hsx/hilbert_model.hpp"

namespace hsx {

namespace {

void validate_derivative_closures(const std::vector<AnalyticSymbol::Closure>& d) {
  if (d.empty()) throw InvalidInput("symbol needs at least the value closure");
  // Fixed-seed probes keep construction deterministic.
  std::mt19937 rng(0x5eed);
  std::uniform_real_distribution<Real> ure(-3.0, 3.0);
  std::uniform_real_distribution<Real> uim(0.5, 3.0);
  const Real step = 1e-4;
  for (int probe = 0; probe < 10; ++probe) {
    const Complex z(ure(rng), uim(rng));
    for (std::size_t k = 1; k < d.size(); ++k) {
      const Complex fd =
          (d[k - 1](z + step) - d[k - 1](z - step)) / (2.0 * step);
      const Complex cl = d[k](z);
      const Real scale = std::max({std::abs(cl), std::abs(fd), 1.0});
      if (std::abs(fd - cl) > 1e-6 * scale * 10.0) {
        throw InvalidInput("symbol derivative closure disagrees with finite differences");
      }
    }
  }
}

}  // namespace

AnalyticSymbol::AnalyticSymbol(std::string kind, std::vector<Closure> derivatives,
                               std::vector<Complex> poles)
    : kind_(std::move(kind)),
      derivatives_(std::move(derivatives)),
      poles_(std::move(poles)) {
  for (const Complex& p : poles_) {
    if (p.imag() > 0.0) {
      throw InvalidInput("symbol pole in the open upper half-plane: " + kind_);
    }
  }
  validate_derivative_closures(derivatives_);
}

Complex AnalyticSymbol::derivative(int order, Complex z) const {
  if (order < 0 || order > max_order()) {
    throw InvalidInput("symbol derivative order out of range");
  }
  return derivatives_[order](z);
}

AnalyticSymbol constant_symbol(Complex c) {
  std::vector<AnalyticSymbol::Closure> d;
  d.push_back([c](Complex) { return c; });
  for (int k = 0; k < 4; ++k) d.push_back([](Complex) { return Complex(0.0, 0.0); });
  return AnalyticSymbol("constant", std::move(d), {});
}

AnalyticSymbol affine_symbol(Complex slope, Complex offset) {
  std::vector<AnalyticSymbol::Closure> d;
  d.push_back([slope, offset](Complex z) { return slope * z + offset; });
  d.push_back([slope](Complex) { return slope; });
  for (int k = 0; k < 3; ++k) d.push_back([](Complex) { return Complex(0.0, 0.0); });
  return AnalyticSymbol("affine", std::move(d), {});
}

AnalyticSymbol identity_symbol() { return affine_symbol(1.0, 0.0); }

namespace {

VectorXc poly_derivative(const VectorXc& p) {
  if (p.size() <= 1) return VectorXc::Zero(1);
  VectorXc d(p.size() - 1);
  for (Eigen::Index j = 1; j < p.size(); ++j) d[j - 1] = static_cast<Real>(j) * p[j];
  return d;
}

VectorXc poly_multiply(const VectorXc& a, const VectorXc& b) {
  VectorXc out = VectorXc::Zero(a.size() + b.size() - 1);
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    for (Eigen::Index j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

VectorXc poly_subtract(const VectorXc& a, const VectorXc& b) {
  VectorXc out = VectorXc::Zero(std::max(a.size(), b.size()));
  out.head(a.size()) = a;
  out.head(b.size()) -= b;
  return out;
}

Complex poly_eval(const VectorXc& p, Complex z) {
  Complex acc(0.0, 0.0);
  for (Eigen::Index j = p.size() - 1; j >= 0; --j) acc = acc * z + p[j];
  return acc;
}

std::vector<Complex> polynomial_roots(const VectorXc& p) {
  Eigen::Index deg = p.size() - 1;
  while (deg > 0 && std::abs(p[deg]) == 0.0) --deg;
  if (deg < 1) return {};
  MatrixXc companion = MatrixXc::Zero(deg, deg);
  for (Eigen::Index j = 0; j < deg; ++j) {
    companion(j, deg - 1) = -p[j] / p[deg];
    if (j + 1 < deg) companion(j + 1, j) = 1.0;
  }
  Eigen::ComplexEigenSolver<MatrixXc> es(companion);
  std::vector<Complex> roots;
  for (Eigen::Index j = 0; j < deg; ++j) roots.push_back(es.eigenvalues()[j]);
  return roots;
}

}  // namespace

AnalyticSymbol rational_symbol(const VectorXc& numerator, const VectorXc& denominator) {
  if (denominator.size() == 0 || numerator.size() == 0) {
    throw InvalidInput("rational symbol: empty coefficient list");
  }
  // Successive quotient-rule derivatives, each a rational pair again.
  std::vector<std::pair<VectorXc, VectorXc>> reps;
  reps.emplace_back(numerator, denominator);
  for (int k = 0; k < 4; ++k) {
    const VectorXc& nk = reps.back().first;
    const VectorXc& dk = reps.back().second;
    VectorXc num_next = poly_subtract(poly_multiply(poly_derivative(nk), dk),
                                      poly_multiply(nk, poly_derivative(dk)));
    VectorXc den_next = poly_multiply(dk, dk);
    reps.emplace_back(std::move(num_next), std::move(den_next));
  }
  std::vector<AnalyticSymbol::Closure> d;
  for (auto& [nk, dk] : reps) {
    VectorXc n = nk, dd = dk;
    d.push_back([n, dd](Complex z) { return poly_eval(n, z) / poly_eval(dd, z); });
  }
  return AnalyticSymbol("rational", std::move(d), polynomial_roots(denominator));
}

AnalyticSymbol moebius_to_disk_symbol() {
  VectorXc num(2), den(2);
  num << Complex(0.0, -1.0), Complex(1.0, 0.0);
  den << Complex(0.0, 1.0), Complex(1.0, 0.0);
  AnalyticSymbol s = rational_symbol(num, den);
  return AnalyticSymbol("moebius-to-disk",
                        {[s](Complex z) { return s(z); },
                         [s](Complex z) { return s.derivative(1, z); },
                         [s](Complex z) { return s.derivative(2, z); },
                         [s](Complex z) { return s.derivative(3, z); },
                         [s](Complex z) { return s.derivative(4, z); }},
                        s.poles());
}

AnalyticSymbol shifted_moebius_symbol(Complex shift) {
  VectorXc num(2), den(2);
  // c + (z-i)/(z+i) = ((1+c) z + i(c-1)) / (z + i)
  num << Complex(0.0, 1.0) * (shift - 1.0), shift + 1.0;
  den << Complex(0.0, 1.0), Complex(1.0, 0.0);
  AnalyticSymbol s = rational_symbol(num, den);
  return AnalyticSymbol("shifted-moebius",
                        {[s](Complex z) { return s(z); },
                         [s](Complex z) { return s.derivative(1, z); },
                         [s](Complex z) { return s.derivative(2, z); },
                         [s](Complex z) { return s.derivative(3, z); },
                         [s](Complex z) { return s.derivative(4, z); }},
                        s.poles());
}

AnalyticSymbol cayley_exp_symbol(Real a) {
  if (!(a > 0.0)) throw InvalidInput("cayley-exp symbol needs a > 0 to stay bounded");
  std::vector<AnalyticSymbol::Closure> d;
  for (int k = 0; k <= 4; ++k) {
    d.push_back([a, k](Complex z) {
      return std::pow(Complex(0.0, a), k) * std::exp(Complex(0.0, a) * z);
    });
  }
  return AnalyticSymbol("cayley-exp", std::move(d), {});
}

AnalyticSymbol reciprocal_symbol(const AnalyticSymbol& base) {
  auto basep = std::make_shared<AnalyticSymbol>(base);
  const int maxk = std::min(base.max_order(), 4);
  // (1/psi)^{(k)} = -(1/psi) sum_{j=1}^{k} C(k,j) psi^{(j)} (1/psi)^{(k-j)}
  std::vector<AnalyticSymbol::Closure> d;
  for (int k = 0; k <= maxk; ++k) {
    d.push_back([basep, k](Complex z) -> Complex {
      std::function<Complex(int, Complex)> r = [basep, &r](int kk, Complex zz) -> Complex {
        if (kk == 0) return 1.0 / (*basep)(zz);
        Complex acc(0.0, 0.0);
        Real binom = 1.0;
        for (int j = 1; j <= kk; ++j) {
          binom = binom * (kk - j + 1) / j;
          acc += binom * basep->derivative(j, zz) * r(kk - j, zz);
        }
        return -acc / (*basep)(zz);
      };
      return r(k, z);
    });
  }
  return AnalyticSymbol("reciprocal-" + base.kind(), std::move(d), {});
}

std::vector<Complex> symbol_probe_lattice() {
  static const std::vector<Real> rows = {1e-3, 1e-2, 0.1, 0.5, 1.0, 2.0,
                                         5.0,  10.0, 100.0, 1e3, 1e4};
  static const std::vector<Real> cols = {0.0,  0.01, -0.01, 0.1,  -0.1, 0.5, -0.5,
                                         1.0,  -1.0, 2.0,   -2.0, 5.0,  -5.0,
                                         10.0, -10.0, 100.0, -100.0, 1e3, -1e3};
  std::vector<Complex> lattice;
  lattice.reserve(rows.size() * cols.size());
  for (Real y : rows) {
    for (Real x : cols) lattice.emplace_back(x, y);
  }
  return lattice;
}

GalerkinBasis build_onb(int order, Eigen::Index dimension) {
  if (order < 0 || order > 4) throw InvalidInput("build_onb: order must be in [0, 4]");
  if (dimension < 1 || dimension > 48) {
    throw InvalidInput("build_onb: dimension must be in [1, 48]");
  }
  // Quadrature exact for every polynomial integrand that appears in the Gram.
  const Eigen::Index mq = 160;
  ArrayXr tau, wq;
  gauss_laguerre_rule(mq, tau, wq);
  const ArrayXr tq = tau / 2.0;

  auto inner = [&](const VectorXr& c1, const VectorXr& c2) {
    const ArrayXr v1 = laguerre_eval(c1, tq);
    const ArrayXr v2 = laguerre_eval(c2, tq);
    Real acc = 0.0;
    for (int k = 0; k <= order; ++k) {
      ArrayXr integrand = v1 * v2 * tq.pow(2 * k);
      acc += 2.0 * kPi * 0.5 * (wq * integrand).sum();
    }
    return acc;
  };
  auto padded = [](const VectorXr& c, Eigen::Index len) {
    VectorXr out = VectorXr::Zero(len);
    out.head(c.size()) = c;
    return out;
  };

  GalerkinBasis basis;
  basis.order = order;
  basis.dimension = dimension;

  std::vector<VectorXr> raw;
  raw.push_back(VectorXr::Ones(1));
  for (Eigen::Index m = 1; m < dimension; ++m) {
    raw.push_back(laguerre_multiply_by_t(raw.back()));
  }
  for (Eigen::Index m = 0; m < dimension; ++m) {
    VectorXr c = raw[m];
    for (int pass = 0; pass < 2; ++pass) {
      for (const VectorXr& e : basis.coeffs) {
        const Eigen::Index len = std::max(c.size(), e.size());
        const VectorXr cp = padded(c, len);
        const VectorXr ep = padded(e, len);
        c = cp - inner(cp, ep) * ep;
      }
    }
    const Real nn = std::sqrt(inner(c, c));
    if (!(nn > 0.0) || !std::isfinite(nn)) {
      throw NumericalFault("build_onb: orthogonalization collapsed");
    }
    basis.coeffs.push_back(c / nn);
  }

  Real defect = 0.0;
  for (Eigen::Index i = 0; i < dimension; ++i) {
    for (Eigen::Index j = 0; j <= i; ++j) {
      const Eigen::Index len = std::max(basis.coeffs[i].size(), basis.coeffs[j].size());
      const Real g = inner(padded(basis.coeffs[i], len), padded(basis.coeffs[j], len));
      defect = std::max(defect, std::abs(g - (i == j ? 1.0 : 0.0)));
    }
  }
  basis.orthonormality_defect = defect;
  if (defect > 1e-8) {
    throw NumericalFault("build_onb: basis failed the orthonormality contract");
  }
  return basis;
}

namespace {

struct PairingData {
  CompactifiedLineRule rule;
  // traces[j][k]: D^k of the j-th basis trace on the rule nodes
  std::vector<std::vector<ArrayXc>> traces;
};

PairingData basis_traces(const GalerkinBasis& basis, Eigen::Index nodes) {
  PairingData d;
  d.rule = make_compactified_line_rule(nodes);
  d.traces.resize(basis.dimension);
  for (Eigen::Index j = 0; j < basis.dimension; ++j) {
    d.traces[j].resize(basis.order + 1);
    for (int k = 0; k <= basis.order; ++k) {
      d.traces[j][k] = laguerre_trace_on_line(basis.coeffs[j], d.rule.nodes, k);
    }
  }
  return d;
}

Real compactified_hardy_residual(const ArrayXc& u, const CompactifiedLineRule& rule) {
  const std::vector<Complex> probes = default_hardy_probes(HalfPlane::Plus);
  const Real un = std::sqrt((rule.weights * u.abs2()).sum());
  if (un == 0.0) return 0.0;
  Real worst = 0.0;
  for (Complex z : probes) {
    const Complex pole = std::conj(z);
    Complex acc(0.0, 0.0);
    for (Eigen::Index q = 0; q < rule.nodes.size(); ++q) {
      acc += rule.weights[q] * u[q] / (rule.nodes[q] - pole);
    }
    const Real kn = std::sqrt(kPi / std::abs(z.imag()));
    worst = std::max(worst, std::abs(acc) / (un * kn));
  }
  return worst;
}

}  // namespace

GalerkinOperator assemble_multiplication(const AnalyticSymbol& symbol,
                                         const GalerkinBasis& basis,
                                         const AssembleOptions& options) {
  if (symbol.max_order() < basis.order) {
    throw InvalidInput("assemble: symbol lacks derivative closures up to the space order");
  }
  for (Complex z : symbol_probe_lattice()) {
    const Complex v = symbol(z);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()) ||
        std::abs(v) > options.boundedness_cap) {
      throw InvalidInput(
          "assemble: symbol is unbounded on the probe lattice; multipliers embed "
          "into the bounded holomorphic functions");
    }
  }

  const int n = basis.order;
  PairingData data = basis_traces(basis, options.pairing_nodes);
  const ArrayXr& x = data.rule.nodes;
  const ArrayXr& w = data.rule.weights;

  std::vector<ArrayXc> psi_levels(n + 1);
  for (int k = 0; k <= n; ++k) {
    psi_levels[k].resize(x.size());
    for (Eigen::Index q = 0; q < x.size(); ++q) {
      psi_levels[k][q] = symbol.derivative(k, Complex(x[q], 0.0));
    }
  }

  GalerkinOperator op;
  op.basis = basis;
  op.symbol_kind = symbol.kind();
  op.matrix.resize(basis.dimension, basis.dimension);
  Real worst_residual = 0.0;
  for (Eigen::Index j = 0; j < basis.dimension; ++j) {
    // Leibniz levels of psi * e_j on the rule
    std::vector<ArrayXc> lev(n + 1);
    for (int k = 0; k <= n; ++k) {
      ArrayXc acc = ArrayXc::Zero(x.size());
      Real binom = 1.0;
      for (int r = 0; r <= k; ++r) {
        acc += binom * psi_levels[r] * data.traces[j][k - r];
        binom = binom * (k - r) / (r + 1.0);
      }
      lev[k] = std::move(acc);
      worst_residual = std::max(worst_residual,
                                compactified_hardy_residual(lev[k], data.rule));
    }
    for (Eigen::Index i = 0; i < basis.dimension; ++i) {
      Complex acc(0.0, 0.0);
      for (int k = 0; k <= n; ++k) {
        acc += (w.cast<Complex>() * lev[k] * data.traces[i][k].conjugate()).sum();
      }
      op.matrix(i, j) = acc;
    }
  }
  op.worst_level_residual = worst_residual;
  op.multiplier_plausible = worst_residual <= options.heuristic_tolerance;
  return op;
}

SpectrumReport spectrum_check(const GalerkinOperator& op, const AnalyticSymbol& symbol,
                              Eigen::Index range_probe_count) {
  SpectrumReport rep;
  Eigen::ComplexEigenSolver<MatrixXc> es(op.matrix);
  if (es.info() != Eigen::Success) {
    throw NumericalFault("spectrum_check: eigenvalue iteration did not converge");
  }
  rep.eigenvalues = es.eigenvalues();

  // Dense deterministic log-spaced sampling of psi over the upper half-plane.
  std::vector<Complex> pts = symbol_probe_lattice();
  const Eigen::Index rows = std::max<Eigen::Index>(
      12, static_cast<Eigen::Index>(std::sqrt(static_cast<Real>(range_probe_count))));
  const Eigen::Index cols = 2 * rows;
  for (Eigen::Index r = 0; r < rows; ++r) {
    const Real y = std::pow(10.0, -3.0 + 6.0 * static_cast<Real>(r) /
                                       static_cast<Real>(rows - 1));
    pts.emplace_back(0.0, y);
    for (Eigen::Index c = 0; c < cols; ++c) {
      const Real x = std::pow(10.0, -2.0 + 5.0 * static_cast<Real>(c) /
                                         static_cast<Real>(cols - 1));
      pts.emplace_back(x, y);
      pts.emplace_back(-x, y);
    }
  }
  rep.range_samples.reserve(pts.size());
  for (Complex z : pts) rep.range_samples.push_back(symbol(z));

  Real worst = 0.0;
  for (Eigen::Index i = 0; i < rep.eigenvalues.size(); ++i) {
    Real best = std::numeric_limits<Real>::infinity();
    for (const Complex& r : rep.range_samples) {
      best = std::min(best, std::abs(rep.eigenvalues[i] - r));
    }
    worst = std::max(worst, best);
  }
  rep.range_hull_distance = worst;
  rep.inclusion_pass = worst <= rep.eps_truncation + rep.range_fattening;
  return rep;
}

Real adjoint_eigen_residual(const GalerkinOperator& op, const AnalyticSymbol& symbol,
                            Complex z) {
  if (!(z.imag() > 0.0)) throw InvalidInput("adjoint residual: Im z must be positive");
  VectorXc v(op.basis.dimension);
  for (Eigen::Index i = 0; i < op.basis.dimension; ++i) {
    v[i] = std::conj(laguerre_trace(op.basis.coeffs[i], z, 0));
  }
  const Real vn = v.norm();
  if (vn < 1e-12) {
    throw InvalidInput("adjoint residual: evaluation vector vanishes at this probe");
  }
  const VectorXc r = op.matrix.adjoint() * v - std::conj(symbol(z)) * v;
  return r.norm() / vn;
}

InvertibilityReport invertibility_check(const AnalyticSymbol& symbol, Real delta_probe,
                                        int order, Eigen::Index dimension,
                                        const AssembleOptions& options) {
  InvertibilityReport rep;
  Real inf_abs = std::numeric_limits<Real>::infinity();
  for (Complex z : symbol_probe_lattice()) {
    inf_abs = std::min(inf_abs, std::abs(symbol(z)));
  }
  rep.inf_abs = inf_abs;
  rep.invertible_claim = inf_abs > delta_probe;
  if (!rep.invertible_claim) return rep;

  const GalerkinBasis basis = build_onb(order, dimension);
  const GalerkinOperator a = assemble_multiplication(symbol, basis, options);
  const GalerkinOperator b =
      assemble_multiplication(reciprocal_symbol(symbol), basis, options);
  const MatrixXc defect =
      a.matrix * b.matrix - MatrixXc::Identity(dimension, dimension);
  Eigen::BDCSVD<MatrixXc> svd(defect);
  rep.roundtrip_defect = svd.singularValues()(0);
  rep.roundtrip_pass = rep.roundtrip_defect <= 0.1;
  return rep;
}

namespace {

void require_self_map(const AnalyticSymbol& phi) {
  for (Complex z : symbol_probe_lattice()) {
    if (!(phi(z).imag() > 0.0)) {
      throw InvalidInput("composition symbol is not a self-map of the upper half-plane");
    }
  }
}

}  // namespace

CriterionAReport composition_criterion_A(const AnalyticSymbol& phi, int order,
                                         Real delta) {
  if (phi.max_order() < 1) throw InvalidInput("criterion A needs the derivative closure");
  require_self_map(phi);
  CriterionAReport rep;
  Real min_re = std::numeric_limits<Real>::infinity();
  Real min_im = std::numeric_limits<Real>::infinity();
  Real dsup = 0.0;
  for (Complex z : symbol_probe_lattice()) {
    const Complex dp = phi.derivative(1, z);
    min_re = std::min(min_re, std::abs(dp.real()));
    min_im = std::min(min_im, std::abs(dp.imag()));
    // phi' with derivatives up to n-1 bounded means phi^{(1)}..phi^{(n)} bounded
    for (int k = 1; k <= std::max(1, order); ++k) {
      if (k > phi.max_order()) break;
      dsup = std::max(dsup, std::abs(phi.derivative(k, z)));
    }
  }
  // min over pairs of |Re phi'(z) + i Im phi'(w)| decouples into the two axes
  rep.inf_A = std::hypot(min_re, min_im);
  rep.derivative_sup = dsup;
  rep.pass = rep.inf_A > delta && std::isfinite(dsup);
  return rep;
}

CriterionAngularReport composition_criterion_angular(const AnalyticSymbol& phi) {
  require_self_map(phi);
  CriterionAngularReport rep;
  const std::vector<Real> cols = {0.0, 0.5, -0.5, 1.0, -1.0, 5.0, -5.0, 50.0, -50.0};
  std::vector<Real> row_max;
  for (Real y = 1e-2; y <= 1.01e4; y *= 10.0) {
    Real rmax = 0.0;
    for (Real x : cols) {
      const Complex w = phi(Complex(x, y));
      if (!(w.imag() > 0.0)) {
        throw InvalidInput("angular criterion: image left the upper half-plane");
      }
      rmax = std::max(rmax, y / w.imag());
    }
    row_max.push_back(rmax);
  }
  rep.sup_ratio = *std::max_element(row_max.begin(), row_max.end());
  const Real last = row_max[row_max.size() - 1];
  const Real prev = row_max[row_max.size() - 2];
  rep.pass = std::abs(last - prev) <= 0.05 * std::max(prev, 1e-30);
  return rep;
}

WeightedCompositionResult weighted_composition_apply(const AnalyticSymbol& psi,
                                                     const AnalyticSymbol& phi,
                                                     const HardySobolevElement& f,
                                                     int order, Real exponent) {
  if (order > 2) throw InvalidInput("weighted composition: implemented for n <= 2");
  if (!f.boundary) throw InvalidInput("weighted composition: boundary element required");
  const bool warrant_a = composition_criterion_A(phi, order).pass;
  const bool warrant_ang =
      warrant_a ? true : composition_criterion_angular(phi).pass;
  if (!warrant_a && !warrant_ang) {
    throw InvalidInput(
        "weighted composition refused: neither boundedness criterion holds for "
        "this composition symbol");
  }
  const BoundarySample& b = *f.boundary;
  const Real h = b.grid.step;

  // Decimated output grid; Cauchy evaluations extrapolated to the boundary
  // from four reference heights (cubic: the bias must stay small even after
  // integration over wide windows). Heights start at 4h: the double-pole
  // kernels alias visibly at 2h.
  const Eigen::Index stride = 32;
  const Eigen::Index m = b.grid.point_count / stride;
  const RealGrid out_grid = make_real_grid(b.grid.half_width, m);
  const std::vector<Real> heights = {4.0 * h, 8.0 * h, 12.0 * h, 16.0 * h};
  const std::size_t nh = heights.size();

  std::vector<std::vector<ArrayXc>> fval(nh);
  for (std::size_t iy = 0; iy < nh; ++iy) {
    fval[iy].assign(order + 1, ArrayXc::Zero(m));
  }
  for (Eigen::Index j = 0; j < m; ++j) {
    for (std::size_t iy = 0; iy < nh; ++iy) {
      const Complex zb(out_grid.nodes[j], heights[iy]);
      const Complex w = phi(zb);
      std::vector<Complex> fd(order + 1);
      for (int k = 0; k <= order; ++k) fd[k] = interior_eval(f, k, w);
      const Complex p0 = psi(zb);
      fval[iy][0][j] = p0 * fd[0];
      if (order >= 1) {
        const Complex p1 = psi.derivative(1, zb);
        const Complex d1 = phi.derivative(1, zb);
        fval[iy][1][j] = p1 * fd[0] + p0 * fd[1] * d1;
      }
      if (order >= 2) {
        const Complex p1 = psi.derivative(1, zb);
        const Complex p2 = psi.derivative(2, zb);
        const Complex d1 = phi.derivative(1, zb);
        const Complex d2 = phi.derivative(2, zb);
        fval[iy][2][j] = p2 * fd[0] + 2.0 * p1 * fd[1] * d1 +
                         p0 * (fd[2] * d1 * d1 + fd[1] * d2);
      }
    }
  }
  // pointwise Lagrange extrapolation to height zero
  std::vector<Real> lag(nh, 1.0);
  for (std::size_t i = 0; i < nh; ++i) {
    for (std::size_t q = 0; q < nh; ++q) {
      if (q != i) lag[i] *= (0.0 - heights[q]) / (heights[i] - heights[q]);
    }
  }
  std::vector<ArrayXc> stack(order + 1, ArrayXc::Zero(m));
  for (int k = 0; k <= order; ++k) {
    for (std::size_t iy = 0; iy < nh; ++iy) stack[k] += lag[iy] * fval[iy][k];
  }

  WeightedCompositionResult res;
  BoundarySample image =
      make_boundary_sample(out_grid, std::move(stack), exponent, 1e-2);
  res.image.order = order;
  res.image.exponent = exponent;
  res.image.construction_residual = hardy_residual(image, HalfPlane::Plus);
  const Real image_norm = sobolev_norm(image);
  res.image.boundary = std::move(image);
  const Real base_norm = hs_norm(f);
  if (base_norm > 0.0) {
    res.norm_ratio = image_norm / base_norm;
    res.ratio_defined = true;
  } else {
    res.norm_ratio = std::numeric_limits<Real>::quiet_NaN();  // 0/0 sentinel
    res.ratio_defined = false;
  }
  return res;
}

PsdKernelReport psd_kernel_check(const AnalyticSymbol& psi, const AnalyticSymbol& phi,
                                 int order, Real bound_candidate,
                                 const std::vector<Complex>& points) {
  if (bound_candidate < 0.0) throw InvalidInput("psd check: bound candidate must be >= 0");
  if (points.empty()) throw InvalidInput("psd check: empty point set");
  for (Complex z : points) {
    if (!(z.imag() > 0.0)) throw InvalidInput("psd check: points must be in Im z > 0");
    if (!(phi(z).imag() > 0.0)) {
      throw InvalidInput("psd check: composition symbol is not a self-map at the points");
    }
  }
  const Eigen::Index m = static_cast<Eigen::Index>(points.size());
  MatrixXc g(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) {
      const Complex k1 =
          kernel_eval(make_kernel_handle(order, points[i]), points[j]);
      const Complex k2 =
          kernel_eval(make_kernel_handle(order, phi(points[i])), phi(points[j]));
      g(i, j) = bound_candidate * bound_candidate * k1 -
                psi(points[i]) * std::conj(psi(points[j])) * k2;
    }
  }
  const Real scale = g.cwiseAbs().maxCoeff();
  if ((g - g.adjoint()).cwiseAbs().maxCoeff() > 1e-6 * std::max(scale, 1e-30)) {
    throw NumericalFault("psd check: kernel matrix is not Hermitian: quadrature fault");
  }
  const MatrixXc herm = 0.5 * (g + g.adjoint());
  Eigen::SelfAdjointEigenSolver<MatrixXc> es(herm);
  PsdKernelReport rep;
  rep.min_eig = es.eigenvalues().minCoeff();
  const Real trace_scale = std::abs(herm.trace().real());
  rep.pass = rep.min_eig >= -1e-8 * std::max(trace_scale, 1e-30);
  return rep;
}

}  // namespace hsx
