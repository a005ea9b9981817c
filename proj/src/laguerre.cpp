#include "hsx/laguerre.hpp"

namespace hsx {

MatrixXr laguerre_values(const ArrayXr& u, int max_degree) {
  MatrixXr v(max_degree + 1, u.size());
  v.row(0).setOnes();
  if (max_degree >= 1) v.row(1) = (1.0 - u).matrix().transpose();
  for (int m = 1; m < max_degree; ++m) {
    v.row(m + 1) = (((2.0 * m + 1.0 - u) * v.row(m).transpose().array() -
                     static_cast<Real>(m) * v.row(m - 1).transpose().array()) /
                    static_cast<Real>(m + 1))
                       .matrix()
                       .transpose();
  }
  return v;
}

VectorXr laguerre_multiply_by_t(const VectorXr& coeffs) {
  // t L_m(2t) = [-m L_{m-1} + (2m+1) L_m - (m+1) L_{m+1}](2t) / 2
  const Eigen::Index n = coeffs.size();
  VectorXr out = VectorXr::Zero(n + 1);
  for (Eigen::Index j = 0; j <= n; ++j) {
    Real v = 0.0;
    if (j + 1 < n) v += coeffs[j + 1] * (-(static_cast<Real>(j) + 1.0) / 2.0);
    if (j < n) v += coeffs[j] * ((2.0 * static_cast<Real>(j) + 1.0) / 2.0);
    if (j >= 1) v += coeffs[j - 1] * (-static_cast<Real>(j) / 2.0);
    out[j] = v;
  }
  return out;
}

ArrayXr laguerre_eval(const VectorXr& coeffs, const ArrayXr& t) {
  const int deg = static_cast<int>(coeffs.size()) - 1;
  const MatrixXr v = laguerre_values(2.0 * t, deg);
  return (coeffs.transpose() * v).array();
}

namespace {

VectorXr raise_order(const VectorXr& coeffs, int k) {
  VectorXr d = coeffs;
  for (int j = 0; j < k; ++j) d = laguerre_multiply_by_t(d);
  return d;
}

}  // namespace

Complex laguerre_trace(const VectorXr& coeffs, Complex z, int derivative_order) {
  const VectorXr d = raise_order(coeffs, derivative_order);
  const Complex sigma = Complex(1.0, 0.0) - Complex(0.0, 1.0) * z;
  const Complex r = (sigma - 2.0) / sigma;
  Complex acc(0.0, 0.0);
  Complex rm(1.0, 0.0);
  for (Eigen::Index m = 0; m < d.size(); ++m) {
    acc += d[m] * rm;
    rm *= r;
  }
  return std::pow(Complex(0.0, 1.0), derivative_order) * acc / sigma;
}

ArrayXc laguerre_trace_on_line(const VectorXr& coeffs, const ArrayXr& x,
                               int derivative_order, Real height) {
  const VectorXr d = raise_order(coeffs, derivative_order);
  const Complex ik = std::pow(Complex(0.0, 1.0), derivative_order);
  ArrayXc sigma = (1.0 + height) - Complex(0.0, 1.0) * x.cast<Complex>();
  ArrayXc r = (sigma - 2.0) / sigma;
  ArrayXc acc = ArrayXc::Zero(x.size());
  ArrayXc rm = ArrayXc::Ones(x.size());
  for (Eigen::Index m = 0; m < d.size(); ++m) {
    acc += d[m] * rm;
    rm *= r;
  }
  return ik * acc / sigma;
}

}  // namespace hsx
