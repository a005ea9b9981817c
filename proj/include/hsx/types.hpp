#ifndef HSX_TYPES_HPP
#define HSX_TYPES_HPP

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace hsx {

using Real = double;
using Complex = std::complex<double>;

using ArrayXr = Eigen::ArrayXd;
using ArrayXc = Eigen::ArrayXcd;
using VectorXr = Eigen::VectorXd;
using VectorXc = Eigen::VectorXcd;
using MatrixXr = Eigen::MatrixXd;
using MatrixXc = Eigen::MatrixXcd;

inline constexpr Real kPi = 3.141592653589793238462643383279502884;

inline constexpr Real kInfExponent = std::numeric_limits<Real>::infinity();

/// Thrown when an operation precondition is violated.
class InvalidInput : public std::invalid_argument {
 public:
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

/// Thrown when a computed quantity is internally inconsistent (quadrature fault).
class NumericalFault : public std::runtime_error {
 public:
  explicit NumericalFault(const std::string& what) : std::runtime_error(what) {}
};

inline bool is_finite_exponent(Real p) { return p < kInfExponent; }

}  // namespace hsx

#endif
