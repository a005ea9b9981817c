#ifndef HSX_OPERATOR_LAB_HPP
#define HSX_OPERATOR_LAB_HPP

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "hsx/grids.hpp"
#include "hsx/hardy_sobolev.hpp"
#include "hsx/laguerre.hpp"
#include "hsx/types.hpp"

namespace hsx {

/// Closed-form holomorphic symbol with derivative closures. Construction
/// validates the closures against central differences at seeded probes and
/// requires every declared pole to sit in the closed lower half-plane.
class AnalyticSymbol {
 public:
  using Closure = std::function<Complex(Complex)>;

  AnalyticSymbol(std::string kind, std::vector<Closure> derivatives,
                 std::vector<Complex> poles);

  Complex operator()(Complex z) const { return derivatives_[0](z); }
  Complex derivative(int order, Complex z) const;
  int max_order() const { return static_cast<int>(derivatives_.size()) - 1; }
  const std::string& kind() const { return kind_; }
  const std::vector<Complex>& poles() const { return poles_; }

 private:
  std::string kind_;
  std::vector<Closure> derivatives_;
  std::vector<Complex> poles_;
};

AnalyticSymbol constant_symbol(Complex c);
AnalyticSymbol affine_symbol(Complex slope, Complex offset);  // k z + b
AnalyticSymbol identity_symbol();
/// num/den with constant-first coefficients; derivatives by the quotient rule.
AnalyticSymbol rational_symbol(const VectorXc& numerator, const VectorXc& denominator);
AnalyticSymbol moebius_to_disk_symbol();               // (z - i)/(z + i)
AnalyticSymbol shifted_moebius_symbol(Complex shift);  // c + (z - i)/(z + i)
AnalyticSymbol cayley_exp_symbol(Real a);              // e^{i a z}, a > 0
AnalyticSymbol reciprocal_symbol(const AnalyticSymbol& base);

/// Standard upper-half-plane probe lattice with near-boundary and far-field rows.
std::vector<Complex> symbol_probe_lattice();

struct GalerkinBasis {
  int order = 0;
  Eigen::Index dimension = 0;
  std::vector<VectorXr> coeffs;  // L_m(2t)-coefficients of p_j; e_j = p_j e^{-t}
  Real orthonormality_defect = 0.0;
};

/// Orthonormal family spanning {t^m e^{-t}} under the weighted inner product,
/// built in the Laguerre coefficient representation (the raw monomial Gram is
/// numerically rank-deficient long before M = 48).
GalerkinBasis build_onb(int order, Eigen::Index dimension);

struct AssembleOptions {
  Eigen::Index pairing_nodes = 2048;
  Real heuristic_tolerance = 1e-2;
  Real boundedness_cap = 1e4;
};

struct GalerkinOperator {
  GalerkinBasis basis;
  MatrixXc matrix;
  bool multiplier_plausible = true;
  Real worst_level_residual = 0.0;
  std::string symbol_kind;
};

/// Matrix of T_psi in the basis: boundary traces multiplied by the symbol
/// trace (Leibniz levelwise) and paired in the boundary Sobolev form over the
/// compactified line rule.
GalerkinOperator assemble_multiplication(const AnalyticSymbol& symbol,
                                         const GalerkinBasis& basis,
                                         const AssembleOptions& options = {});

struct SpectrumReport {
  VectorXc eigenvalues;
  std::vector<Complex> range_samples;
  Real range_hull_distance = 0.0;
  bool inclusion_pass = false;
  Real eps_truncation = 0.15;
  Real range_fattening = 0.05;
};

/// Eigenvalue cloud of the truncation against the sampled symbol range.
SpectrumReport spectrum_check(const GalerkinOperator& op, const AnalyticSymbol& symbol,
                              Eigen::Index range_probe_count = 400);

/// || matrix^H v_z - conj(psi(z)) v_z || / || v_z || for the point-evaluation
/// coefficient vector v_z.
Real adjoint_eigen_residual(const GalerkinOperator& op, const AnalyticSymbol& symbol,
                            Complex z);

struct InvertibilityReport {
  Real inf_abs = 0.0;
  bool invertible_claim = false;
  Real roundtrip_defect = 0.0;  // ||AB - I||_2 when the claim holds
  bool roundtrip_pass = false;
};

/// Range-infimum probe for 1/psi membership; on a positive verdict the
/// reciprocal operator is assembled and the product checked against identity.
InvertibilityReport invertibility_check(const AnalyticSymbol& symbol, Real delta_probe,
                                        int order, Eigen::Index dimension,
                                        const AssembleOptions& options = {});

struct CriterionAReport {
  Real inf_A = 0.0;
  bool pass = false;
  Real derivative_sup = 0.0;  // sup over lattice of |phi'|..|phi^{(n)}|
};

/// inf over lattice pairs of |Re phi'(z) + i Im phi'(w)|; also checks the
/// self-map property and boundedness of the derivative closures.
CriterionAReport composition_criterion_A(const AnalyticSymbol& phi, int order,
                                         Real delta = 1e-3);

struct CriterionAngularReport {
  Real sup_ratio = 0.0;
  bool pass = false;
};

/// sup Im z / Im phi(z) along rows of growing height; passes when the row
/// maxima converge (finite angular derivative at infinity).
CriterionAngularReport composition_criterion_angular(const AnalyticSymbol& phi);

struct WeightedCompositionResult {
  HardySobolevElement image;
  Real norm_ratio = 0.0;
  bool ratio_defined = false;
};

/// psi (F o phi), built on a decimated boundary grid by extrapolated Cauchy
/// evaluation through the symbol closures. Requires one of the two
/// boundedness criteria to hold; n <= 2.
WeightedCompositionResult weighted_composition_apply(const AnalyticSymbol& psi,
                                                     const AnalyticSymbol& phi,
                                                     const HardySobolevElement& f,
                                                     int order, Real exponent);

struct PsdKernelReport {
  Real min_eig = 0.0;
  bool pass = false;
};

/// Gram positivity of the weighted-composition boundedness kernel
/// Mc^2 K_n(z_i, z_j) - psi(z_i) conj(psi(z_j)) K_n(phi(z_i), phi(z_j)).
PsdKernelReport psd_kernel_check(const AnalyticSymbol& psi, const AnalyticSymbol& phi,
                                 int order, Real bound_candidate,
                                 const std::vector<Complex>& points);

}  // namespace hsx

#endif
