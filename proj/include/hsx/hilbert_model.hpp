#ifndef HSX_HILBERT_MODEL_HPP
#define HSX_HILBERT_MODEL_HPP

#include <map>
#include <string>
#include <vector>

#include "hsx/hardy_sobolev.hpp"
#include "hsx/types.hpp"
#include "hsx/weighted.hpp"

namespace hsx {

/// int_0^inf f(t) e^{izt} dt on the sample's own quadrature nodes, Im z > 0.
Complex holomorphic_fourier(const SpectrumSample& f, Complex z);

struct PwIsometryReport {
  Real fourier_side = 0.0;
  Real boundary_side = 0.0;
  Real rel_gap = 0.0;
};

/// Theorem-level isometry check: the weighted half-line norm against the
/// x-space line norms of the synthesized extension, both routes independent.
/// Line norms are taken at heights {2h,4h,6h,8h} and extrapolated to the
/// boundary; the sample must carry an evaluator (closed form) because the
/// synthesis leaves the quadrature nodes.
PwIsometryReport pw_isometry_check(const SpectrumSample& f, int order,
                                   const RealGrid& grid);

struct KernelHandle {
  int order = 0;
  Complex anchor{0.0, 1.0};  // z, Im z > 0
};

KernelHandle make_kernel_handle(int order, Complex anchor);

/// K_n(z, w) = (1/2 pi) int_0^inf e^{i x (w - conj z)} / (1 + x^2 + ... + x^{2n}) dx.
/// Quadrature scale follows Im z + Im w plus the rational falloff.
Complex kernel_eval(const KernelHandle& handle, Complex w,
                    Eigen::Index quadrature_nodes = 128);

struct KernelReproduceReport {
  Complex inner;
  Complex point;
  Real rel_gap = 0.0;
};

/// <f, g_z>_{L_n^2} against the direct transform value at z.
KernelReproduceReport kernel_reproduce_check(const HardySobolevElement& f,
                                             const KernelHandle& handle);

struct KernelDiagReport {
  Complex anchor;
  Real diag = 0.0;
  bool pass = false;
};

/// K_n(z, z) <= 1/4 over the probes; nonreal or negative diagonals are a
/// quadrature fault.
std::vector<KernelDiagReport> kernel_norm_bound(int order,
                                                const std::vector<Complex>& probes);

struct HilbertProductReport {
  Real pair_lhs = 0.0;        // ||FG||_{H^2}
  Real pair_rhs = 0.0;        // (1/2) ||F||_{H_n^2} ||G||_{H^2}
  bool pair_bound_pass = false;
  Real sharp_lhs_sq = 0.0;    // ||FG||_{H_n^2}^2
  Real sharp_rhs_sq = 0.0;    // (4^n - 1)/3 ||F||^2 ||G||^2
  bool sharp_pass = false;
  Real deriv_lhs = 0.0;       // ||F G^{(n)}||_{H^2}
  Real deriv_rhs = 0.0;       // (1/2) ||F||_{H_n^2} ||G^{(n)}||_{H^2}
  bool deriv_pass = false;
};

/// The two kernel-derived product bounds (and the derivative-factor variant),
/// products formed through the boundary stacks.
HilbertProductReport hilbert_product_bounds(const HardySobolevElement& f,
                                            const HardySobolevElement& g, int order);

enum class GalleryCaseId { Weierstrass, InverseTail, HpNotH2p, EndpointP1 };

GalleryCaseId parse_gallery_case(const std::string& name);
std::string gallery_case_name(GalleryCaseId id);

struct GalleryCase {
  GalleryCaseId id = GalleryCaseId::Weierstrass;
  Real weier_a = 0.5;
  int weier_b = 7;
  int weier_truncation = 40;
  Real exponent = 2.0;  // p for the hp-not-h2p case
};

struct GalleryReport {
  std::string case_id;
  bool pass = false;
  std::map<std::string, Real> values;
  std::string note;
};

/// Divergence/membership demonstrations: nowhere-differentiable spectrum with
/// finite weighted norm, affine growth of the truncated inverse-tail norm,
/// the H^p vs H^{2p} line-norm growth, and the endpoint p=1 split blow-up.
GalleryReport gallery_run(const GalleryCase& c);

}  // namespace hsx

#endif
