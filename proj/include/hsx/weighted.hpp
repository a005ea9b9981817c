#ifndef HSX_WEIGHTED_HPP
#define HSX_WEIGHTED_HPP

#include <functional>

#include "hsx/grids.hpp"
#include "hsx/types.hpp"

namespace hsx {

/// Sampled function on the weighted half-line. `evaluator`, when present,
/// is the closed form the samples came from; operations that must leave the
/// quadrature nodes (line-norm synthesis) require it.
struct SpectrumSample {
  HalfLineGrid grid;
  ArrayXc values;
  int order = 0;       // n
  Real exponent = 2.0;  // p in [1, inf)
  std::function<Complex(Real)> evaluator;
};

SpectrumSample make_spectrum_sample(const HalfLineGrid& grid, ArrayXc values,
                                    int order, Real exponent);
SpectrumSample make_spectrum_sample(const HalfLineGrid& grid,
                                    const std::function<Complex(Real)>& f, int order,
                                    Real exponent);

/// || f ||_{mu_{k,p}} = ( sum_i w_i 2 pi t_i^{kp} |f_i|^p )^{1/p}.
Real mu_norm(const SpectrumSample& f, int k, Real p);

/// p-sum of mu_norm over k = 0..n.
Real ln_norm(const SpectrumSample& f);

struct EquivalenceReport {
  Real two_term = 0.0;
  Real full = 0.0;
  Real ratio = 0.0;
};

/// Compares the full L_n^p norm against the endpoint pair (k=0, k=n).
/// Contract: 1 <= ratio <= (n+1)^{1/p}.
EquivalenceReport equivalence_report(const SpectrumSample& f);

/// Hilbert-case inner product <f,g>_{L_n^2} = sum_k 2 pi int f conj(g) t^{2k} dt.
Complex ln_inner_product(const SpectrumSample& f, const SpectrumSample& g);

}  // namespace hsx

#endif
