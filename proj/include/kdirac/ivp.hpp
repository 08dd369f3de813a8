#pragma once

#include "kdirac/context.hpp"
#include "kdirac/dirac.hpp"

namespace kdirac {

/// Initial datum on the slice: a spinor-valued polynomial in the nk
/// variables x_{alpha i}, alpha <= n, only. Ordinary degree equals weighted
/// degree there.
struct SliceFunction {
  PolySpinor poly;

  /// Validates that P involves no x_{n+1,i} and no y_{rs}.
  static SliceFunction from_poly(const Params& p, const PolySpinor& P);

  friend bool operator==(const SliceFunction& a, const SliceFunction& b) {
    return a.poly == b.poly;
  }
};

/// Evaluates P on the initial-data slice by substituting x_{n+1,i} = 0 and
/// y_{rs} = (1/2) sum_{alpha <= n} x_{alpha r} x_{alpha s}. This is the zero
/// set of the bottom-block coordinates y_{rs} - (1/2)(X^T X)_{rs} of the
/// plane chart, not the naive set {y = 0}: the naive slice admits nonzero
/// monogenic polynomials vanishing on it (first at degree 3 for n = k = 2),
/// so restriction to it is not injective, while on this slice the
/// restriction of the degree-d monogenic kernel is bijective at every
/// tested degree and shape. Weighted homogeneity of degree d becomes
/// ordinary homogeneity of degree d on the slice.
SliceFunction restrict_to_slice(const PolySpinor& P, const Params& p);

/// Solver for the unique monogenic extension at one degree: restriction of
/// the monogenic kernel to the slice is square and invertible, and the
/// inverse is computed once so repeated extensions are a matrix apply.
class Extender {
public:
  Extender(const Context& ctx, int d);

  int degree() const { return d_; }
  /// The unique degree-d monogenic spinor restricting to psi. Re-verifies
  /// D Psi = 0 and the restriction exactly; a failure of either (or a
  /// non-square/singular restriction in the constructor) throws
  /// std::logic_error since it contradicts the unique-extension property
  /// the solver is built on.
  PolySpinor extend(const SliceFunction& psi) const;

private:
  const Context* ctx_;
  int d_;
  std::vector<int> slice_monos_;  // indices into basis(d).monomials
  SparseMat inv_;                 // inverse of the restriction matrix
};

/// One-shot convenience wrapper around Extender.
PolySpinor extend(const Context& ctx, const SliceFunction& psi, int d);

/// The restriction matrix on the degree-d monogenic kernel has zero kernel.
bool verify_uniqueness(const Context& ctx, int d);

/// Residuals of the flat compatibility system: residual[i][j] =
/// (F_i F_j - F_j F_i) psi with F_i = sum_{alpha <= n} eps_alpha d/dx_{alpha i}.
/// Zero on restrictions of flat monogenic functions.
std::vector<std::vector<PolySpinor>> flat_compatibility(const Context& ctx,
                                                        const SliceFunction& psi);

/// D and the flat operator agree term-by-term on y-independent input.
bool pullback_consistency(const Context& ctx, const PolySpinor& psi);

/// Measured dimension of the image of slice restriction on the flat
/// monogenic functions of degree d; no closed form is asserted.
long long flat_restriction_image_dim(const Context& ctx, int d);

}  // namespace kdirac
