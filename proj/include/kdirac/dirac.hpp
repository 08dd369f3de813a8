#pragma once

#include "kdirac/context.hpp"
#include "kdirac/report.hpp"

namespace kdirac {

/// Subspace of the degree-`degree` homogeneous component, given by
/// independent coordinate vectors in the HomBasis layout.
struct Subspace {
  int degree = 0;
  std::vector<SparseVec> basis;

  int dim() const { return static_cast<int>(basis.size()); }
};

/// Permutation of {1..n} acting on the first-factor basis order.
struct Permutation {
  std::vector<int> sigma;  // sigma[r-1] in 1..n, a bijection

  static Permutation identity(int n);
  static Permutation reversal(int n);
  static Permutation from_list(const std::vector<int>& images);

  int operator()(int r) const { return sigma.at(r - 1); }
  int size() const { return static_cast<int>(sigma.size()); }
};

/// The ordered basis e_{J+1} (x) eps_{sigma(rho)} for p = nJ + rho <= nk,
/// followed by e_1 (x) eps_{n+1}, ..., e_k (x) eps_{n+1}. Position p in
/// 1..k(n+1) maps to the right-invariant field R_{alpha i}.
FieldId basis_order_field(const Params& p, const Permutation& sigma, int pos);
/// Position of e_r (x) eps_alpha in the ordered basis (identity sigma is
/// the convention used by the Spencer module).
int basis_order_position(const Params& p, const Permutation& sigma, int r, int alpha);

/// M_d: kernel of the stacked D_1..D_k on the degree-d component.
Subspace monogenic_basis(const Context& ctx, int d);

/// A^{(i)}_j[sigma]: monogenic spinors of degree i+1 killed by the first j
/// right-invariant fields of the ordered basis. j = 0 gives A^{(i)} itself.
Subspace filtration_subspace(const Context& ctx, int i, int j, const Permutation& sigma);

/// dim A^{(i)}_j[sigma] for j = 0..k(n+1).
std::vector<long long> filtration_dims(const Context& ctx, int i, const Permutation& sigma);

/// Exactness of 0 -> A^{(i+1)}_j -> A^{(i+1)}_{j-1} -> A^{(i)}_{j-1} -> 0,
/// including the filtration-compatibility containment of the image.
Check verify_ses(const Context& ctx, int i, int j, const Permutation& sigma);

/// Vanishing d/dy_{st} f = 0 for f in A^{(i+1)}_{nr} and s <= r < t.
Check verify_lemma_dy(const Context& ctx, int i, int r);

struct CartanTest {
  long long lhs = 0;  // dim A^{(i+1)}
  long long rhs = 0;  // sum_j dim A^{(i)}_j
  bool equal() const { return lhs == rhs; }
};

CartanTest cartan_test(const Context& ctx, int i, const Permutation& sigma);

/// Flat analogues on y-independent polynomials with the operator E and the
/// coordinate fields in the same basis order.
long long flat_monogenic_dim(const Context& ctx, int d);
/// Kernel of the stacked flat operator on y-independent degree-d spinors,
/// returned as polynomials.
std::vector<PolySpinor> flat_monogenic_polys(const Context& ctx, int d);
std::vector<long long> flat_filtration_dims(const Context& ctx, int d, const Permutation& sigma);
CartanTest flat_cartan_test(const Context& ctx, int i, const Permutation& sigma);

/// Re-verify D P = 0 for every basis vector of a computed subspace.
bool recheck_monogenic(const Context& ctx, const Subspace& s);

}  // namespace kdirac
