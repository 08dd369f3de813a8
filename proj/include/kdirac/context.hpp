#pragma once

#include <map>
#include <memory>
#include <mutex>

#include "kdirac/clifford.hpp"
#include "kdirac/nilframe.hpp"
#include "kdirac/wpoly.hpp"

namespace kdirac {

/// Shared workspace for one (n, k): the gamma representation plus memoized
/// homogeneous bases and per-degree matrices of the invariant fields and of
/// the stacked Dirac operator. Caches are guarded for concurrent use.
class Context {
public:
  explicit Context(const Params& p) : p_(p), rep_(build_gamma(p.n + 1)) {}

  const Params& params() const { return p_; }
  const GammaRep& rep() const { return rep_; }
  int dimS() const { return rep_.dimS; }

  const HomBasis& basis(int d) const;

  /// Matrix of the field from basis(d) to basis(d - shift).
  const SparseMat& field_matrix(const FieldId& f, int d) const;

  /// Stacked matrix of (D_1, ..., D_k): basis(d) -> k copies of basis(d-1).
  const SparseMat& dirac_matrix(int d) const;

  /// Kernel basis of dirac_matrix(d): coordinates of the weighted-homogeneous
  /// monogenic spinors of degree d.
  const std::vector<SparseVec>& monogenic_kernel(int d) const;

private:
  Params p_;
  GammaRep rep_;
  mutable std::mutex mu_;
  mutable std::map<int, std::unique_ptr<HomBasis>> bases_;
  mutable std::map<std::pair<FieldId, int>, std::unique_ptr<SparseMat>> field_mats_;
  mutable std::map<int, std::unique_ptr<SparseMat>> dirac_mats_;
  mutable std::map<int, std::unique_ptr<std::vector<SparseVec>>> kernels_;
};

/// D_i Psi = sum_alpha eps_alpha . L_{alpha i} Psi, i = 1..k.
std::vector<PolySpinor> apply_D(const PolySpinor& P, const Params& p, const GammaRep& rep);

/// Flat counterpart: E_i psi = sum_alpha eps_alpha . d/dx_{alpha i} psi.
std::vector<PolySpinor> apply_E(const PolySpinor& P, const Params& p, const GammaRep& rep);

/// eps_alpha acting on every coefficient of P.
PolySpinor clifford_mul(const GammaRep& rep, int alpha, const PolySpinor& P);

}  // namespace kdirac
