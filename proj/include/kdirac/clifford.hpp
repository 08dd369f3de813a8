#pragma once

#include <vector>

#include "kdirac/sparse.hpp"

namespace kdirac {

/// Generators of the complexified Clifford algebra of R^m with the
/// positive-definite inner product: G_a G_b + G_b G_a = 2 delta_ab.
/// Spinor space dimension is 2^floor(m/2).
struct GammaRep {
  int m = 0;
  int dimS = 0;
  std::vector<SparseMat> gammas;  // m matrices of size dimS x dimS

  const SparseMat& gamma(int alpha) const;  // alpha in 1..m
};

/// Iterated tensor products of the 2x2 generators; entries in {0, +-1, +-i}.
/// Requires m >= 3.
GammaRep build_gamma(int m);

/// G_alpha * s, alpha in 1..m.
std::vector<GaussRat> act(const GammaRep& rep, int alpha, const std::vector<GaussRat>& s);

}  // namespace kdirac
