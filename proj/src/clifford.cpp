#include "kdirac/clifford.hpp"

namespace kdirac {

namespace {

// 2x2 blocks of the standard construction.
SparseMat pauli_x() {
  return SparseMat::from_triplets(2, 2, {{0, 1, GaussRat(1)}, {1, 0, GaussRat(1)}});
}
SparseMat pauli_y() {
  return SparseMat::from_triplets(2, 2, {{0, 1, -GaussRat::i()}, {1, 0, GaussRat::i()}});
}
SparseMat pauli_z() {
  return SparseMat::from_triplets(2, 2, {{0, 0, GaussRat(1)}, {1, 1, GaussRat(-1)}});
}

SparseMat kron(const SparseMat& a, const SparseMat& b) {
  std::vector<SparseMat::Entry> tr;
  for (const auto& ea : a.entries())
    for (const auto& eb : b.entries())
      tr.push_back({ea.row * b.rows() + eb.row, ea.col * b.cols() + eb.col, ea.val * eb.val});
  return SparseMat::from_triplets(a.rows() * b.rows(), a.cols() * b.cols(), std::move(tr));
}

// sz^{(j-1)} (x) g (x) 1^{(q-j)}
SparseMat chain(int q, int j, const SparseMat& g) {
  SparseMat out = SparseMat::identity(1);
  for (int t = 1; t < j; ++t) out = kron(out, pauli_z());
  out = kron(out, g);
  for (int t = j + 1; t <= q; ++t) out = kron(out, SparseMat::identity(2));
  return out;
}

}  // namespace

const SparseMat& GammaRep::gamma(int alpha) const {
  if (alpha < 1 || alpha > m) throw std::out_of_range("gamma index");
  return gammas[alpha - 1];
}

GammaRep build_gamma(int m) {
  if (m < 3) throw std::invalid_argument("build_gamma: need m >= 3");
  int q = m / 2;
  GammaRep rep;
  rep.m = m;
  rep.dimS = 1 << q;
  for (int j = 1; j <= q; ++j) {
    rep.gammas.push_back(chain(q, j, pauli_x()));
    rep.gammas.push_back(chain(q, j, pauli_y()));
  }
  if (m % 2 == 1) {
    SparseMat tail = SparseMat::identity(1);  // sz^{(x) q}
    for (int t = 0; t < q; ++t) tail = kron(tail, pauli_z());
    rep.gammas.push_back(std::move(tail));
  }
  // keep generator order G_1..G_m as produced: x,y pairs then the odd tail
  return rep;
}

std::vector<GaussRat> act(const GammaRep& rep, int alpha, const std::vector<GaussRat>& s) {
  return rep.gamma(alpha).apply(s);
}

}  // namespace kdirac
