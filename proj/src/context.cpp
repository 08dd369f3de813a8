#include "kdirac/context.hpp"

namespace kdirac {

PolySpinor clifford_mul(const GammaRep& rep, int alpha, const PolySpinor& P) {
  const SparseMat& G = rep.gamma(alpha);
  PolySpinor out(P.dimS());
  for (int s = 0; s < P.dimS(); ++s)
    for (const auto& [m, c] : P.comp[s]) {
      // column s of G scaled by the coefficient
      for (const auto& e : G.entries())
        if (e.col == s) out.add_term(e.row, m, e.val * c);
    }
  return out;
}

std::vector<PolySpinor> apply_D(const PolySpinor& P, const Params& p, const GammaRep& rep) {
  std::vector<PolySpinor> out;
  out.reserve(p.k);
  for (int i = 1; i <= p.k; ++i) {
    PolySpinor comp(P.dimS());
    for (int alpha = 1; alpha <= p.n + 1; ++alpha)
      comp += clifford_mul(rep, alpha, apply_L(P, p, alpha, i));
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<PolySpinor> apply_E(const PolySpinor& P, const Params& p, const GammaRep& rep) {
  std::vector<PolySpinor> out;
  out.reserve(p.k);
  for (int i = 1; i <= p.k; ++i) {
    PolySpinor comp(P.dimS());
    for (int alpha = 1; alpha <= p.n + 1; ++alpha)
      comp += clifford_mul(rep, alpha, diff_x(P, p, alpha, i));
    out.push_back(std::move(comp));
  }
  return out;
}

const HomBasis& Context::basis(int d) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto& slot = bases_[d];
  if (!slot) slot = std::make_unique<HomBasis>(p_, d, rep_.dimS);
  return *slot;
}

const SparseMat& Context::field_matrix(const FieldId& f, int d) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = field_mats_.find({f, d});
    if (it != field_mats_.end()) return *it->second;
  }
  const HomBasis& src = basis(d);
  const HomBasis& dst = basis(std::max(d - f.degree_shift(), 0));
  int out_rows = d >= f.degree_shift() ? dst.size() : 0;
  std::vector<SparseVec> cols;
  cols.reserve(src.size());
  for (int j = 0; j < src.size(); ++j) {
    PolySpinor img = apply_field(src.element(j), p_, f);
    if (out_rows == 0 || img.is_zero())
      cols.emplace_back();
    else
      cols.push_back(sparsify(coords_in_basis(img, dst)));
  }
  auto mat = std::make_unique<SparseMat>(SparseMat::from_columns(out_rows, cols));
  std::lock_guard<std::mutex> lock(mu_);
  auto [it, inserted] = field_mats_.try_emplace({f, d}, std::move(mat));
  return *it->second;
}

const SparseMat& Context::dirac_matrix(int d) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = dirac_mats_.find(d);
    if (it != dirac_mats_.end()) return *it->second;
  }
  const HomBasis& src = basis(d);
  int block = d >= 1 ? basis(d - 1).size() : 0;
  std::vector<SparseVec> cols;
  cols.reserve(src.size());
  const HomBasis* dst = d >= 1 ? &basis(d - 1) : nullptr;
  for (int j = 0; j < src.size(); ++j) {
    std::vector<PolySpinor> img = apply_D(src.element(j), p_, rep_);
    SparseVec col;
    for (int i = 0; i < p_.k; ++i) {
      if (!dst || img[i].is_zero()) continue;
      SparseVec part = sparsify(coords_in_basis(img[i], *dst));
      for (auto& [r, v] : part) col.emplace_back(r + i * block, v);
    }
    cols.push_back(std::move(col));
  }
  auto mat = std::make_unique<SparseMat>(SparseMat::from_columns(p_.k * block, cols));
  std::lock_guard<std::mutex> lock(mu_);
  auto [it, inserted] = dirac_mats_.try_emplace(d, std::move(mat));
  return *it->second;
}

const std::vector<SparseVec>& Context::monogenic_kernel(int d) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = kernels_.find(d);
    if (it != kernels_.end()) return *it->second;
  }
  auto ker = std::make_unique<std::vector<SparseVec>>(kernel_basis(dirac_matrix(d)));
  std::lock_guard<std::mutex> lock(mu_);
  auto [it, inserted] = kernels_.try_emplace(d, std::move(ker));
  return *it->second;
}

}  // namespace kdirac
