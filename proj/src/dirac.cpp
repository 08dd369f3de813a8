#include "kdirac/dirac.hpp"

#include <algorithm>

namespace kdirac {

Permutation Permutation::identity(int n) {
  Permutation s;
  s.sigma.resize(n);
  for (int r = 1; r <= n; ++r) s.sigma[r - 1] = r;
  return s;
}

Permutation Permutation::reversal(int n) {
  Permutation s;
  s.sigma.resize(n);
  for (int r = 1; r <= n; ++r) s.sigma[r - 1] = n + 1 - r;
  return s;
}

Permutation Permutation::from_list(const std::vector<int>& images) {
  Permutation s;
  s.sigma = images;
  std::vector<bool> seen(images.size(), false);
  for (int v : images) {
    if (v < 1 || v > static_cast<int>(images.size()) || seen[v - 1])
      throw std::invalid_argument("Permutation: not a bijection of 1..n");
    seen[v - 1] = true;
  }
  return s;
}

FieldId basis_order_field(const Params& p, const Permutation& sigma, int pos) {
  if (sigma.size() != p.n) throw std::invalid_argument("basis_order_field: sigma size != n");
  if (pos < 1 || pos > p.k * (p.n + 1)) throw std::out_of_range("basis_order_field: position");
  if (pos <= p.n * p.k) {
    int J = (pos - 1) / p.n;
    int rho = (pos - 1) % p.n + 1;
    return FieldId::R(sigma(rho), J + 1);  // e_{J+1} (x) eps_{sigma(rho)}
  }
  return FieldId::R(p.n + 1, pos - p.n * p.k);  // e_i (x) eps_{n+1}
}

int basis_order_position(const Params& p, const Permutation& sigma, int r, int alpha) {
  if (alpha == p.n + 1) return p.n * p.k + r;
  for (int rho = 1; rho <= p.n; ++rho)
    if (sigma(rho) == alpha) return p.n * (r - 1) + rho;
  throw std::out_of_range("basis_order_position: bad alpha");
}

Subspace monogenic_basis(const Context& ctx, int d) {
  return Subspace{d, ctx.monogenic_kernel(d)};
}

namespace {

SparseMat columns_matrix(int rows, const std::vector<SparseVec>& cols) {
  return SparseMat::from_columns(rows, cols);
}

// Stacked matrices of the first j ordered-basis fields at degree d.
SparseMat stacked_r(const Context& ctx, int d, int j, const Permutation& sigma) {
  std::vector<SparseMat> blocks;
  for (int pos = 1; pos <= j; ++pos)
    blocks.push_back(ctx.field_matrix(basis_order_field(ctx.params(), sigma, pos), d));
  return SparseMat::vstack(blocks);
}

}  // namespace

Subspace filtration_subspace(const Context& ctx, int i, int j, const Permutation& sigma) {
  int d = i + 1;
  const auto& ker = ctx.monogenic_kernel(d);
  if (j == 0) return Subspace{d, ker};
  int ambient = ctx.basis(d).size();
  SparseMat K = columns_matrix(ambient, ker);
  SparseMat M = stacked_r(ctx, d, j, sigma) * K;
  Subspace out{d, {}};
  for (const auto& c : kernel_basis(M)) out.basis.push_back(K.apply(c));
  return out;
}

std::vector<long long> filtration_dims(const Context& ctx, int i, const Permutation& sigma) {
  int top = ctx.params().k * (ctx.params().n + 1);
  std::vector<long long> dims;
  dims.reserve(top + 1);
  for (int j = 0; j <= top; ++j)
    dims.push_back(filtration_subspace(ctx, i, j, sigma).dim());
  return dims;
}

Check verify_ses(const Context& ctx, int i, int j, const Permutation& sigma) {
  std::string name = "ses(i=" + std::to_string(i) + ",j=" + std::to_string(j) + ")";
  Subspace upper = filtration_subspace(ctx, i + 1, j - 1, sigma);
  Subspace upper_next = filtration_subspace(ctx, i + 1, j, sigma);
  Subspace lower = filtration_subspace(ctx, i, j - 1, sigma);
  const SparseMat& Rj =
      ctx.field_matrix(basis_order_field(ctx.params(), sigma, j), i + 2);

  int ambient_lower = ctx.basis(i + 1).size();
  std::vector<SparseVec> images;
  for (const auto& v : upper.basis) images.push_back(Rj.apply(v));
  SparseMat img = columns_matrix(ambient_lower, images);
  SparseMat low = columns_matrix(ambient_lower, lower.basis);

  int rank_img = rank(img);
  int rank_low = rank(low);
  std::vector<SparseVec> joint = lower.basis;
  joint.insert(joint.end(), images.begin(), images.end());
  int rank_joint = rank(columns_matrix(ambient_lower, joint));

  bool contained = rank_joint == rank_low;          // image inside A^{(i)}_{j-1}
  bool surjective = rank_img == lower.dim();        // R_j onto
  bool kernel_match = upper.dim() - rank_img == upper_next.dim();

  nlohmann::json actual = {{"image_rank", rank_img},
                           {"target_dim", lower.dim()},
                           {"kernel_dim", upper.dim() - rank_img},
                           {"next_filtration_dim", upper_next.dim()},
                           {"image_contained", contained}};
  nlohmann::json expected = {{"image_rank", lower.dim()},
                             {"target_dim", lower.dim()},
                             {"kernel_dim", upper_next.dim()},
                             {"next_filtration_dim", upper_next.dim()},
                             {"image_contained", true}};
  if (contained && surjective && kernel_match) return Check::ok(name, expected, actual);
  return Check::fail(name, expected, actual);
}

Check verify_lemma_dy(const Context& ctx, int i, int r) {
  const Params& p = ctx.params();
  if (r < 1 || r > p.k - 1) throw std::invalid_argument("verify_lemma_dy: need 1 <= r <= k-1");
  std::string name = "lemma-dy(i=" + std::to_string(i) + ",r=" + std::to_string(r) + ")";
  Permutation id = Permutation::identity(p.n);
  Subspace f = filtration_subspace(ctx, i + 1, p.n * r, id);
  const HomBasis& B = ctx.basis(f.degree);
  for (int idx = 0; idx < f.dim(); ++idx) {
    PolySpinor poly = from_coords(densify(f.basis[idx], B.size()), B);
    for (int s = 1; s <= r; ++s)
      for (int t = s + 1; t <= p.k; ++t)
        if (!apply_dy(poly, p, s, t).is_zero())
          return Check::fail(name, "dy annihilates the filtration step", "nonzero derivative",
                             {{"basis_index", idx}, {"s", s}, {"t", t}});
  }
  return Check::ok(name, "dy annihilates the filtration step",
                   {{"basis_dim", f.dim()}});
}

CartanTest cartan_test(const Context& ctx, int i, const Permutation& sigma) {
  CartanTest t;
  t.lhs = monogenic_basis(ctx, i + 2).dim();
  for (long long d : filtration_dims(ctx, i, sigma)) t.rhs += d;
  return t;
}

namespace {

// Basis of y-independent spinors of ordinary degree d: the x-monomials of
// HomBasis(d) in the same canonical order.
struct FlatBasis {
  const HomBasis* full;
  std::vector<int> mono_ids;  // indices into full->monomials

  FlatBasis(const Context& ctx, int d) : full(&ctx.basis(d)) {
    for (int t = 0; t < static_cast<int>(full->monomials.size()); ++t) {
      const Monomial& m = full->monomials[t];
      if (std::all_of(m.yexp.begin(), m.yexp.end(), [](int e) { return e == 0; }))
        mono_ids.push_back(t);
    }
  }
  int size() const { return static_cast<int>(mono_ids.size()) * full->dimS; }
  PolySpinor element(int idx) const {
    return full->element(mono_ids[idx / full->dimS] * full->dimS + idx % full->dimS);
  }
  std::vector<GaussRat> coords(const PolySpinor& P) const {
    std::vector<GaussRat> v(size());
    std::vector<GaussRat> fullv = coords_in_basis(P, *full);
    for (int idx = 0; idx < size(); ++idx) {
      int fidx = mono_ids[idx / full->dimS] * full->dimS + idx % full->dimS;
      v[idx] = fullv[fidx];
      fullv[fidx] = GaussRat();
    }
    for (const auto& c : fullv)
      if (!c.is_zero()) throw std::invalid_argument("FlatBasis: polynomial depends on y");
    return v;
  }
};

// Stacked flat operator (E_1..E_k) plus optionally the first j coordinate
// fields of the ordered basis; kernel = flat filtration step.
std::vector<SparseVec> flat_filtration_kernel(const Context& ctx, int d, int j,
                                              const Permutation& sigma) {
  const Params& p = ctx.params();
  FlatBasis src(ctx, d);
  FlatBasis dst(ctx, d > 0 ? d - 1 : 0);
  int block = d > 0 ? dst.size() : 0;
  std::vector<SparseVec> cols;
  for (int c = 0; c < src.size(); ++c) {
    PolySpinor P = src.element(c);
    SparseVec col;
    if (block > 0) {
      std::vector<PolySpinor> e = apply_E(P, p, ctx.rep());
      for (int i = 0; i < p.k; ++i) {
        SparseVec part = sparsify(dst.coords(e[i]));
        for (auto& [r, v] : part) col.emplace_back(r + i * block, v);
      }
      for (int pos = 1; pos <= j; ++pos) {
        FieldId f = basis_order_field(p, sigma, pos);
        SparseVec part = sparsify(dst.coords(diff_x(P, p, f.a, f.b)));
        for (auto& [r, v] : part) col.emplace_back(r + (p.k + pos - 1) * block, v);
      }
    }
    cols.push_back(std::move(col));
  }
  return kernel_basis(SparseMat::from_columns((p.k + j) * block, cols));
}

}  // namespace

long long flat_monogenic_dim(const Context& ctx, int d) {
  return static_cast<long long>(
      flat_filtration_kernel(ctx, d, 0, Permutation::identity(ctx.params().n)).size());
}

std::vector<PolySpinor> flat_monogenic_polys(const Context& ctx, int d) {
  FlatBasis B(ctx, d);
  std::vector<PolySpinor> out;
  for (const auto& v : flat_filtration_kernel(ctx, d, 0, Permutation::identity(ctx.params().n))) {
    PolySpinor P(ctx.dimS());
    for (const auto& [idx, c] : v) {
      PolySpinor e = B.element(idx);
      P += e.scaled(c);
    }
    out.push_back(std::move(P));
  }
  return out;
}

std::vector<long long> flat_filtration_dims(const Context& ctx, int d, const Permutation& sigma) {
  int top = ctx.params().k * (ctx.params().n + 1);
  std::vector<long long> dims;
  for (int j = 0; j <= top; ++j)
    dims.push_back(static_cast<long long>(flat_filtration_kernel(ctx, d, j, sigma).size()));
  return dims;
}

CartanTest flat_cartan_test(const Context& ctx, int i, const Permutation& sigma) {
  CartanTest t;
  t.lhs = flat_monogenic_dim(ctx, i + 1);
  for (long long d : flat_filtration_dims(ctx, i, sigma)) t.rhs += d;
  return t;
}

bool recheck_monogenic(const Context& ctx, const Subspace& s) {
  const SparseMat& D = ctx.dirac_matrix(s.degree);
  for (const auto& v : s.basis)
    if (!D.apply(v).empty()) return false;
  return true;
}

}  // namespace kdirac
