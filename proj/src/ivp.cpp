#include "kdirac/ivp.hpp"

#include <algorithm>

namespace kdirac {

namespace {

bool on_slice(const Params& p, const Monomial& m) {
  for (int e : m.yexp)
    if (e != 0) return false;
  for (int i = 1; i <= p.k; ++i)
    if (m.xexp[p.xindex(p.n + 1, i)] != 0) return false;
  return true;
}

std::vector<int> slice_monomials(const Params& p, const HomBasis& B) {
  std::vector<int> out;
  for (int t = 0; t < static_cast<int>(B.monomials.size()); ++t)
    if (on_slice(p, B.monomials[t])) out.push_back(t);
  return out;
}

// Coordinates of a slice polynomial in the slice sub-basis of B.
std::vector<GaussRat> slice_coords(const Params& p, const HomBasis& B,
                                   const std::vector<int>& monos, const PolySpinor& P) {
  std::vector<GaussRat> full = coords_in_basis(P, B);
  std::vector<GaussRat> v(monos.size() * B.dimS);
  for (size_t t = 0; t < monos.size(); ++t)
    for (int s = 0; s < B.dimS; ++s) {
      int fidx = monos[t] * B.dimS + s;
      v[t * B.dimS + s] = full[fidx];
      full[fidx] = GaussRat();
    }
  for (const auto& c : full)
    if (!c.is_zero()) throw std::invalid_argument("slice_coords: input leaves the slice");
  return v;
}

// Columns of the slice-restriction matrix on the degree-d monogenic kernel,
// in the slice sub-basis coordinates of basis(d).
std::vector<SparseVec> restriction_columns(const Context& ctx, int d,
                                           const std::vector<int>& monos) {
  const Params& p = ctx.params();
  const HomBasis& B = ctx.basis(d);
  std::vector<SparseVec> cols;
  for (const auto& v : ctx.monogenic_kernel(d)) {
    PolySpinor P = from_coords(densify(v, B.size()), B);
    cols.push_back(sparsify(slice_coords(p, B, monos, restrict_to_slice(P, p).poly)));
  }
  return cols;
}

}  // namespace

SliceFunction SliceFunction::from_poly(const Params& p, const PolySpinor& P) {
  for (const auto& comp : P.comp)
    for (const auto& [m, c] : comp)
      if (!on_slice(p, m))
        throw std::invalid_argument("SliceFunction: depends on x_{n+1,*} or y");
  return SliceFunction{P};
}

SliceFunction restrict_to_slice(const PolySpinor& P, const Params& p) {
  const GaussRat half(1, 2);
  PolySpinor out(P.dimS());
  for (int s = 0; s < P.dimS(); ++s)
    for (const auto& [m, c] : P.comp[s]) {
      bool keep = true;
      for (int i = 1; i <= p.k && keep; ++i) keep = m.xexp[p.xindex(p.n + 1, i)] == 0;
      if (!keep) continue;
      // expand each y_{rs} factor into (1/2) sum_alpha x_{alpha r} x_{alpha s}
      std::vector<std::pair<Monomial, GaussRat>> terms{{m, c}};
      for (int r = 1; r <= p.k; ++r)
        for (int t = r + 1; t <= p.k; ++t)
          for (int rep = 0; rep < m.yexp[p.yindex(r, t)]; ++rep) {
            std::vector<std::pair<Monomial, GaussRat>> next;
            for (const auto& [mm, cc] : terms) {
              Monomial base = mm;
              base.yexp[p.yindex(r, t)] -= 1;
              for (int alpha = 1; alpha <= p.n; ++alpha) {
                Monomial sub = base;
                sub.xexp[p.xindex(alpha, r)] += 1;
                sub.xexp[p.xindex(alpha, t)] += 1;
                next.emplace_back(sub, cc * half);
              }
            }
            terms = std::move(next);
          }
      for (const auto& [mm, cc] : terms) out.add_term(s, mm, cc);
    }
  return SliceFunction{out};
}

Extender::Extender(const Context& ctx, int d) : ctx_(&ctx), d_(d) {
  const Params& p = ctx.params();
  const HomBasis& B = ctx.basis(d);
  slice_monos_ = slice_monomials(p, B);
  const auto& ker = ctx.monogenic_kernel(d);
  int rows = static_cast<int>(slice_monos_.size()) * ctx.dimS();
  if (rows != static_cast<int>(ker.size()))
    throw std::logic_error("Extender: restriction matrix is not square");

  std::vector<SparseVec> cols = restriction_columns(ctx, d, slice_monos_);
  try {
    inv_ = inverse(SparseMat::from_columns(rows, cols));
  } catch (const std::invalid_argument&) {
    throw std::logic_error("Extender: restriction matrix is singular");
  }
}

PolySpinor Extender::extend(const SliceFunction& psi) const {
  const Params& p = ctx_->params();
  const HomBasis& B = ctx_->basis(d_);
  if (!psi.poly.is_homogeneous(d_))
    throw std::invalid_argument("extend: datum is not homogeneous of the requested degree");
  std::vector<GaussRat> rhs = slice_coords(p, B, slice_monos_, psi.poly);
  std::vector<GaussRat> x = inv_.apply(rhs);
  PolySpinor out(ctx_->dimS());
  const auto& ker = ctx_->monogenic_kernel(d_);
  std::vector<GaussRat> full(B.size());
  for (size_t j = 0; j < ker.size(); ++j) {
    if (x[j].is_zero()) continue;
    for (const auto& [idx, c] : ker[j]) full[idx] += x[j] * c;
  }
  out = from_coords(full, B);
  for (const auto& comp : apply_D(out, p, ctx_->rep()))
    if (!comp.is_zero()) throw std::logic_error("extend: result is not monogenic");
  if (!(restrict_to_slice(out, p) == psi))
    throw std::logic_error("extend: restriction mismatch");
  return out;
}

PolySpinor extend(const Context& ctx, const SliceFunction& psi, int d) {
  return Extender(ctx, d).extend(psi);
}

bool verify_uniqueness(const Context& ctx, int d) {
  const Params& p = ctx.params();
  const HomBasis& B = ctx.basis(d);
  std::vector<int> monos = slice_monomials(p, B);
  std::vector<SparseVec> cols = restriction_columns(ctx, d, monos);
  int rows = static_cast<int>(monos.size()) * ctx.dimS();
  return rank(SparseMat::from_columns(rows, cols)) == static_cast<int>(cols.size());
}

std::vector<std::vector<PolySpinor>> flat_compatibility(const Context& ctx,
                                                        const SliceFunction& psi) {
  const Params& p = ctx.params();
  auto slice_op = [&](const PolySpinor& P, int i) {
    PolySpinor out(ctx.dimS());
    for (int alpha = 1; alpha <= p.n; ++alpha)
      out += clifford_mul(ctx.rep(), alpha, diff_x(P, p, alpha, i));
    return out;
  };
  std::vector<std::vector<PolySpinor>> res(
      p.k, std::vector<PolySpinor>(p.k, PolySpinor(ctx.dimS())));
  for (int i = 1; i <= p.k; ++i)
    for (int j = 1; j <= p.k; ++j)
      res[i - 1][j - 1] =
          slice_op(slice_op(psi.poly, j), i) - slice_op(slice_op(psi.poly, i), j);
  return res;
}

bool pullback_consistency(const Context& ctx, const PolySpinor& psi) {
  const Params& p = ctx.params();
  for (const auto& comp : psi.comp)
    for (const auto& [m, c] : comp)
      for (int e : m.yexp)
        if (e != 0) throw std::invalid_argument("pullback_consistency: input depends on y");
  auto d = apply_D(psi, p, ctx.rep());
  auto e = apply_E(psi, p, ctx.rep());
  for (int i = 0; i < p.k; ++i)
    if (!(d[i] == e[i])) return false;
  return true;
}

long long flat_restriction_image_dim(const Context& ctx, int d) {
  const Params& p = ctx.params();
  const HomBasis& B = ctx.basis(d);
  std::vector<int> monos = slice_monomials(p, B);
  std::vector<SparseVec> cols;
  for (const PolySpinor& P : flat_monogenic_polys(ctx, d))
    cols.push_back(sparsify(slice_coords(p, B, monos, restrict_to_slice(P, p).poly)));
  int rows = static_cast<int>(monos.size()) * ctx.dimS();
  return rank(SparseMat::from_columns(rows, cols));
}

}  // namespace kdirac
