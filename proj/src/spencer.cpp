#include "kdirac/spencer.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace kdirac {

namespace {

// One wedge factor before canonicalization. All legs have form degree 1.
struct Leg {
  bool is_e = false;
  int pos = 0;   // pi position, when !is_e
  int r = 0, s = 0;  // e pair, when is_e

  friend bool operator<(const Leg& x, const Leg& y) {
    if (x.is_e != y.is_e) return y.is_e;
    if (x.is_e) return std::tie(x.r, x.s) < std::tie(y.r, y.s);
    return x.pos < y.pos;
  }
  friend bool operator==(const Leg& x, const Leg& y) {
    return x.is_e == y.is_e && x.pos == y.pos && x.r == y.r && x.s == y.s;
  }
};

std::vector<Leg> legs_of(const FormBasisElem& e) {
  std::vector<Leg> out;
  for (int p : e.piSet) out.push_back({false, p, 0, 0});
  for (auto [r, s] : e.eSet) out.push_back({true, 0, r, s});
  return out;
}

// Sorts the odd legs into canonical order; returns the permutation sign,
// or 0 when a leg repeats.
int canonicalize(std::vector<Leg>& legs) {
  int sign = 1;
  for (size_t i = 1; i < legs.size(); ++i)
    for (size_t j = i; j > 0 && legs[j] < legs[j - 1]; --j) {
      std::swap(legs[j], legs[j - 1]);
      sign = -sign;
    }
  for (size_t i = 1; i < legs.size(); ++i)
    if (legs[i] == legs[i - 1]) return 0;
  return sign;
}

FormBasisElem elem_of(const std::vector<Leg>& legs) {
  FormBasisElem e;
  for (const Leg& l : legs) {
    if (l.is_e)
      e.eSet.push_back({l.r, l.s});
    else
      e.piSet.push_back(l.pos);
  }
  return e;
}

void add_legs(SpencerForm& out, std::vector<Leg> legs, const PolySpinor& c, int scale) {
  int sign = canonicalize(legs);
  if (sign == 0 || c.is_zero()) return;
  out.add_term(elem_of(legs), c.scaled(GaussRat(sign * scale)));
}

void check_homogeneous(const SpencerForm& F) {
  int total = -1;
  for (const auto& [e, c] : F.terms) {
    int m = c.wdeg();
    if (m < 0) throw std::invalid_argument("SpencerForm: non-homogeneous coefficient");
    int t = e.a() + 2 * e.b() + m;
    if (total >= 0 && t != total)
      throw std::invalid_argument("SpencerForm: mixed total grading");
    total = t;
  }
}

std::vector<std::pair<int, int>> all_pairs(int k) {
  std::vector<std::pair<int, int>> out;
  for (int r = 1; r <= k; ++r)
    for (int s = r + 1; s <= k; ++s) out.push_back({r, s});
  return out;
}

// Lexicographic a-subsets of items, passed to cb as a value list.
template <typename T, typename F>
void for_each_combo(const std::vector<T>& items, int a, F cb) {
  int n = static_cast<int>(items.size());
  if (a < 0 || a > n) return;
  std::vector<int> idx(a);
  for (int i = 0; i < a; ++i) idx[i] = i;
  while (true) {
    std::vector<T> pick;
    for (int i : idx) pick.push_back(items[i]);
    cb(pick);
    int t = a - 1;
    while (t >= 0 && idx[t] == n - a + t) --t;
    if (t < 0) break;
    ++idx[t];
    for (int j = t + 1; j < a; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

void SpencerForm::add_term(const FormBasisElem& e, const PolySpinor& c) {
  if (c.is_zero()) return;
  auto it = terms.find(e);
  if (it == terms.end()) {
    terms.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms.erase(it);
}

SpencerForm& SpencerForm::operator+=(const SpencerForm& o) {
  for (const auto& [e, c] : o.terms) add_term(e, c);
  return *this;
}

SpencerForm& SpencerForm::operator-=(const SpencerForm& o) {
  for (const auto& [e, c] : o.terms) add_term(e, c.scaled(GaussRat(-1)));
  return *this;
}

SpencerForm delta(const SpencerForm& F, const Params& p) {
  check_homogeneous(F);
  Permutation id = Permutation::identity(p.n);
  SpencerForm out;
  for (const auto& [elem, f] : F.terms) {
    std::vector<Leg> base = legs_of(elem);
    int N = static_cast<int>(base.size());
    // structure part: delta on one e-leg at a time
    for (int t = 0; t < N; ++t) {
      if (!base[t].is_e) continue;
      int tsign = (t % 2 == 0) ? 1 : -1;
      for (int alpha = 1; alpha <= p.n + 1; ++alpha) {
        std::vector<Leg> legs = base;
        legs[t] = {false, basis_order_position(p, id, base[t].r, alpha), 0, 0};
        legs.insert(legs.begin() + t + 1,
                    Leg{false, basis_order_position(p, id, base[t].s, alpha), 0, 0});
        add_legs(out, std::move(legs), f, -tsign);
      }
    }
    // coefficient part, past all N odd legs
    int csign = (N % 2 == 0) ? 1 : -1;
    for (int l = 1; l <= p.k * (p.n + 1); ++l) {
      FieldId X = basis_order_field(p, id, l);
      PolySpinor g = apply_R(f, p, X.a, X.b);
      if (g.is_zero()) continue;
      std::vector<Leg> legs = base;
      legs.push_back({false, l, 0, 0});
      add_legs(out, std::move(legs), g, csign);
    }
    // The e-component of delta on coefficients carries the opposite sign:
    // with the brackets [R_{a r}, R_{a s}] = -dy_{rs} realized here, this is
    // the unique choice compatible with delta(e^{rs}) = -sum pi ^ pi,
    // delta^2 = 0 and the Cartan formula. It amounts to pairing e^{rs}
    // with -theta^{rs} of the right-invariant coframe.
    for (auto [r, s] : all_pairs(p.k)) {
      PolySpinor g = diff_y(f, p, r, s);
      if (g.is_zero()) continue;
      std::vector<Leg> legs = base;
      legs.push_back({true, 0, r, s});
      add_legs(out, std::move(legs), g, -csign);
    }
  }
  return out;
}

SpencerForm lie_derivative(const SpencerForm& F, const Params& p, const FieldId& X) {
  if (X.kind == FieldId::Kind::L)
    throw std::invalid_argument("lie_derivative: left-invariant fields not supported");
  SpencerForm out;
  for (const auto& [elem, f] : F.terms) {
    if (X.kind == FieldId::Kind::DY) {
      out.add_term(elem, diff_y(f, p, X.a, X.b));
      continue;
    }
    int alpha = X.a, i = X.b;
    Permutation id = Permutation::identity(p.n);
    std::vector<Leg> base = legs_of(elem);
    // even operator: no position signs on the leg terms
    for (size_t t = 0; t < base.size(); ++t) {
      if (!base[t].is_e) continue;
      int r = base[t].r, s = base[t].s;
      if (i == s) {
        std::vector<Leg> legs = base;
        legs[t] = {false, basis_order_position(p, id, r, alpha), 0, 0};
        add_legs(out, std::move(legs), f, 1);
      }
      if (i == r) {
        std::vector<Leg> legs = base;
        legs[t] = {false, basis_order_position(p, id, s, alpha), 0, 0};
        add_legs(out, std::move(legs), f, -1);
      }
    }
    out.add_term(elem, apply_R(f, p, alpha, i));
  }
  return out;
}

SpencerForm insert_g1(const SpencerForm& F, int pos) {
  SpencerForm out;
  for (const auto& [elem, f] : F.terms) {
    std::vector<Leg> base = legs_of(elem);
    for (size_t t = 0; t < base.size(); ++t) {
      if (base[t].is_e || base[t].pos != pos) continue;
      std::vector<Leg> legs = base;
      legs.erase(legs.begin() + t);
      add_legs(out, std::move(legs), f, t % 2 == 0 ? 1 : -1);
    }
  }
  return out;
}

SpencerForm insert_g2(const SpencerForm& F, int r, int s) {
  SpencerForm out;
  for (const auto& [elem, f] : F.terms) {
    std::vector<Leg> base = legs_of(elem);
    for (size_t t = 0; t < base.size(); ++t) {
      if (!base[t].is_e || base[t].r != r || base[t].s != s) continue;
      std::vector<Leg> legs = base;
      legs.erase(legs.begin() + t);
      // pairing e^{rs}(X) = -1, matching the coefficient sign in delta
      add_legs(out, std::move(legs), f, t % 2 == 0 ? -1 : 1);
    }
  }
  return out;
}

FormSpace::FormSpace(const Context& ctx, int r, int jet) : ctx_(&ctx), r_(r), jet_(jet) {
  const Params& p = ctx.params();
  std::vector<int> positions;
  for (int l = 1; l <= p.k * (p.n + 1); ++l) positions.push_back(l);
  auto pairs = all_pairs(p.k);
  for (int b = 0; b <= std::min<int>(r, p.ny()); ++b) {
    int a = r - b;
    if (a > p.nx() || jet - b < 0) continue;
    for_each_combo(positions, a, [&](const std::vector<int>& pi) {
      for_each_combo(pairs, b, [&](const std::vector<std::pair<int, int>>& es) {
        elems_.push_back(FormBasisElem{pi, es});
      });
    });
  }
  std::sort(elems_.begin(), elems_.end());
  dim_ = 0;
  for (const auto& e : elems_) {
    offsets_.push_back(dim_);
    dim_ += ctx.basis(jet_ - e.b()).size();
  }
}

int FormSpace::coeff_degree(int block) const { return jet_ - elems_[block].b(); }

SpencerForm FormSpace::basis_form(int idx) const {
  for (int blk = 0; blk < blocks(); ++blk) {
    const HomBasis& B = ctx_->basis(coeff_degree(blk));
    if (idx < offsets_[blk] + B.size()) {
      SpencerForm F;
      F.add_term(elems_[blk], B.element(idx - offsets_[blk]));
      return F;
    }
  }
  throw std::out_of_range("FormSpace::basis_form");
}

std::vector<GaussRat> FormSpace::coords(const SpencerForm& F) const {
  std::vector<GaussRat> v(dim_);
  for (const auto& [e, c] : F.terms) {
    auto it = std::lower_bound(elems_.begin(), elems_.end(), e);
    if (it == elems_.end() || !(*it == e))
      throw std::invalid_argument("FormSpace::coords: term outside the space");
    int blk = static_cast<int>(it - elems_.begin());
    auto cc = coords_in_basis(c, ctx_->basis(coeff_degree(blk)));
    for (size_t t = 0; t < cc.size(); ++t) v[offsets_[blk] + t] = cc[t];
  }
  return v;
}

SparseMat delta_matrix(const Context& ctx, int i, int r) {
  FormSpace src(ctx, r, i + 1 - r);
  FormSpace dst(ctx, r + 1, i - r);
  std::vector<SparseVec> cols;
  for (int idx = 0; idx < src.dim(); ++idx)
    cols.push_back(sparsify(dst.coords(delta(src.basis_form(idx), ctx.params()))));
  return SparseMat::from_columns(dst.dim(), std::move(cols));
}

bool verify_delta_squared(const Context& ctx, int a, int b, int m) {
  const Params& p = ctx.params();
  FormSpace shape(ctx, a + b, m + b);  // jet chosen so the (a, b) block has degree m
  for (int idx = 0; idx < shape.dim(); ++idx) {
    SpencerForm F = shape.basis_form(idx);
    const FormBasisElem& e = F.terms.begin()->first;
    if (e.a() != a || e.b() != b) continue;
    if (!delta(delta(F, p), p).is_zero()) return false;
  }
  return true;
}

bool verify_cartan_formula(const Context& ctx, int samples, unsigned long long seed) {
  const Params& p = ctx.params();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
  Permutation id = Permutation::identity(p.n);
  for (int trial = 0; trial < samples; ++trial) {
    int r = static_cast<int>(rng() % 3);
    int m = static_cast<int>(rng() % 4);
    FormSpace shape(ctx, r, m + r);
    if (shape.dim() == 0) continue;
    SpencerForm F;
    for (int pick = 0; pick < 6; ++pick) {
      SpencerForm basis = shape.basis_form(static_cast<int>(rng() % shape.dim()));
      for (auto& [e, c] : basis.terms)
        F.add_term(e, c.scaled(GaussRat(num(rng), den(rng))));
    }
    for (int l = 1; l <= p.k * (p.n + 1); ++l) {
      FieldId X = basis_order_field(p, id, l);
      SpencerForm lhs = lie_derivative(F, p, X);
      SpencerForm rhs = insert_g1(delta(F, p), l) + delta(insert_g1(F, l), p);
      if (!(lhs == rhs)) return false;
    }
    for (auto [r2, s2] : all_pairs(p.k)) {
      SpencerForm lhs = lie_derivative(F, p, FieldId::DY(r2, s2));
      SpencerForm rhs = insert_g2(delta(F, p), r2, s2) + delta(insert_g2(F, r2, s2), p);
      if (!(lhs == rhs)) return false;
    }
  }
  return true;
}

Check verify_exactness_at(const Context& ctx, int i, int position) {
  std::ostringstream name;
  name << "exactness i=" << i << " position=" << position;
  int top = i + 1;
  FormSpace mid(ctx, position, i + 1 - position);
  long long dim = mid.dim();
  long long rank_in = position > 0 ? rank(delta_matrix(ctx, i, position - 1)) : 0;
  long long rank_out = position < top ? rank(delta_matrix(ctx, i, position)) : 0;
  long long want, got;
  if (position == 0) {
    want = dim;  // injectivity
    got = rank_out;
  } else {
    want = dim;  // rank-nullity: exact iff ranks fill the middle space
    got = rank_in + rank_out;
  }
  if (got == want) return Check::ok(name.str(), want, got);
  nlohmann::json w = {{"dim", dim}, {"rank_in", rank_in}, {"rank_out", rank_out}};
  return Check::fail(name.str(), want, got, w);
}

namespace {

// Basis of the monogenic-coefficient piece of Lambda^r gr^{i+1-r}, as forms.
std::vector<SpencerForm> subcomplex_basis(const Context& ctx, const FormSpace& space) {
  std::vector<SpencerForm> out;
  for (int blk = 0; blk < space.blocks(); ++blk) {
    int m = space.coeff_degree(blk);
    const HomBasis& B = ctx.basis(m);
    for (const SparseVec& v : ctx.monogenic_kernel(m)) {
      SpencerForm F;
      F.add_term(space.elem(blk), from_coords(densify(v, B.size()), B));
      out.push_back(F);
    }
  }
  return out;
}

SparseMat subcomplex_delta(const Context& ctx, int i, int r) {
  FormSpace src(ctx, r, i + 1 - r);
  FormSpace dst(ctx, r + 1, i - r);
  std::vector<SparseVec> cols;
  for (const SpencerForm& F : subcomplex_basis(ctx, src))
    cols.push_back(sparsify(dst.coords(delta(F, ctx.params()))));
  return SparseMat::from_columns(dst.dim(), std::move(cols));
}

}  // namespace

std::vector<long long> subcomplex_cohomology(const Context& ctx, int i) {
  std::vector<long long> out;
  long long prev_rank = 0;
  for (int r = 0; r <= i + 1; ++r) {
    SparseMat d = subcomplex_delta(ctx, i, r);
    long long rk = rank(d);
    out.push_back(d.cols() - rk - prev_rank);
    prev_rank = rk;
  }
  return out;
}

bool verify_subcomplex_closure(const Context& ctx, int i) {
  const Params& p = ctx.params();
  for (int r = 0; r <= i + 1; ++r) {
    FormSpace space(ctx, r, i + 1 - r);
    for (const SpencerForm& F : subcomplex_basis(ctx, space))
      for (const auto& [e, c] : delta(F, p).terms)
        for (const auto& comp : apply_D(c, p, ctx.rep()))
          if (!comp.is_zero()) return false;
  }
  return true;
}

}  // namespace kdirac
