#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "kdirac/dirac.hpp"

using namespace kdirac;

namespace {

long long expected_mono_dim(const Params& p, int dimS, int d) {
  return binomial(p.n * p.k + d - 1, d) * dimS;
}

long long expected_prolong_dim(const Params& p, int dimS, int prolong, int r) {
  return binomial(p.n * p.k - r + prolong, prolong + 1) * dimS;
}

}  // namespace

TEST_CASE("apply_D: pinned examples") {
  Params p(2, 2);
  Context ctx(p);
  PolySpinor s = unit_spinor(p, ctx.dimS(), 0);

  auto d_const = apply_D(s, p, ctx.rep());
  for (const auto& c : d_const) CHECK(c.is_zero());

  auto d_x11 = apply_D(mul_x(s, p, 1, 1), p, ctx.rep());
  CHECK(d_x11[0] == clifford_mul(ctx.rep(), 1, s));
  CHECK(d_x11[1].is_zero());

  // x_11 s - x_31 (e3 e1 s) is monogenic of degree 1
  PolySpinor P = mul_x(s, p, 1, 1) -
                 mul_x(clifford_mul(ctx.rep(), 3, clifford_mul(ctx.rep(), 1, s)), p, 3, 1);
  for (const auto& c : apply_D(P, p, ctx.rep())) CHECK(c.is_zero());
}

TEST_CASE("apply_E agrees with apply_D on y-independent input") {
  Params p(2, 2);
  Context ctx(p);
  PolySpinor s = unit_spinor(p, ctx.dimS(), 1);
  auto e = apply_E(s, p, ctx.rep());
  for (const auto& c : e) CHECK(c.is_zero());
  PolySpinor P = mul_x(mul_x(s, p, 2, 1), p, 1, 2);
  auto de = apply_D(P, p, ctx.rep());
  auto ee = apply_E(P, p, ctx.rep());
  for (int i = 0; i < p.k; ++i) CHECK(de[i] == ee[i]);
  auto e_x11 = apply_E(mul_x(s, p, 1, 1), p, ctx.rep());
  CHECK(e_x11[0] == clifford_mul(ctx.rep(), 1, s));
}

TEST_CASE("monogenic dimensions match the closed form") {
  Params p(2, 2);
  Context ctx(p);
  CHECK(monogenic_basis(ctx, 0).dim() == 2);
  CHECK(monogenic_basis(ctx, 1).dim() == 8);   // nk dim S
  CHECK(monogenic_basis(ctx, 2).dim() == 20);  // C(nk+1,2) dim S
  for (int d = 0; d <= 4; ++d)
    CHECK(monogenic_basis(ctx, d).dim() == expected_mono_dim(p, ctx.dimS(), d));
  CHECK(recheck_monogenic(ctx, monogenic_basis(ctx, 3)));
}

TEST_CASE("filtration dims: Cartan characters at i = 0") {
  Params p(2, 2);
  Context ctx(p);
  Permutation id = Permutation::identity(p.n);
  auto dims = filtration_dims(ctx, 0, id);
  CHECK(dims == std::vector<long long>{8, 6, 4, 2, 0, 0, 0});
  // permutation independence at i = 0
  CHECK(filtration_dims(ctx, 0, Permutation::reversal(p.n)) == dims);
}

TEST_CASE("induction formula for prolongation filtrations") {
  Params p(2, 2);
  Context ctx(p);
  Permutation id = Permutation::identity(p.n);
  for (int prolong = 0; prolong <= 2; ++prolong) {
    auto dims = filtration_dims(ctx, prolong, id);
    for (int r = 0; r <= p.k * (p.n + 1); ++r)
      CHECK(dims[r] == expected_prolong_dim(p, ctx.dimS(), prolong, r));
  }
  CHECK(filtration_dims(ctx, 1, id)[0] == 20);
}

TEST_CASE("short exact sequences at (2,2)") {
  Params p(2, 2);
  Context ctx(p);
  Permutation id = Permutation::identity(p.n);
  for (int i = 0; i <= 1; ++i)
    for (int j = 1; j <= p.k * (p.n + 1); ++j) {
      Check c = verify_ses(ctx, i, j, id);
      INFO(c.name);
      CHECK(c.pass);
    }
}

TEST_CASE("lemma: dy vanishing on the filtration steps") {
  Params p(2, 2);
  Context ctx(p);
  for (int i = 0; i <= 1; ++i) {
    Check c = verify_lemma_dy(ctx, i, 1);
    INFO(c.name);
    CHECK(c.pass);
  }
}

TEST_CASE("Cartan test: equality for D, strict inequality for flat E") {
  Params p(2, 2);
  Context ctx(p);
  Permutation id = Permutation::identity(p.n);
  CartanTest t0 = cartan_test(ctx, 0, id);
  CHECK(t0.lhs == 20);
  CHECK(t0.rhs == 20);
  CartanTest t1 = cartan_test(ctx, 1, id);
  CHECK(t1.lhs == 40);
  CHECK(t1.rhs == 40);

  CartanTest flat = flat_cartan_test(ctx, 1, id);
  CHECK(flat.lhs < flat.rhs);
}
