#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "kdirac/context.hpp"

using namespace kdirac;

TEST_CASE("apply_L: pinned examples") {
  Params p(2, 2);
  PolySpinor s = unit_spinor(p, 2, 0);
  CHECK(apply_L(mul_x(s, p, 1, 1), p, 1, 1) == s);
  // L_11 (y_12 s) = -(1/2) x_12 s
  CHECK(apply_L(mul_y(s, p, 1, 2), p, 1, 1) == mul_x(s, p, 1, 2).scaled(GaussRat(-1, 2)));
  CHECK(apply_L(s, p, 2, 1).is_zero());
}

TEST_CASE("apply_R: pinned examples") {
  Params p(2, 2);
  PolySpinor s = unit_spinor(p, 2, 0);
  CHECK(apply_R(mul_y(s, p, 1, 2), p, 1, 1) == mul_x(s, p, 1, 2).scaled(GaussRat(1, 2)));
  CHECK(apply_R(mul_x(s, p, 2, 1), p, 1, 1).is_zero());
  // R - L = sum_j x_{alpha j} d/dy_{ij}
  std::mt19937_64 rng(3);
  HomBasis B(p, 4, 2);
  PolySpinor P(2);
  for (int t = 0; t < B.size(); ++t)
    if (rng() % 4 == 0) P.add_term(t % 2, B.monomials[t / 2], GaussRat(static_cast<long>(rng() % 9) - 4));
  PolySpinor diff = apply_R(P, p, 1, 1) - apply_L(P, p, 1, 1);
  PolySpinor expect = mul_x(diff_y(P, p, 1, 2), p, 1, 2);
  CHECK(diff == expect);
}

TEST_CASE("degree shifts") {
  Params p(2, 3);
  HomBasis B(p, 3, 2);
  for (int t = 0; t < B.size(); t += 5) {
    PolySpinor P = B.element(t);
    CHECK(apply_L(P, p, 2, 1).is_homogeneous(2));
    CHECK(apply_R(P, p, 3, 2).is_homogeneous(2));
    CHECK(apply_dy(P, p, 1, 3).is_homogeneous(1));
  }
}

TEST_CASE("bracket identities on full bases") {
  CHECK(bracket_report(Params(2, 2), 2, 2).empty());
  CHECK(bracket_report(Params(2, 2), 2, 3).empty());
  CHECK(bracket_report(Params(2, 3), 2, 2).empty());
}

TEST_CASE("matrix_of agrees with the polynomial operators") {
  Params p(2, 2);
  Context ctx(p);
  // DY at degree 1 is the zero map
  CHECK(ctx.field_matrix(FieldId::DY(1, 2), 1).is_zero());
  // L(1,1) at degree 1 has rank dimS
  CHECK(rank(ctx.field_matrix(FieldId::L(1, 1), 1)) == ctx.dimS());

  std::mt19937_64 rng(17);
  const HomBasis& B3 = ctx.basis(3);
  const HomBasis& B2 = ctx.basis(2);
  for (int trial = 0; trial < 30; ++trial) {
    PolySpinor P(ctx.dimS());
    for (int t = 0; t < B3.size(); ++t)
      if (rng() % 3 == 0)
        P.add_term(t % ctx.dimS(), B3.monomials[t / ctx.dimS()],
                   GaussRat(static_cast<long>(rng() % 11) - 5, 1 + rng() % 3));
    for (FieldId f : {FieldId::L(2, 1), FieldId::R(3, 2), FieldId::DY(1, 2)}) {
      const HomBasis& dst = f.kind == FieldId::Kind::DY ? ctx.basis(1) : B2;
      auto via_matrix = ctx.field_matrix(f, 3).apply(coords_in_basis(P, B3));
      auto direct = coords_in_basis(apply_field(P, p, f), dst);
      CHECK(via_matrix == direct);
    }
  }
}
