#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "kdirac/wpoly.hpp"

using namespace kdirac;

namespace {

PolySpinor random_poly(std::mt19937_64& rng, const Params& p, int dimS, int d) {
  HomBasis B(p, d, dimS);
  PolySpinor P(dimS);
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
  for (int t = 0; t < B.size(); ++t)
    if (rng() % 3 == 0)
      P.add_term(t % dimS, B.monomials[t / dimS], GaussRat(num(rng), den(rng)));
  return P;
}

}  // namespace

TEST_CASE("Params validation and variable indexing") {
  CHECK_THROWS_AS(Params(1, 2), std::invalid_argument);
  CHECK_THROWS_AS(Params(2, 1), std::invalid_argument);
  Params p(2, 3);
  CHECK(p.nx() == 9);
  CHECK(p.ny() == 3);
  CHECK(p.yindex(1, 2) == 0);
  CHECK(p.yindex(1, 3) == 1);
  CHECK(p.yindex(2, 3) == 2);
  CHECK_THROWS_AS(p.yindex(2, 1), std::out_of_range);
}

TEST_CASE("enumerate_monomials: counts and canonical order") {
  Params p(2, 2);
  CHECK(enumerate_monomials(p, 0).size() == 1);
  CHECK(enumerate_monomials(p, 1).size() == 6);  // the x variables only
  auto d2 = enumerate_monomials(p, 2);
  CHECK(d2.size() == 22);  // 21 quadratics in x plus y_12
  CHECK(std::is_sorted(d2.begin(), d2.end()));
  for (const auto& m : d2) CHECK(m.wdeg() == 2);
  // closed form matches for all small degrees and shapes
  for (auto [n, k] : {std::pair{2, 2}, {3, 2}, {2, 3}}) {
    Params q(n, k);
    for (int d = 0; d <= 6; ++d)
      CHECK(static_cast<long long>(enumerate_monomials(q, d).size()) == monomial_count(q, d));
  }
}

TEST_CASE("diff and mul: pinned examples") {
  Params p(2, 2);
  int dimS = 2;
  PolySpinor s = unit_spinor(p, dimS, 0);
  PolySpinor x11s = mul_x(s, p, 1, 1);
  CHECK(diff_x(x11s, p, 1, 1) == s);

  PolySpinor y12s = mul_y(s, p, 1, 2);
  CHECK(diff_y(y12s, p, 2, 1) == s.scaled(GaussRat(-1)));  // antisymmetry
  CHECK(diff_y(x11s, p, 1, 2).is_zero());
  CHECK_THROWS_AS(diff_y(s, p, 1, 1), std::invalid_argument);

  CHECK(mul_y(s, p, 1, 2).wdeg() == 2);
  CHECK(mul_y(y12s, p, 1, 2).wdeg() == 4);
}

TEST_CASE("grading and Leibniz-style properties") {
  Params p(2, 2);
  std::mt19937_64 rng(11);
  PolySpinor P = random_poly(rng, p, 2, 3);
  CHECK(P.is_homogeneous(3));
  CHECK(mul_x(P, p, 2, 1).is_homogeneous(4));
  CHECK(mul_y(P, p, 1, 2).is_homogeneous(5));
  CHECK(diff_x(P, p, 1, 2).is_homogeneous(2));
  CHECK(diff_y(P, p, 1, 2).is_homogeneous(1));
  // partials commute
  CHECK(diff_x(diff_x(P, p, 1, 1), p, 2, 2) == diff_x(diff_x(P, p, 2, 2), p, 1, 1));
  // d/dx (x P) = P + x d/dx P
  CHECK(diff_x(mul_x(P, p, 1, 1), p, 1, 1) == P + mul_x(diff_x(P, p, 1, 1), p, 1, 1));
}

TEST_CASE("coords round-trip") {
  Params p(2, 2);
  int dimS = 2;
  HomBasis B(p, 2, dimS);
  CHECK(B.size() == 44);
  CHECK(coords_in_basis(PolySpinor(dimS), B) == std::vector<GaussRat>(44));
  for (int t : {0, 7, 43}) {
    auto v = coords_in_basis(B.element(t), B);
    CHECK(v[t] == GaussRat(1));
  }
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    PolySpinor P = random_poly(rng, p, dimS, 2);
    CHECK(from_coords(coords_in_basis(P, B), B) == P);
  }
  PolySpinor bad = unit_spinor(p, dimS, 0);
  CHECK_THROWS_AS(coords_in_basis(bad, B), std::invalid_argument);
}

TEST_CASE("JSON serialization round-trip") {
  Params p(2, 2);
  std::mt19937_64 rng(21);
  for (int d = 0; d <= 3; ++d) {
    PolySpinor P = random_poly(rng, p, 2, d);
    CHECK(poly_from_json(p, 2, poly_to_json(P)) == P);
  }
  CHECK_THROWS_AS(poly_from_json(p, 2, nlohmann::json::object()), std::invalid_argument);
}
