#include "kdirac/nilframe.hpp"

namespace kdirac {

std::string FieldId::str() const {
  switch (kind) {
    case Kind::L: return "L(" + std::to_string(a) + "," + std::to_string(b) + ")";
    case Kind::R: return "R(" + std::to_string(a) + "," + std::to_string(b) + ")";
    default: return "dy(" + std::to_string(a) + "," + std::to_string(b) + ")";
  }
}

namespace {

// d/dx_{alpha i} + sign * (1/2) sum_j x_{alpha j} d/dy_{ij}
PolySpinor invariant_field(const PolySpinor& P, const Params& p, int alpha, int i, int sign) {
  PolySpinor out = diff_x(P, p, alpha, i);
  GaussRat half(sign, 2);
  for (int j = 1; j <= p.k; ++j) {
    if (j == i) continue;  // d/dy_{ii} = 0
    PolySpinor t = mul_x(diff_y(P, p, i, j), p, alpha, j).scaled(half);
    out += t;
  }
  return out;
}

}  // namespace

PolySpinor apply_L(const PolySpinor& P, const Params& p, int alpha, int i) {
  return invariant_field(P, p, alpha, i, -1);
}

PolySpinor apply_R(const PolySpinor& P, const Params& p, int alpha, int i) {
  return invariant_field(P, p, alpha, i, +1);
}

PolySpinor apply_dy(const PolySpinor& P, const Params& p, int r, int s) {
  return diff_y(P, p, r, s);
}

PolySpinor apply_field(const PolySpinor& P, const Params& p, const FieldId& f) {
  switch (f.kind) {
    case FieldId::Kind::L: return apply_L(P, p, f.a, f.b);
    case FieldId::Kind::R: return apply_R(P, p, f.a, f.b);
    default: return apply_dy(P, p, f.a, f.b);
  }
}

std::string bracket_report(const Params& p, int dimS, int d) {
  HomBasis B(p, d, dimS);
  std::vector<FieldId> fields;
  for (int alpha = 1; alpha <= p.n + 1; ++alpha)
    for (int i = 1; i <= p.k; ++i) {
      fields.push_back(FieldId::L(alpha, i));
      fields.push_back(FieldId::R(alpha, i));
    }
  for (int r = 1; r <= p.k; ++r)
    for (int s = r + 1; s <= p.k; ++s) fields.push_back(FieldId::DY(r, s));

  auto expected_bracket = [&](const FieldId& X, const FieldId& Y,
                              const PolySpinor& P) -> PolySpinor {
    using K = FieldId::Kind;
    if (X.kind == K::L && Y.kind == K::L && X.a == Y.a && X.b != Y.b)
      return apply_dy(P, p, X.b, Y.b);
    if (X.kind == K::R && Y.kind == K::R && X.a == Y.a && X.b != Y.b)
      return apply_dy(P, p, X.b, Y.b).scaled(GaussRat(-1));
    return PolySpinor(P.dimS());
  };

  for (int idx = 0; idx < B.size(); ++idx) {
    PolySpinor P = B.element(idx);
    for (const auto& X : fields)
      for (const auto& Y : fields) {
        PolySpinor lhs = apply_field(apply_field(P, p, Y), p, X) -
                         apply_field(apply_field(P, p, X), p, Y);
        if (!(lhs == expected_bracket(X, Y, P)))
          return "bracket mismatch [" + X.str() + "," + Y.str() + "] on basis element " +
                 std::to_string(idx) + " of degree " + std::to_string(d);
      }
  }
  return {};
}

}  // namespace kdirac
