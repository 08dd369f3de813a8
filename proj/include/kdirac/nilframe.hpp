#pragma once

#include <string>

#include "kdirac/wpoly.hpp"

namespace kdirac {

/// Identifier of one invariant vector field on the group chart:
/// L_{alpha i}, R_{alpha i} or d/dy_{rs}.
struct FieldId {
  enum class Kind { L, R, DY };
  Kind kind;
  int a = 0;  // alpha for L/R, r for DY
  int b = 0;  // i for L/R, s for DY (r < s)

  static FieldId L(int alpha, int i) { return {Kind::L, alpha, i}; }
  static FieldId R(int alpha, int i) { return {Kind::R, alpha, i}; }
  static FieldId DY(int r, int s) { return {Kind::DY, r, s}; }

  /// Drop in weighted degree when applied to a homogeneous polynomial.
  int degree_shift() const { return kind == Kind::DY ? 2 : 1; }

  friend bool operator<(const FieldId& x, const FieldId& y) {
    if (x.kind != y.kind) return x.kind < y.kind;
    if (x.a != y.a) return x.a < y.a;
    return x.b < y.b;
  }
  friend bool operator==(const FieldId& x, const FieldId& y) {
    return x.kind == y.kind && x.a == y.a && x.b == y.b;
  }

  std::string str() const;
};

/// L_{alpha i} = d/dx_{alpha i} - (1/2) sum_j x_{alpha j} d/dy_{ij},
/// with d/dy_{ii} = 0 and d/dy_{ij} = -d/dy_{ji}.
PolySpinor apply_L(const PolySpinor& P, const Params& p, int alpha, int i);

/// R_{alpha i} = d/dx_{alpha i} + (1/2) sum_j x_{alpha j} d/dy_{ij}.
PolySpinor apply_R(const PolySpinor& P, const Params& p, int alpha, int i);

/// d/dy_{rs} with the antisymmetry convention; rejects r == s.
PolySpinor apply_dy(const PolySpinor& P, const Params& p, int r, int s);

PolySpinor apply_field(const PolySpinor& P, const Params& p, const FieldId& f);

/// Checks the bracket relations [L_{ai}, L_{bj}] = -[R_{ai}, R_{bj}] =
/// delta_ab d/dy_{ij}, and that all mixed brackets vanish, on every basis
/// element of degree d. Returns a description of the first failure, or
/// empty string on success.
std::string bracket_report(const Params& p, int dimS, int d);

}  // namespace kdirac
