#pragma once

#include <map>
#include <string>
#include <vector>

#include "kdirac/rational.hpp"

#include "json.hpp"

namespace kdirac {

/// Size parameters of the problem. Throughout, x_{alpha i} has weight 1
/// (alpha = 1..n+1, i = 1..k) and y_{rs} has weight 2 (1 <= r < s <= k).
struct Params {
  int n = 2;
  int k = 2;

  Params() = default;
  Params(int n_, int k_) : n(n_), k(k_) {
    if (n < 2 || k < 2) throw std::invalid_argument("Params: need n >= 2 and k >= 2");
  }

  int nx() const { return (n + 1) * k; }
  int ny() const { return k * (k - 1) / 2; }

  /// Flat index of x_{alpha i}, row-major by (alpha, i).
  int xindex(int alpha, int i) const;
  /// Flat index of y_{rs}, pairs (1,2),(1,3),...,(k-1,k) in lex order.
  /// Requires r < s.
  int yindex(int r, int s) const;

  friend bool operator==(const Params& a, const Params& b) { return a.n == b.n && a.k == b.k; }
};

/// Monomial in the weighted-graded ring: exponents of the x and y variables.
/// Only pairs r < s are stored for y.
struct Monomial {
  std::vector<int> xexp;  // size nx
  std::vector<int> yexp;  // size ny

  static Monomial one(const Params& p) {
    return Monomial{std::vector<int>(p.nx(), 0), std::vector<int>(p.ny(), 0)};
  }

  int wdeg() const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.xexp == b.xexp && a.yexp == b.yexp;
  }
  /// Graded order: weighted degree first, then lex on (xexp, yexp).
  friend bool operator<(const Monomial& a, const Monomial& b);
};

/// Spinor-valued polynomial: one sparse coefficient map per spin component.
struct PolySpinor {
  std::vector<std::map<Monomial, GaussRat>> comp;

  PolySpinor() = default;
  explicit PolySpinor(int dimS) : comp(dimS) {}

  int dimS() const { return static_cast<int>(comp.size()); }
  bool is_zero() const;

  void add_term(int spin, const Monomial& m, const GaussRat& c);

  PolySpinor& operator+=(const PolySpinor& o);
  PolySpinor& operator-=(const PolySpinor& o);
  friend PolySpinor operator+(PolySpinor a, const PolySpinor& b) { return a += b; }
  friend PolySpinor operator-(PolySpinor a, const PolySpinor& b) { return a -= b; }
  friend bool operator==(const PolySpinor& a, const PolySpinor& b);

  PolySpinor scaled(const GaussRat& c) const;

  /// True when every term has weighted degree d (the zero polynomial is
  /// homogeneous of every degree).
  bool is_homogeneous(int d) const;
  /// Weighted degree if homogeneous; -1 for zero, throws otherwise.
  int wdeg() const;
};

/// A constant spinor with a 1 in component `spin`.
PolySpinor unit_spinor(const Params& p, int dimS, int spin);

/// Exact partial derivatives. diff_y handles the antisymmetry convention
/// d/dy_{sr} = -d/dy_{rs} and rejects r == s.
PolySpinor diff_x(const PolySpinor& P, const Params& p, int alpha, int i);
PolySpinor diff_y(const PolySpinor& P, const Params& p, int r, int s);

/// Multiplication by a single variable.
PolySpinor mul_x(const PolySpinor& P, const Params& p, int alpha, int i);
PolySpinor mul_y(const PolySpinor& P, const Params& p, int r, int s);  // r < s

/// All monomials of weighted degree d in the canonical order.
std::vector<Monomial> enumerate_monomials(const Params& p, int d);

/// Closed-form count of enumerate_monomials(p, d).
long long monomial_count(const Params& p, int d);
long long binomial(long long n, long long r);

/// Ordered basis of the weighted-homogeneous degree-d component of
/// spinor-valued polynomials. Coordinate layout: monomial-major, spin-minor.
struct HomBasis {
  Params p;
  int d = 0;
  int dimS = 0;
  std::vector<Monomial> monomials;

  HomBasis() = default;
  HomBasis(const Params& p_, int d_, int dimS_)
      : p(p_), d(d_), dimS(dimS_), monomials(enumerate_monomials(p_, d_)) {}

  int size() const { return static_cast<int>(monomials.size()) * dimS; }
  int index(const Monomial& m, int spin) const;
  PolySpinor element(int idx) const;
};

/// Coordinates of a homogeneous P in basis B; throws if P is not
/// homogeneous of B's degree.
std::vector<GaussRat> coords_in_basis(const PolySpinor& P, const HomBasis& B);
PolySpinor from_coords(const std::vector<GaussRat>& v, const HomBasis& B);

/// JSON serialization: list of terms
/// {"spin": int, "xexp": [...], "yexp": [...], "re": "p/q", "im": "p/q"}.
nlohmann::json poly_to_json(const PolySpinor& P);
PolySpinor poly_from_json(const Params& p, int dimS, const nlohmann::json& j);

}  // namespace kdirac
