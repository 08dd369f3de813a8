#include "kdirac/wpoly.hpp"

#include <algorithm>
#include <numeric>

namespace kdirac {

int Params::xindex(int alpha, int i) const {
  if (alpha < 1 || alpha > n + 1 || i < 1 || i > k)
    throw std::out_of_range("xindex: bad (alpha, i)");
  return (alpha - 1) * k + (i - 1);
}

int Params::yindex(int r, int s) const {
  if (!(1 <= r && r < s && s <= k)) throw std::out_of_range("yindex: need 1 <= r < s <= k");
  // pairs (1,2),(1,3),...,(1,k),(2,3),... in lex order
  return (r - 1) * k - r * (r - 1) / 2 + (s - r - 1);
}

int Monomial::wdeg() const {
  int d = std::accumulate(xexp.begin(), xexp.end(), 0);
  for (int e : yexp) d += 2 * e;
  return d;
}

bool operator<(const Monomial& a, const Monomial& b) {
  int da = a.wdeg(), db = b.wdeg();
  if (da != db) return da < db;
  if (a.xexp != b.xexp) return a.xexp < b.xexp;
  return a.yexp < b.yexp;
}

bool PolySpinor::is_zero() const {
  for (const auto& c : comp)
    if (!c.empty()) return false;
  return true;
}

void PolySpinor::add_term(int spin, const Monomial& m, const GaussRat& c) {
  if (c.is_zero()) return;
  auto& map = comp.at(spin);
  auto it = map.find(m);
  if (it == map.end()) {
    map.emplace(m, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) map.erase(it);
  }
}

PolySpinor& PolySpinor::operator+=(const PolySpinor& o) {
  if (comp.size() != o.comp.size()) throw std::invalid_argument("PolySpinor: dimS mismatch");
  for (size_t s = 0; s < comp.size(); ++s)
    for (const auto& [m, c] : o.comp[s]) add_term(static_cast<int>(s), m, c);
  return *this;
}

PolySpinor& PolySpinor::operator-=(const PolySpinor& o) {
  if (comp.size() != o.comp.size()) throw std::invalid_argument("PolySpinor: dimS mismatch");
  for (size_t s = 0; s < comp.size(); ++s)
    for (const auto& [m, c] : o.comp[s]) add_term(static_cast<int>(s), m, -c);
  return *this;
}

bool operator==(const PolySpinor& a, const PolySpinor& b) { return a.comp == b.comp; }

PolySpinor PolySpinor::scaled(const GaussRat& c) const {
  PolySpinor out(dimS());
  if (c.is_zero()) return out;
  for (size_t s = 0; s < comp.size(); ++s)
    for (const auto& [m, v] : comp[s]) out.comp[s].emplace(m, c * v);
  return out;
}

bool PolySpinor::is_homogeneous(int d) const {
  for (const auto& c : comp)
    for (const auto& [m, v] : c)
      if (m.wdeg() != d) return false;
  return true;
}

int PolySpinor::wdeg() const {
  int d = -1;
  for (const auto& c : comp)
    for (const auto& [m, v] : c) {
      int md = m.wdeg();
      if (d == -1)
        d = md;
      else if (d != md)
        throw std::invalid_argument("wdeg: not homogeneous");
    }
  return d;
}

PolySpinor unit_spinor(const Params& p, int dimS, int spin) {
  PolySpinor P(dimS);
  P.add_term(spin, Monomial::one(p), GaussRat(1));
  return P;
}

PolySpinor diff_x(const PolySpinor& P, const Params& p, int alpha, int i) {
  int vi = p.xindex(alpha, i);
  PolySpinor out(P.dimS());
  for (int s = 0; s < P.dimS(); ++s)
    for (const auto& [m, c] : P.comp[s]) {
      int e = m.xexp[vi];
      if (e == 0) continue;
      Monomial m2 = m;
      m2.xexp[vi] = e - 1;
      out.add_term(s, m2, c * GaussRat(e));
    }
  return out;
}

PolySpinor diff_y(const PolySpinor& P, const Params& p, int r, int s) {
  if (r == s) throw std::invalid_argument("diff_y: r == s");
  GaussRat sign(1);
  if (r > s) {
    std::swap(r, s);
    sign = GaussRat(-1);
  }
  int vi = p.yindex(r, s);
  PolySpinor out(P.dimS());
  for (int sp = 0; sp < P.dimS(); ++sp)
    for (const auto& [m, c] : P.comp[sp]) {
      int e = m.yexp[vi];
      if (e == 0) continue;
      Monomial m2 = m;
      m2.yexp[vi] = e - 1;
      out.add_term(sp, m2, c * GaussRat(e) * sign);
    }
  return out;
}

PolySpinor mul_x(const PolySpinor& P, const Params& p, int alpha, int i) {
  int vi = p.xindex(alpha, i);
  PolySpinor out(P.dimS());
  for (int s = 0; s < P.dimS(); ++s)
    for (const auto& [m, c] : P.comp[s]) {
      Monomial m2 = m;
      ++m2.xexp[vi];
      out.add_term(s, m2, c);
    }
  return out;
}

PolySpinor mul_y(const PolySpinor& P, const Params& p, int r, int s) {
  int vi = p.yindex(r, s);
  PolySpinor out(P.dimS());
  for (int sp = 0; sp < P.dimS(); ++sp)
    for (const auto& [m, c] : P.comp[sp]) {
      Monomial m2 = m;
      ++m2.yexp[vi];
      out.add_term(sp, m2, c);
    }
  return out;
}

namespace {

// All compositions of `total` into `parts` nonnegative summands, emitted in
// descending-first lex order consistent with vector<int> comparison after a
// final sort; we simply collect and let the caller sort.
void compositions(int total, int parts, std::vector<int>& cur,
                  const std::function<void(const std::vector<int>&)>& emit) {
  if (parts == 1) {
    cur.push_back(total);
    emit(cur);
    cur.pop_back();
    return;
  }
  for (int head = 0; head <= total; ++head) {
    cur.push_back(head);
    compositions(total - head, parts - 1, cur, emit);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Monomial> enumerate_monomials(const Params& p, int d) {
  if (d < 0) throw std::invalid_argument("enumerate_monomials: d < 0");
  std::vector<Monomial> out;
  for (int b = 0; 2 * b <= d; ++b) {
    int dx = d - 2 * b;
    std::vector<int> cx;
    compositions(dx, p.nx(), cx, [&](const std::vector<int>& xe) {
      std::vector<int> cy;
      compositions(b, p.ny(), cy, [&](const std::vector<int>& ye) {
        out.push_back(Monomial{xe, ye});
      });
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

long long binomial(long long n, long long r) {
  if (r < 0 || n < 0 || r > n) return 0;
  long long out = 1;
  for (long long t = 1; t <= r; ++t) out = out * (n - r + t) / t;
  return out;
}

long long monomial_count(const Params& p, int d) {
  long long total = 0;
  for (int b = 0; 2 * b <= d; ++b)
    total += binomial(p.nx() + (d - 2 * b) - 1, d - 2 * b) * binomial(p.ny() + b - 1, b);
  return total;
}

int HomBasis::index(const Monomial& m, int spin) const {
  auto it = std::lower_bound(monomials.begin(), monomials.end(), m);
  if (it == monomials.end() || !(*it == m)) throw std::invalid_argument("HomBasis: unknown monomial");
  return static_cast<int>(it - monomials.begin()) * dimS + spin;
}

PolySpinor HomBasis::element(int idx) const {
  PolySpinor P(dimS);
  P.add_term(idx % dimS, monomials.at(idx / dimS), GaussRat(1));
  return P;
}

std::vector<GaussRat> coords_in_basis(const PolySpinor& P, const HomBasis& B) {
  if (P.dimS() != B.dimS) throw std::invalid_argument("coords_in_basis: dimS mismatch");
  if (!P.is_homogeneous(B.d))
    throw std::invalid_argument("coords_in_basis: not homogeneous of the basis degree");
  std::vector<GaussRat> v(B.size());
  for (int s = 0; s < P.dimS(); ++s)
    for (const auto& [m, c] : P.comp[s]) v[B.index(m, s)] = c;
  return v;
}

PolySpinor from_coords(const std::vector<GaussRat>& v, const HomBasis& B) {
  if (static_cast<int>(v.size()) != B.size())
    throw std::invalid_argument("from_coords: size mismatch");
  PolySpinor P(B.dimS);
  for (int idx = 0; idx < B.size(); ++idx)
    if (!v[idx].is_zero()) P.add_term(idx % B.dimS, B.monomials[idx / B.dimS], v[idx]);
  return P;
}

nlohmann::json poly_to_json(const PolySpinor& P) {
  nlohmann::json terms = nlohmann::json::array();
  for (int s = 0; s < P.dimS(); ++s)
    for (const auto& [m, c] : P.comp[s]) {
      terms.push_back({{"spin", s},
                       {"xexp", m.xexp},
                       {"yexp", m.yexp},
                       {"re", c.re_str()},
                       {"im", c.im_str()}});
    }
  return terms;
}

PolySpinor poly_from_json(const Params& p, int dimS, const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("poly_from_json: expected a term array");
  PolySpinor P(dimS);
  for (const auto& t : j) {
    int spin = t.at("spin").get<int>();
    if (spin < 0 || spin >= dimS) throw std::invalid_argument("poly_from_json: bad spin index");
    Monomial m;
    m.xexp = t.at("xexp").get<std::vector<int>>();
    m.yexp = t.at("yexp").get<std::vector<int>>();
    if (static_cast<int>(m.xexp.size()) != p.nx() || static_cast<int>(m.yexp.size()) != p.ny())
      throw std::invalid_argument("poly_from_json: exponent length mismatch");
    for (int e : m.xexp)
      if (e < 0) throw std::invalid_argument("poly_from_json: negative exponent");
    for (int e : m.yexp)
      if (e < 0) throw std::invalid_argument("poly_from_json: negative exponent");
    P.add_term(spin, m, GaussRat::parse(t.at("re").get<std::string>(), t.at("im").get<std::string>()));
  }
  return P;
}

}  // namespace kdirac
