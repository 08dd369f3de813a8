#include "kdirac/sparse.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

namespace kdirac {

SparseVec sparsify(const std::vector<GaussRat>& dense) {
  SparseVec out;
  for (int i = 0; i < static_cast<int>(dense.size()); ++i)
    if (!dense[i].is_zero()) out.emplace_back(i, dense[i]);
  return out;
}

std::vector<GaussRat> densify(const SparseVec& v, int size) {
  std::vector<GaussRat> out(size);
  for (const auto& [i, c] : v) out.at(i) = c;
  return out;
}

// dst += c * src, both sorted sparse vectors.
void axpy(SparseVec& dst, const GaussRat& c, const SparseVec& src) {
  if (c.is_zero() || src.empty()) return;
  SparseVec out;
  out.reserve(dst.size() + src.size());
  size_t a = 0, b = 0;
  while (a < dst.size() || b < src.size()) {
    if (b == src.size() || (a < dst.size() && dst[a].first < src[b].first)) {
      out.push_back(dst[a++]);
    } else if (a == dst.size() || src[b].first < dst[a].first) {
      out.emplace_back(src[b].first, c * src[b].second);
      ++b;
    } else {
      GaussRat v = dst[a].second + c * src[b].second;
      if (!v.is_zero()) out.emplace_back(dst[a].first, std::move(v));
      ++a;
      ++b;
    }
  }
  dst = std::move(out);
}

GaussRat dot(const SparseVec& a, const std::vector<GaussRat>& dense) {
  GaussRat s;
  for (const auto& [i, c] : a) s += c * dense.at(i);
  return s;
}

SparseMat SparseMat::from_triplets(int rows, int cols, std::vector<Entry> triplets) {
  SparseMat m(rows, cols);
  std::sort(triplets.begin(), triplets.end(), [](const Entry& a, const Entry& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  for (auto& e : triplets) {
    if (e.row < 0 || e.row >= rows || e.col < 0 || e.col >= cols)
      throw std::out_of_range("SparseMat: entry out of range");
    if (!m.entries_.empty() && m.entries_.back().row == e.row && m.entries_.back().col == e.col)
      m.entries_.back().val += e.val;
    else
      m.entries_.push_back(std::move(e));
  }
  std::erase_if(m.entries_, [](const Entry& e) { return e.val.is_zero(); });
  return m;
}

SparseMat SparseMat::identity(int n) {
  SparseMat m(n, n);
  for (int i = 0; i < n; ++i) m.entries_.push_back({i, i, GaussRat(1)});
  return m;
}

SparseMat SparseMat::from_columns(int rows, const std::vector<SparseVec>& cols) {
  std::vector<Entry> tr;
  for (int c = 0; c < static_cast<int>(cols.size()); ++c)
    for (const auto& [r, v] : cols[c]) tr.push_back({r, c, v});
  return from_triplets(rows, static_cast<int>(cols.size()), std::move(tr));
}

SparseMat SparseMat::vstack(const std::vector<SparseMat>& blocks) {
  if (blocks.empty()) return SparseMat();
  int cols = blocks.front().cols_, rows = 0;
  std::vector<Entry> tr;
  for (const auto& b : blocks) {
    if (b.cols_ != cols) throw std::invalid_argument("vstack: column mismatch");
    for (const auto& e : b.entries_) tr.push_back({e.row + rows, e.col, e.val});
    rows += b.rows_;
  }
  return from_triplets(rows, cols, std::move(tr));
}

void SparseMat::add_entry(int r, int c, GaussRat v) {
  if (v.is_zero()) return;
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    throw std::out_of_range("SparseMat: entry out of range");
  if (!entries_.empty()) {
    const Entry& last = entries_.back();
    if (last.row > r || (last.row == r && last.col >= c))
      throw std::invalid_argument("add_entry: out of order");
  }
  entries_.push_back({r, c, std::move(v)});
}

std::vector<GaussRat> SparseMat::apply(const std::vector<GaussRat>& x) const {
  if (static_cast<int>(x.size()) != cols_) throw std::invalid_argument("apply: size mismatch");
  std::vector<GaussRat> out(rows_);
  for (const auto& e : entries_) out[e.row] += e.val * x[e.col];
  return out;
}

SparseVec SparseMat::apply(const SparseVec& x) const {
  std::vector<GaussRat> dense(cols_);
  for (const auto& [i, c] : x) dense.at(i) = c;
  return sparsify(apply(dense));
}

SparseMat SparseMat::operator*(const SparseMat& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("mul: size mismatch");
  // rows of `other` for cache-friendly row combination
  std::vector<SparseVec> brow(other.rows_);
  for (const auto& e : other.entries_) brow[e.row].emplace_back(e.col, e.val);
  std::vector<Entry> tr;
  std::map<int, GaussRat> acc;
  int cur = -1;
  auto flush = [&]() {
    for (auto& [c, v] : acc)
      if (!v.is_zero()) tr.push_back({cur, c, std::move(v)});
    acc.clear();
  };
  for (const auto& e : entries_) {
    if (e.row != cur) {
      flush();
      cur = e.row;
    }
    for (const auto& [c, v] : brow[e.col]) acc[c] += e.val * v;
  }
  flush();
  return from_triplets(rows_, other.cols_, std::move(tr));
}

SparseMat SparseMat::operator+(const SparseMat& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw std::invalid_argument("add: size mismatch");
  std::vector<Entry> tr = entries_;
  tr.insert(tr.end(), other.entries_.begin(), other.entries_.end());
  return from_triplets(rows_, cols_, std::move(tr));
}

SparseMat SparseMat::operator-() const {
  SparseMat m(rows_, cols_);
  for (const auto& e : entries_) m.entries_.push_back({e.row, e.col, -e.val});
  return m;
}

namespace {

std::size_t cell_limit() {
  static std::size_t limit = [] {
    const char* env = std::getenv("KDIRAC_MAX_CELLS");
    if (!env) return static_cast<std::size_t>(-1);
    return static_cast<std::size_t>(std::strtoull(env, nullptr, 10));
  }();
  return limit;
}

// Reduced row echelon form by Gauss-Jordan elimination with pivot
// normalization. Columns are processed left to right, so the pivot column
// set and the kernel basis are canonical regardless of input row order.
// Within a column the sparsest candidate row is chosen (lowest index on ties).
struct Rref {
  std::vector<SparseVec> rows;          // echelon rows, pivot coefficient 1
  std::vector<std::pair<int, int>> pivots;  // (col, row index into `rows`)

  explicit Rref(const SparseMat& m, int extra_cols = 0) {
    std::size_t cells =
        static_cast<std::size_t>(m.rows()) * (m.cols() + extra_cols);
    if (cells > cell_limit())
      throw CellLimitExceeded("matrix exceeds KDIRAC_MAX_CELLS");
    std::vector<SparseVec> work(m.rows());
    for (const auto& e : m.entries()) work[e.row].emplace_back(e.col, e.val);
    reduce(std::move(work), m.cols() + extra_cols);
  }

  Rref(std::vector<SparseVec> work, int total_cols) { reduce(std::move(work), total_cols); }

  void reduce(std::vector<SparseVec>&& work, int total_cols) {
    std::vector<bool> used(work.size(), false);
    for (int col = 0; col < total_cols; ++col) {
      int best = -1;
      for (int r = 0; r < static_cast<int>(work.size()); ++r) {
        if (used[r] || work[r].empty()) continue;
        if (work[r].front().first != col) continue;  // leading term decides
        if (best < 0 || work[r].size() < work[best].size()) best = r;
      }
      if (best < 0) continue;
      SparseVec piv = std::move(work[best]);
      used[best] = true;
      GaussRat lead = piv.front().second;
      for (auto& [c, v] : piv) v /= lead;
      // eliminate from everything, including finished pivot rows
      for (auto& [pc, pr] : pivots) {
        GaussRat coef = coeff_at(rows[pr], col);
        if (!coef.is_zero()) axpy(rows[pr], -coef, piv);
      }
      for (int r = 0; r < static_cast<int>(work.size()); ++r) {
        if (used[r]) continue;
        GaussRat coef = coeff_at(work[r], col);
        if (!coef.is_zero()) axpy(work[r], -coef, piv);
      }
      pivots.emplace_back(col, static_cast<int>(rows.size()));
      rows.push_back(std::move(piv));
    }
  }

  static GaussRat coeff_at(const SparseVec& row, int col) {
    auto it = std::lower_bound(row.begin(), row.end(), col,
                               [](const auto& p, int c) { return p.first < c; });
    if (it != row.end() && it->first == col) return it->second;
    return GaussRat();
  }
};

}  // namespace

int rank(const SparseMat& m) { return static_cast<int>(Rref(m).pivots.size()); }

std::vector<SparseVec> kernel_basis(const SparseMat& m) {
  Rref rr(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto& [c, r] : rr.pivots) is_pivot[c] = true;
  std::vector<SparseVec> basis;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    SparseVec v;
    for (auto& [pc, pr] : rr.pivots) {
      GaussRat coef = Rref::coeff_at(rr.rows[pr], f);
      if (!coef.is_zero()) v.emplace_back(pc, -coef);
    }
    v.emplace_back(f, GaussRat(1));
    std::sort(v.begin(), v.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<GaussRat>> solve(const SparseMat& m, const std::vector<GaussRat>& b) {
  if (static_cast<int>(b.size()) != m.rows()) throw std::invalid_argument("solve: size mismatch");
  std::vector<SparseVec> work(m.rows());
  for (const auto& e : m.entries()) work[e.row].emplace_back(e.col, e.val);
  for (int r = 0; r < m.rows(); ++r)
    if (!b[r].is_zero()) work[r].emplace_back(m.cols(), b[r]);
  Rref rr(std::move(work), m.cols() + 1);
  std::vector<GaussRat> x(m.cols());
  for (auto& [pc, pr] : rr.pivots) {
    if (pc == m.cols()) return std::nullopt;  // pivot in the augmented column
    x[pc] = Rref::coeff_at(rr.rows[pr], m.cols());
  }
  return x;
}

SparseMat inverse(const SparseMat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: not square");
  int n = m.rows();
  std::vector<SparseVec> work(n);
  for (const auto& e : m.entries()) work[e.row].emplace_back(e.col, e.val);
  for (int r = 0; r < n; ++r) work[r].emplace_back(n + r, GaussRat(1));
  Rref rr(std::move(work), 2 * n);
  std::vector<SparseMat::Entry> tr;
  int seen = 0;
  for (auto& [pc, pr] : rr.pivots) {
    if (pc >= n) continue;
    ++seen;
    for (auto& [c, v] : rr.rows[pr])
      if (c >= n) tr.push_back({pc, c - n, v});
  }
  if (seen != n) throw std::invalid_argument("inverse: singular matrix");
  return SparseMat::from_triplets(n, n, std::move(tr));
}

}  // namespace kdirac
