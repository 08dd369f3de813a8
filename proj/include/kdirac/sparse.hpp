#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "kdirac/rational.hpp"

namespace kdirac {

/// Sparse vector: (index, value) pairs sorted by index, no stored zeros.
using SparseVec = std::vector<std::pair<int, GaussRat>>;

SparseVec sparsify(const std::vector<GaussRat>& dense);
std::vector<GaussRat> densify(const SparseVec& v, int size);
void axpy(SparseVec& dst, const GaussRat& c, const SparseVec& src);
GaussRat dot(const SparseVec& a, const std::vector<GaussRat>& dense);

/// Thrown when a matrix exceeds the KDIRAC_MAX_CELLS guard.
struct CellLimitExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Sparse matrix over the Gaussian rationals.
/// Entries are kept sorted by (row, col) with no duplicates and no zeros.
class SparseMat {
public:
  struct Entry {
    int row, col;
    GaussRat val;
  };

  SparseMat() : rows_(0), cols_(0) {}
  SparseMat(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("SparseMat: negative size");
  }

  /// Builds from possibly unsorted triplets; duplicates are summed,
  /// zeros dropped.
  static SparseMat from_triplets(int rows, int cols, std::vector<Entry> triplets);
  static SparseMat identity(int n);
  /// Columns given as sparse vectors of length `rows`.
  static SparseMat from_columns(int rows, const std::vector<SparseVec>& cols);
  /// Stacks blocks vertically; all must agree on cols.
  static SparseMat vstack(const std::vector<SparseMat>& blocks);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const std::vector<Entry>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }

  void add_entry(int r, int c, GaussRat v);  // build-in-order helper

  std::vector<GaussRat> apply(const std::vector<GaussRat>& x) const;
  SparseVec apply(const SparseVec& x) const;
  SparseMat operator*(const SparseMat& other) const;
  SparseMat operator+(const SparseMat& other) const;
  SparseMat operator-() const;
  friend bool operator==(const SparseMat& a, const SparseMat& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    if (a.entries_.size() != b.entries_.size()) return false;
    for (size_t t = 0; t < a.entries_.size(); ++t) {
      const Entry &x = a.entries_[t], &y = b.entries_[t];
      if (x.row != y.row || x.col != y.col || x.val != y.val) return false;
    }
    return true;
  }

private:
  int rows_, cols_;
  std::vector<Entry> entries_;
};

/// Exact rank over Q(i).
int rank(const SparseMat& m);

/// Canonical kernel basis from the reduced row echelon form: one vector per
/// free column, unit coordinate at the free column. count = cols - rank.
std::vector<SparseVec> kernel_basis(const SparseMat& m);

/// Particular solution of M x = b with free variables set to zero, or
/// nullopt when the system is inconsistent.
std::optional<std::vector<GaussRat>> solve(const SparseMat& m, const std::vector<GaussRat>& b);

/// Exact inverse; throws std::invalid_argument if m is not square invertible.
SparseMat inverse(const SparseMat& m);

}  // namespace kdirac
