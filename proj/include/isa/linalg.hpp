#ifndef ISA_LINALG_HPP
#define ISA_LINALG_HPP

#include <optional>
#include <utility>
#include <vector>

#include "isa/rational.hpp"

namespace isa {

// Dense matrix of exact rationals.
class RationalMatrix {
public:
  RationalMatrix() : rows_(0), cols_(0) {}
  RationalMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

  static RationalMatrix identity(int n) {
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Rational& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  RatVector row(int i) const {
    return RatVector(a_.begin() + static_cast<size_t>(i) * cols_,
                     a_.begin() + static_cast<size_t>(i + 1) * cols_);
  }

  bool operator==(const RationalMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

private:
  int rows_, cols_;
  std::vector<Rational> a_;
};

RationalMatrix matmul(const RationalMatrix& a, const RationalMatrix& b);
RatVector matvec(const RationalMatrix& m, const RatVector& v);
RationalMatrix transpose(const RationalMatrix& m);

// Sparse row: (column, value) pairs, sorted by column, values nonzero.
using SparseRow = std::vector<std::pair<int, Rational>>;

SparseRow to_sparse(const RatVector& v);
RatVector to_dense(const SparseRow& r, int cols);

// Incremental reduced row echelon basis.  Rows are kept fully reduced
// against each other at all times, so each basis row has a unit pivot and
// support only on its own pivot column plus currently-free columns.  That
// keeps rows short on the large near-full-rank systems the diagonal and
// cohomology computations produce.
class RrefBuilder {
public:
  explicit RrefBuilder(int cols);

  // Inserts a row (sorted sparse, or anything to_sparse produces).
  // Returns true if the rank grew.
  bool insert(SparseRow v);
  bool insert_dense(const RatVector& v) { return insert(to_sparse(v)); }

  int cols() const { return cols_; }
  int rank() const { return static_cast<int>(rows_.size()); }
  bool has_pivot(int col) const { return row_of_col_[col] >= 0; }

  // Remainder of v after reduction against the current basis.
  SparseRow reduce(SparseRow v) const;

  std::vector<int> pivot_cols_sorted() const;
  std::vector<int> free_cols() const;  // non-pivot columns, ascending

  // Basis rows ordered by pivot column (canonical RREF order).
  std::vector<SparseRow> rows_sorted() const;
  RationalMatrix to_matrix() const;  // rank x cols dense

  // Entry of the basis row with pivot column `pivot_col` at column `col`,
  // zero if absent.  Precondition: has_pivot(pivot_col).
  Rational entry(int pivot_col, int col) const;

private:
  int cols_;
  std::vector<SparseRow> rows_;
  std::vector<int> pivot_of_row_;
  std::vector<int> row_of_col_;               // col -> row index or -1
  std::vector<std::vector<int>> col_users_;   // col -> row ids (may be stale)
};

// Unique reduced row-echelon form, same shape as m (zero rows at the bottom).
RationalMatrix rref(const RationalMatrix& m);

int rank(const RationalMatrix& m);

// Canonical subspace of Q^ambient: basis stored in RREF with strictly
// increasing pivot columns.  Equal subspaces have entrywise equal bases.
class Subspace {
public:
  Subspace() : ambient_(0) {}
  explicit Subspace(int ambient) : ambient_(ambient), basis_(0, ambient) {}

  static Subspace from_sparse_rows(int ambient, const std::vector<SparseRow>& gens);
  static Subspace from_dense_rows(int ambient, const std::vector<RatVector>& gens);
  static Subspace from_matrix(const RationalMatrix& gens);
  static Subspace full(int ambient);

  int ambient() const { return ambient_; }
  int dim() const { return basis_.rows(); }
  const RationalMatrix& basis() const { return basis_; }

  bool contains(const RatVector& v) const;
  Subspace sum(const Subspace& o) const;
  int intersection_dim(const Subspace& o) const;

  bool operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && basis_ == o.basis_;
  }

private:
  int ambient_;
  RationalMatrix basis_;
};

// Null space {x : m x = 0} as a canonical subspace of Q^cols.
Subspace nullspace(const RationalMatrix& m);

// Exact solution of m x = b, or nullopt iff inconsistent.  Free variables
// are set to zero.
std::optional<RatVector> solve(const RationalMatrix& m, const RatVector& b);

}  // namespace isa

#endif  // ISA_LINALG_HPP
