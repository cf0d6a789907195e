#pragma once

#include <vecvar/rational.hpp>

#include <cstddef>
#include <utility>
#include <vector>

namespace vecvar {

// Dense matrix of exact rationals, row-major.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, Rat(0)) {
    if (rows < 0 || cols < 0) throw DomainError("negative matrix shape");
  }

  static RatMatrix identity(int n);
  static RatMatrix from_rows(const std::vector<RatVector>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rat& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Rat& operator()(int i, int j) const {
    return a_[static_cast<size_t>(i) * cols_ + j];
  }

  RatVector row(int i) const;
  RatVector col(int j) const;

  bool operator==(const RatMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

  friend RatMatrix operator*(const RatMatrix& x, const RatMatrix& y);
  RatVector apply(const RatVector& v) const;  // matrix * column vector
  RatMatrix transposed() const;
  bool is_zero() const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rat> a_;
};

// Exact rank via fraction-free (Bareiss) elimination on a denominator-cleared
// integer copy; deterministic first-nonzero pivoting.
int rank(const RatMatrix& m);

// Reduced row echelon form: fraction-free forward elimination, rational
// back-substitution and pivot normalisation at the end.
RatMatrix rref(const RatMatrix& m);

// Basis of the right kernel {v : m v = 0}, one vector per free column of the
// rref, ordered by free-column index.
std::vector<RatVector> kernel_basis(const RatMatrix& m);

// Unique reduced column echelon form of the column space. Requires full
// column rank; throws DomainError("not injective") otherwise. Two matrices of
// full column rank have equal output iff their column spaces coincide.
RatMatrix column_echelon_canonical(const RatMatrix& m);

// Pivot column indices of rref(m), ascending. For a full-column-rank m these
// are also the pivot rows of column_echelon_canonical(m).
std::vector<int> rref_pivot_columns(const RatMatrix& m);

// Solves a x = b for the unique solution; throws if the system is
// inconsistent or underdetermined (kernel_basis(a) must be empty).
RatVector solve_unique(const RatMatrix& a, const RatVector& b);
RatMatrix solve_unique(const RatMatrix& a, const RatMatrix& b);
RatMatrix inverse(const RatMatrix& a);

Rat determinant(const RatMatrix& a);

// Row-space helpers used for canonical subspace representatives: the rref
// rows of a spanning set are the unique canonical basis of the subspace.
RatMatrix row_space_basis(const RatMatrix& spanning_rows);
bool row_space_contains(const RatMatrix& basis_rows, const RatVector& v);

// Incremental exact rank of a stream of sparse rows. Basis rows are kept
// sparse, lead-normalised, in echelon form by leading column.
class SparseRowEchelon {
 public:
  using SparseRow = std::vector<std::pair<int, Rat>>;  // sorted by column

  // Returns true iff the row was independent of the current basis.
  bool insert(SparseRow row);
  int rank() const { return static_cast<int>(rows_.size()); }

 private:
  std::vector<SparseRow> rows_;
  std::vector<int> pivot_of_col_;  // -1 when the column has no pivot
};

}  // namespace vecvar
