#include <vecvar/matrix.hpp>

#include <algorithm>

namespace vecvar {

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVector>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  RatMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c)
      throw DomainError("ragged rows in matrix literal");
    for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

RatVector RatMatrix::row(int i) const {
  RatVector v(cols_);
  for (int j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
  return v;
}

RatVector RatMatrix::col(int j) const {
  RatVector v(rows_);
  for (int i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

RatMatrix operator*(const RatMatrix& x, const RatMatrix& y) {
  if (x.cols() != y.rows()) throw DomainError("matrix product shape mismatch");
  RatMatrix z(x.rows(), y.cols());
  for (int i = 0; i < x.rows(); ++i)
    for (int k = 0; k < x.cols(); ++k) {
      const Rat& xik = x(i, k);
      if (xik == 0) continue;
      for (int j = 0; j < y.cols(); ++j) {
        if (y(k, j) == 0) continue;
        z(i, j) += xik * y(k, j);
      }
    }
  return z;
}

RatVector RatMatrix::apply(const RatVector& v) const {
  if (static_cast<int>(v.size()) != cols_)
    throw DomainError("matrix-vector shape mismatch");
  RatVector out(rows_, Rat(0));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if ((*this)(i, j) != 0 && v[j] != 0) out[i] += (*this)(i, j) * v[j];
  return out;
}

RatMatrix RatMatrix::transposed() const {
  RatMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool RatMatrix::is_zero() const {
  for (const Rat& x : a_)
    if (x != 0) return false;
  return true;
}

namespace {

// Denominator-cleared integer copy: each row is scaled by the lcm of its
// denominators, which changes neither rank nor row space.
std::vector<std::vector<Int>> integer_rows(const RatMatrix& m) {
  std::vector<std::vector<Int>> rows(m.rows());
  for (int i = 0; i < m.rows(); ++i) {
    Int l(1);
    for (int j = 0; j < m.cols(); ++j)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den().get_mpz_t());
    rows[i].resize(m.cols());
    for (int j = 0; j < m.cols(); ++j) {
      Rat scaled = m(i, j) * Rat(l);
      rows[i][j] = scaled.get_num();  // denominator is 1 by construction
    }
  }
  return rows;
}

struct Echelon {
  std::vector<std::vector<Int>> rows;  // first `pivots.size()` rows nonzero
  std::vector<int> pivot_cols;
};

// Bareiss fraction-free forward elimination. Pivot = first row with a
// nonzero entry in the current column, scanning top to bottom.
Echelon bareiss_forward(std::vector<std::vector<Int>> rows, int cols) {
  Echelon e;
  int nrows = static_cast<int>(rows.size());
  Int prev(1);
  int r = 0;
  for (int c = 0; c < cols && r < nrows; ++c) {
    int piv = -1;
    for (int i = r; i < nrows; ++i)
      if (rows[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[r], rows[piv]);
    for (int i = r + 1; i < nrows; ++i) {
      for (int j = c + 1; j < cols; ++j) {
        Int t = rows[r][c] * rows[i][j] - rows[i][c] * rows[r][j];
        mpz_divexact(rows[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      rows[i][c] = 0;
    }
    prev = rows[r][c];
    e.pivot_cols.push_back(c);
    ++r;
  }
  e.rows = std::move(rows);
  return e;
}

}  // namespace

int rank(const RatMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  Echelon e = bareiss_forward(integer_rows(m), m.cols());
  return static_cast<int>(e.pivot_cols.size());
}

RatMatrix rref(const RatMatrix& m) {
  RatMatrix out(m.rows(), m.cols());
  if (m.rows() == 0 || m.cols() == 0) return out;
  Echelon e = bareiss_forward(integer_rows(m), m.cols());
  int r = static_cast<int>(e.pivot_cols.size());

  // Normalise pivots to 1 and eliminate above, in rational arithmetic, on
  // the r echelon rows only.
  std::vector<RatVector> rows(r, RatVector(m.cols(), Rat(0)));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < m.cols(); ++j) rows[i][j] = Rat(e.rows[i][j]);
  for (int i = r - 1; i >= 0; --i) {
    int pc = e.pivot_cols[i];
    Rat inv = Rat(1) / rows[i][pc];
    for (int j = pc; j < m.cols(); ++j) rows[i][j] *= inv;
    for (int k = 0; k < i; ++k) {
      Rat f = rows[k][pc];
      if (f == 0) continue;
      for (int j = pc; j < m.cols(); ++j) rows[k][j] -= f * rows[i][j];
    }
  }
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = rows[i][j];
  return out;
}

std::vector<int> rref_pivot_columns(const RatMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return {};
  return bareiss_forward(integer_rows(m), m.cols()).pivot_cols;
}

std::vector<RatVector> kernel_basis(const RatMatrix& m) {
  if (m.cols() == 0) return {};
  if (m.rows() == 0) {
    std::vector<RatVector> basis;
    for (int j = 0; j < m.cols(); ++j) {
      RatVector v(m.cols(), Rat(0));
      v[j] = 1;
      basis.push_back(v);
    }
    return basis;
  }
  RatMatrix r = rref(m);
  std::vector<int> pivots = rref_pivot_columns(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<RatVector> basis;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    RatVector v(m.cols(), Rat(0));
    v[f] = 1;
    for (size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r(static_cast<int>(k), f);
    basis.push_back(std::move(v));
  }
  return basis;
}

RatMatrix column_echelon_canonical(const RatMatrix& m) {
  if (rank(m) != m.cols()) throw DomainError("not injective");
  return rref(m.transposed()).transposed();
}

RatMatrix solve_unique(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows()) throw DomainError("solve: shape mismatch");
  if (!kernel_basis(a).empty()) throw DomainError("solve: solution not unique");
  RatMatrix aug(a.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    for (int j = 0; j < b.cols(); ++j) aug(i, a.cols() + j) = b(i, j);
  }
  RatMatrix r = rref(aug);
  std::vector<int> pivots = rref_pivot_columns(aug);
  for (int c : pivots)
    if (c >= a.cols()) throw DomainError("solve: inconsistent system");
  RatMatrix x(a.cols(), b.cols());
  for (size_t k = 0; k < pivots.size(); ++k)
    for (int j = 0; j < b.cols(); ++j)
      x(pivots[k], j) = r(static_cast<int>(k), a.cols() + j);
  return x;
}

RatVector solve_unique(const RatMatrix& a, const RatVector& b) {
  RatMatrix bm(a.rows(), 1);
  for (int i = 0; i < a.rows(); ++i) bm(i, 0) = b[i];
  return solve_unique(a, bm).col(0);
}

RatMatrix inverse(const RatMatrix& a) {
  if (a.rows() != a.cols()) throw DomainError("inverse of non-square matrix");
  return solve_unique(a, RatMatrix::identity(a.rows()));
}

Rat determinant(const RatMatrix& a) {
  if (a.rows() != a.cols()) throw DomainError("determinant of non-square matrix");
  int n = a.rows();
  if (n == 0) return Rat(1);
  RatMatrix m = a;
  Rat det(1);
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int i = c; i < n; ++i)
      if (m(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) return Rat(0);
    if (piv != c) {
      for (int j = 0; j < n; ++j) std::swap(m(piv, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    Rat inv = Rat(1) / m(c, c);
    for (int i = c + 1; i < n; ++i) {
      Rat f = m(i, c) * inv;
      if (f == 0) continue;
      for (int j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

RatMatrix row_space_basis(const RatMatrix& spanning_rows) {
  RatMatrix r = rref(spanning_rows);
  int k = rank(spanning_rows);
  RatMatrix basis(k, spanning_rows.cols());
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < spanning_rows.cols(); ++j) basis(i, j) = r(i, j);
  return basis;
}

bool row_space_contains(const RatMatrix& basis_rows, const RatVector& v) {
  RatMatrix stacked(basis_rows.rows() + 1, basis_rows.cols());
  for (int i = 0; i < basis_rows.rows(); ++i)
    for (int j = 0; j < basis_rows.cols(); ++j) stacked(i, j) = basis_rows(i, j);
  for (int j = 0; j < basis_rows.cols(); ++j)
    stacked(basis_rows.rows(), j) = v[j];
  return rank(stacked) == rank(basis_rows);
}

bool SparseRowEchelon::insert(SparseRow row) {
  while (!row.empty()) {
    int lead = row.front().first;
    if (lead >= static_cast<int>(pivot_of_col_.size()))
      pivot_of_col_.resize(lead + 1, -1);
    int pr = pivot_of_col_[lead];
    if (pr < 0) {
      // New pivot; normalise the leading coefficient to 1.
      Rat inv = Rat(1) / row.front().second;
      for (auto& [c, v] : row) v *= inv;
      pivot_of_col_[lead] = static_cast<int>(rows_.size());
      rows_.push_back(std::move(row));
      return true;
    }
    // row -= row[lead] * basis_row  (merge of sorted sparse vectors)
    const SparseRow& b = rows_[pr];
    Rat f = row.front().second;
    SparseRow merged;
    merged.reserve(row.size() + b.size());
    size_t i = 0, j = 0;
    while (i < row.size() || j < b.size()) {
      if (j == b.size() || (i < row.size() && row[i].first < b[j].first)) {
        merged.push_back(row[i++]);
      } else if (i == row.size() || b[j].first < row[i].first) {
        merged.emplace_back(b[j].first, -f * b[j].second);
        ++j;
      } else {
        Rat v = row[i].second - f * b[j].second;
        if (v != 0) merged.emplace_back(row[i].first, std::move(v));
        ++i;
        ++j;
      }
    }
    row = std::move(merged);
  }
  return false;
}

}  // namespace vecvar
