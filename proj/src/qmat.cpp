#include "qmat.hpp"

#include "errors.hpp"

namespace hilb {

QMat QMat::identity(int n) {
  QMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

QMat QMat::from_rows(const std::vector<std::vector<Rational>>& rows) {
  if (rows.empty()) return QMat();
  QMat m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows(); ++i) {
    if (static_cast<int>(rows[i].size()) != m.cols())
      throw DomainError("ragged rows in matrix literal");
    for (int j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

bool QMat::is_zero() const {
  for (const auto& x : a_)
    if (x != 0) return false;
  return true;
}

bool QMat::operator==(const QMat& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && a_ == other.a_;
}

QMat QMat::transposed() const {
  QMat t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

QMat QMat::times(const QMat& other) const {
  if (cols_ != other.rows_) throw DomainError("matrix product shape mismatch");
  QMat p(rows_, other.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rational& aik = at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < other.cols_; ++j) {
        if (other.at(k, j) == 0) continue;
        p.at(i, j) += aik * other.at(k, j);
      }
    }
  return p;
}

QMat QMat::vstack(const QMat& below) const {
  if (rows_ == 0) return below;
  if (below.rows() == 0) return *this;
  if (cols_ != below.cols()) throw DomainError("vstack width mismatch");
  QMat m(rows_ + below.rows(), cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
  for (int i = 0; i < below.rows(); ++i)
    for (int j = 0; j < cols_; ++j) m.at(rows_ + i, j) = below.at(i, j);
  return m;
}

QMat QMat::row(int i) const {
  QMat r(1, cols_);
  for (int j = 0; j < cols_; ++j) r.at(0, j) = at(i, j);
  return r;
}

std::vector<Rational> QMat::row_vector(int i) const {
  std::vector<Rational> v(cols_);
  for (int j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

int QMat::rref_in_place() {
  int pivot_row = 0;
  for (int col = 0; col < cols_ && pivot_row < rows_; ++col) {
    int sel = -1;
    for (int i = pivot_row; i < rows_; ++i)
      if (at(i, col) != 0) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != pivot_row)
      for (int j = 0; j < cols_; ++j) std::swap(at(sel, j), at(pivot_row, j));
    Rational inv = 1 / at(pivot_row, col);
    for (int j = col; j < cols_; ++j) at(pivot_row, j) *= inv;
    for (int i = 0; i < rows_; ++i) {
      if (i == pivot_row || at(i, col) == 0) continue;
      Rational factor = at(i, col);
      for (int j = col; j < cols_; ++j) at(i, j) -= factor * at(pivot_row, j);
    }
    ++pivot_row;
  }
  return pivot_row;
}

int QMat::rank() const {
  QMat copy = *this;
  return copy.rref_in_place();
}

Rational QMat::determinant() const {
  if (rows_ != cols_) throw DomainError("determinant of non-square matrix");
  QMat m = *this;
  Rational det = 1;
  for (int col = 0; col < cols_; ++col) {
    int sel = -1;
    for (int i = col; i < rows_; ++i)
      if (m.at(i, col) != 0) {
        sel = i;
        break;
      }
    if (sel < 0) return Rational(0);
    if (sel != col) {
      for (int j = 0; j < cols_; ++j) std::swap(m.at(sel, j), m.at(col, j));
      det = -det;
    }
    det *= m.at(col, col);
    Rational inv = 1 / m.at(col, col);
    for (int i = col + 1; i < rows_; ++i) {
      if (m.at(i, col) == 0) continue;
      Rational factor = m.at(i, col) * inv;
      for (int j = col; j < cols_; ++j) m.at(i, j) -= factor * m.at(col, j);
    }
  }
  return det;
}

QMat QMat::kernel() const {
  QMat r = *this;
  int rank = r.rref_in_place();
  std::vector<int> pivot_col(rank);
  std::vector<bool> is_pivot(cols_, false);
  for (int i = 0, col = 0; i < rank; ++i) {
    while (col < cols_ && r.at(i, col) == 0) ++col;
    pivot_col[i] = col;
    is_pivot[col] = true;
  }
  QMat k(cols_ - rank, cols_);
  int out = 0;
  for (int free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    k.at(out, free) = 1;
    for (int i = 0; i < rank; ++i) k.at(out, pivot_col[i]) = -r.at(i, free);
    ++out;
  }
  k.rref_in_place();
  return k;
}

QMat row_space(const QMat& m) {
  QMat r = m;
  int rank = r.rref_in_place();
  QMat out(rank, m.cols());
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < m.cols(); ++j) out.at(i, j) = r.at(i, j);
  return out;
}

QMat row_space_sum(const QMat& a, const QMat& b) {
  return row_space(a.vstack(b));
}

QMat row_space_intersection(const QMat& a, const QMat& b) {
  if (a.rows() == 0 || b.rows() == 0)
    return QMat(0, a.rows() ? a.cols() : b.cols());
  if (a.cols() != b.cols()) throw DomainError("intersection width mismatch");
  // (alpha, gamma) with alpha*A + gamma*B = 0 <=> alpha*A spans the meet.
  QMat stacked = a.vstack(b);
  QMat left_null = stacked.transposed().kernel();
  QMat meet(left_null.rows(), a.cols());
  for (int i = 0; i < left_null.rows(); ++i)
    for (int r = 0; r < a.rows(); ++r) {
      if (left_null.at(i, r) == 0) continue;
      for (int j = 0; j < a.cols(); ++j)
        meet.at(i, j) += left_null.at(i, r) * a.at(r, j);
    }
  return row_space(meet);
}

std::vector<Rational> reduce_against(const QMat& space,
                                     std::vector<Rational> v) {
  for (int i = 0, col = 0; i < space.rows(); ++i) {
    while (col < space.cols() && space.at(i, col) == 0) ++col;
    if (col >= space.cols()) break;
    if (v[col] == 0) continue;
    Rational factor = v[col];
    for (int j = col; j < space.cols(); ++j)
      v[j] -= factor * space.at(i, j);
  }
  return v;
}

bool row_space_contains(const QMat& space, const QMat& vectors) {
  for (int i = 0; i < vectors.rows(); ++i) {
    auto rest = reduce_against(space, vectors.row_vector(i));
    for (const auto& x : rest)
      if (x != 0) return false;
  }
  return true;
}

bool row_space_equal(const QMat& a, const QMat& b) {
  return row_space(a) == row_space(b);
}

} // namespace hilb
