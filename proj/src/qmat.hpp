#pragma once

#include <vector>

#include "rat.hpp"

namespace hilb {

/// Dense exact-rational matrix with the row-space operations the rest of the
/// library is built on. Canonical form for a subspace is the reduced row
/// echelon basis with zero rows dropped; two subspaces are equal iff their
/// canonical bases are identical.
class QMat {
public:
  QMat() = default;
  QMat(int rows, int cols)
      : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

  static QMat identity(int n);
  static QMat from_rows(const std::vector<std::vector<Rational>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Rational& at(int i, int j) const {
    return a_[static_cast<size_t>(i) * cols_ + j];
  }

  bool is_zero() const;
  bool operator==(const QMat& other) const;

  QMat transposed() const;
  QMat times(const QMat& other) const;
  QMat vstack(const QMat& below) const;
  QMat row(int i) const;
  std::vector<Rational> row_vector(int i) const;

  /// In-place reduced row echelon form. Returns the rank; pivot entries
  /// become 1 and pivot columns are cleared above and below.
  int rref_in_place();

  int rank() const;
  Rational determinant() const;

  /// Basis of the right null space {x : A x = 0}, one solution per row,
  /// itself in canonical rref form.
  QMat kernel() const;

private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

/// Canonical basis (rref, zero rows dropped) of the span of the given rows.
QMat row_space(const QMat& m);
QMat row_space_sum(const QMat& a, const QMat& b);
QMat row_space_intersection(const QMat& a, const QMat& b);

/// True iff every row of `vectors` lies in the span of `space` (canonical).
bool row_space_contains(const QMat& space, const QMat& vectors);
bool row_space_equal(const QMat& a, const QMat& b);

/// Reduces `v` modulo the canonical basis `space`; the result is the
/// canonical representative of v in the quotient.
std::vector<Rational> reduce_against(const QMat& space,
                                     std::vector<Rational> v);

} // namespace hilb
