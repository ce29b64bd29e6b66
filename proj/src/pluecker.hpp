#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qmat.hpp"

namespace hilb {

/// Projective coordinates of a k-dimensional subspace of an amb-dimensional
/// space: the k x k minors over lexicographically ordered k-subsets of
/// column indices, scaled so the first nonzero coordinate is 1. Equality of
/// normalized vectors is exactly equality of subspaces.
struct PlueckerVector {
  int sub_dim = 0; // k
  int amb_dim = 0;
  std::vector<Rational> coords; // lex order over k-subsets

  bool operator==(const PlueckerVector&) const = default;

  /// Coordinate for an ascending k-subset of column indices.
  const Rational& coord(const std::vector<int>& subset) const;
};

/// Lexicographic enumeration of ascending k-subsets of {0..amb-1}.
std::vector<std::vector<int>> lex_subsets(int amb, int k);

/// Minor vector of the subspace spanned by the rows; rows must be
/// independent. Computed on the smaller of the primal and dual sides, so
/// both low-dimensional and low-codimensional subspaces are cheap.
PlueckerVector pluecker_coords(const QMat& rows);

/// Inverse of pluecker_coords up to row operations: a canonical basis of
/// the unique subspace with the given minors. Together with a rank check
/// this validates that a coordinate vector satisfies the quadric relations.
QMat reconstruct_subspace(const PlueckerVector& p);

/// A pencil spanned by two subspaces meeting in codimension one each:
/// member(t:s) = common + <t*first_extra + s*second_extra>.
struct SubspacePencil {
  QMat common; // dim k-1, canonical
  QMat span;   // dim k+1, canonical
  std::vector<Rational> first_extra, second_extra;

  QMat member(const Rational& t, const Rational& s) const;
};

/// Requires dim(v1 meet v2) = k-1 (equivalently dim(v1 + v2) = k+1); throws
/// DomainError otherwise.
SubspacePencil pencil_from_two(const QMat& v1, const QMat& v2);

struct LineFamilyCheck {
  bool is_line = false;
  std::string reason;
  std::optional<SubspacePencil> pencil;
};

/// True iff the (at least two distinct) samples all lie on one pencil:
/// the first two distinct samples span it, every further sample contains
/// the common part and sits inside the span, and as a cross-check the
/// Plücker vectors of the samples span a subspace of dimension exactly 2
/// whenever three or more distinct samples are given.
LineFamilyCheck is_line_family(std::span<const QMat> samples);

} // namespace hilb
