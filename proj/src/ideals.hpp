#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qmat.hpp"
#include "truncring.hpp"

namespace hilb {

/// A proper ideal I of the truncated local ring, I containing the whole
/// degree->=order tail, stored as the canonical rref basis of its image in
/// the context. The represented ideal is span(rows) + m^order; the unit
/// ideal is deliberately not representable here (see from_generators).
class IdealSubspace {
public:
  /// Closes the span of the generators under multiplication by u and v.
  /// Returns nullopt when 1 ends up in the span (unit ideal): that is a
  /// distinguished outcome, not an error. An empty generator list yields
  /// the zero subspace, i.e. I = m^order.
  static std::optional<IdealSubspace> from_generators(
      TruncRing ring, const std::vector<RingElem>& generators);

  /// Wraps rows that already span an ideal; throws DomainError when the
  /// span is not closed under multiplication by u and v or spans the
  /// whole ring.
  static IdealSubspace from_rows(TruncRing ring, const QMat& rows);

  static IdealSubspace maximal_ideal(TruncRing ring);
  /// m^k as a subspace of the context; requires 1 <= k <= order.
  static IdealSubspace max_power(TruncRing ring, int k);
  /// The square of the maximal ideal; requires order >= 3 so that its
  /// colength-3 structure is faithfully represented.
  static IdealSubspace theta(TruncRing ring);
  /// Monomial ideal whose quotient staircase is the given partition
  /// (weakly decreasing positive parts; row i of the staircase holds the
  /// monomials u^i v^j, j < partition[i]).
  static IdealSubspace monomial_ideal(TruncRing ring,
                                      const std::vector<int>& partition);

  const TruncRing& ring() const { return ring_; }
  const QMat& rows() const { return rows_; }

  /// dim of the quotient ring by the represented ideal.
  int colength() const { return ring_.dim() - rows_.rows(); }

  bool contains(const IdealSubspace& other) const;
  bool contains_element(const RingElem& f) const;
  IdealSubspace intersect(const IdealSubspace& other) const;
  IdealSubspace sum(const IdealSubspace& other) const;

  /// Canonical representatives of the classes mod I annihilated by both u
  /// and v, one per row. Dimension >= 1 for every proper ideal.
  QMat socle() const;
  int socle_dim() const { return socle().rows(); }

  /// Minimal number of ideal generators, computed one context higher so
  /// the products with u, v are never lost to truncation. Requires
  /// order >= colength (the faithfulness bound); throws otherwise naming
  /// the required order.
  int min_generators() const;

  IdealSubspace substituted(const LinearSubst& subst) const;

  /// Image in a smaller context; requires m^smaller_order to lie inside
  /// the ideal so that no information is lost.
  IdealSubspace restricted(int smaller_order) const;

  bool operator==(const IdealSubspace&) const = default;

private:
  IdealSubspace(TruncRing ring, QMat rows)
      : ring_(ring), rows_(std::move(rows)) {}

  TruncRing ring_;
  QMat rows_; // canonical rref basis, zero rows dropped

  friend std::optional<IdealSubspace> close_span(TruncRing, QMat);
};

/// The is-an-ideal test on a raw subspace: true iff the span of the rows is
/// closed under multiplication by u and by v.
bool spans_ideal(TruncRing ring, const QMat& rows);

/// All weakly decreasing positive integer sequences summing to n.
std::vector<std::vector<int>> partitions_of(int n);

/// Every monomial ideal of colength n in the context, one per partition
/// of n, in the enumeration order of partitions_of. Requires order >= n.
std::vector<IdealSubspace> enumerate_monomial_ideals(TruncRing ring, int n);

} // namespace hilb
