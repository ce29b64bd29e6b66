#pragma once

#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ideals.hpp"
#include "schemes.hpp"

namespace hilb {

/// Pencil of colength-n ideals I(t:s) = eta + <t*f1 + s*f2> over a fixed
/// punctual base ideal eta of colength n+1 containing m^n. The classes of
/// f1, f2 are independent socle elements of eta, which is exactly the
/// condition for every member to be an ideal.
class BetaPencil {
 public:
  /// Validates every defining condition; throws DomainError naming the
  /// violated one. Requires ring order >= n so the tail condition m^n
  /// inside eta is a statement, not an artifact of truncation.
  static BetaPencil build(const IdealSubspace& eta, const RingElem& f1,
                          const RingElem& f2);

  int n() const { return n_; }
  const IdealSubspace& eta() const { return eta_; }
  const RingElem& f1() const { return f1_; }
  const RingElem& f2() const { return f2_; }
  /// Canonical basis of eta + <f1, f2>, the span of any two distinct members.
  const QMat& span_rows() const { return span_; }

  /// Member at (t : s) != (0 : 0), an ideal of colength n.
  IdealSubspace member(const Rational& t, const Rational& s) const;

 private:
  BetaPencil(IdealSubspace eta, RingElem f1, RingElem f2, QMat span, int n)
      : eta_(std::move(eta)), f1_(std::move(f1)), f2_(std::move(f2)),
        span_(std::move(span)), n_(n) {}

  IdealSubspace eta_;
  RingElem f1_, f2_;
  QMat span_;
  int n_;
};

struct RecognitionFailure {
  std::string condition;
};

using RecognitionResult = std::variant<BetaPencil, RecognitionFailure>;

/// Decides whether the samples (at least two, sharing one context) are
/// members of a single pencil: intersects the first two samples, checks the
/// base-ideal conditions, and checks that every sample contains the
/// intersection and lies inside the span of the first two. On success the
/// returned pencil reproduces the family; on failure the violated condition
/// is named.
RecognitionResult recognize(std::span<const IdealSubspace> samples);

/// Decomposition of a family of length-n schemes into one moving punctual
/// pencil and a common fixed part.
struct Decomposition {
  ProjPoint moving_point;
  int chart;
  BetaPencil pencil;                 // local pencil at the moving point
  std::vector<IdealSubspace> moving; // distinct local members, input order
  std::vector<LocalComponent> fixed; // shared components away from the point
  int moving_length;                 // colength k of the members, 2 <= k <= n
};

using DecomposeResult = std::variant<Decomposition, RecognitionFailure>;

/// Succeeds iff the samples agree at every support point except exactly one,
/// and the local ideals at that point form a recognizable pencil.
DecomposeResult decompose_moving_point(std::span<const PointedScheme> samples);

/// (dimension, expected dimension) = (2n-2, 2n-3) of the family of such
/// pencils; requires n >= 2.
std::pair<int, int> beta_moduli_dim(int n);

} // namespace hilb
