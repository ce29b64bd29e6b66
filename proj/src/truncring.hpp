#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qmat.hpp"
#include "rat.hpp"

namespace hilb {

/// Truncation context for the local ring Q[u,v] with every monomial of total
/// degree >= order discarded. The canonical basis lists monomials by total
/// degree, then by descending u-power: 1, u, v, u^2, u*v, v^2, ...
/// Two contexts are interchangeable iff their orders agree; mixing orders is
/// a hard error everywhere, never an implicit re-truncation.
struct TruncRing {
  int order = 1;

  TruncRing() = default;
  explicit TruncRing(int n);

  int dim() const { return order * (order + 1) / 2; }

  /// Basis position of u^a v^b; requires a + b < order.
  int index_of(int a, int b) const;
  /// Inverse of index_of.
  std::pair<int, int> monomial_at(int index) const;

  bool operator==(const TruncRing&) const = default;
};

/// Throws DomainError unless the two contexts agree.
void require_same_ring(const TruncRing& a, const TruncRing& b,
                       const char* where);

/// Element of a truncated local ring: an exact-rational coefficient vector
/// over the canonical monomial basis.
class RingElem {
public:
  explicit RingElem(TruncRing ring)
      : ring_(ring), coeffs_(static_cast<size_t>(ring.dim())) {}
  RingElem(TruncRing ring, std::vector<Rational> coeffs);

  static RingElem one(TruncRing ring);
  static RingElem monomial(TruncRing ring, int a, int b,
                           const Rational& coeff = Rational(1));
  /// Parses the shared polynomial grammar over variables u, v. Monomials of
  /// degree >= order are truncated away, exactly as the ring law demands.
  static RingElem parse(TruncRing ring, const std::string& text);

  const TruncRing& ring() const { return ring_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& coeff(int a, int b) const {
    return coeffs_[ring_.index_of(a, b)];
  }

  bool is_zero() const;
  RingElem plus(const RingElem& other) const;
  RingElem minus(const RingElem& other) const;
  RingElem scaled(const Rational& factor) const;
  /// Product in the ring: convolution with everything of total degree
  /// >= order discarded.
  RingElem times(const RingElem& other) const;

  std::string to_string() const;
  bool operator==(const RingElem&) const = default;

private:
  TruncRing ring_;
  std::vector<Rational> coeffs_;
};

/// dim x dim matrix of multiplication by g: the column for basis monomial b
/// holds the coefficients of g*b, so M * coeffs(f) = coeffs(g*f).
QMat multiplication_matrix(const RingElem& g);

/// Invertible linear coordinate change u -> a*u + b*v, v -> c*u + d*v.
struct LinearSubst {
  Rational a, b, c, d;
};

/// Throws DomainError when ad - bc = 0.
LinearSubst make_subst(const Rational& a, const Rational& b, const Rational& c,
                       const Rational& d);

/// Ring automorphism induced by the substitution, as a dim x dim matrix in
/// the canonical basis (degree-graded, hence block triangular).
QMat substitution_matrix(TruncRing ring, const LinearSubst& subst);

RingElem substituted(const RingElem& f, const LinearSubst& subst);

} // namespace hilb
