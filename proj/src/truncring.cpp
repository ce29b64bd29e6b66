#include "truncring.hpp"

#include "errors.hpp"
#include "polyparse.hpp"

namespace hilb {

TruncRing::TruncRing(int n) : order(n) {
  if (n < 1) throw DomainError("truncation order must be at least 1");
}

int TruncRing::index_of(int a, int b) const {
  int d = a + b;
  if (a < 0 || b < 0 || d >= order)
    throw DomainError("monomial outside the truncation context");
  // Degree block d starts at d(d+1)/2; u^d comes first within the block.
  return d * (d + 1) / 2 + (d - a);
}

std::pair<int, int> TruncRing::monomial_at(int index) const {
  if (index < 0 || index >= dim())
    throw DomainError("basis index out of range");
  int d = 0;
  while ((d + 1) * (d + 2) / 2 <= index) ++d;
  int offset = index - d * (d + 1) / 2;
  return {d - offset, offset};
}

void require_same_ring(const TruncRing& a, const TruncRing& b,
                       const char* where) {
  if (!(a == b))
    throw DomainError(std::string(where) + ": mixed truncation contexts (N=" +
                      std::to_string(a.order) + " vs N=" +
                      std::to_string(b.order) + ")");
}

RingElem::RingElem(TruncRing ring, std::vector<Rational> coeffs)
    : ring_(ring), coeffs_(std::move(coeffs)) {
  if (static_cast<int>(coeffs_.size()) != ring_.dim())
    throw DomainError("coefficient vector length does not match the context");
}

RingElem RingElem::one(TruncRing ring) { return monomial(ring, 0, 0); }

RingElem RingElem::monomial(TruncRing ring, int a, int b,
                            const Rational& coeff) {
  RingElem e(ring);
  e.coeffs_[ring.index_of(a, b)] = coeff;
  return e;
}

RingElem RingElem::parse(TruncRing ring, const std::string& text) {
  SparsePoly poly = parse_polynomial(text, {"u", "v"});
  RingElem e(ring);
  for (const auto& [expo, coeff] : poly) {
    if (expo[0] + expo[1] >= ring.order) continue; // truncated away
    e.coeffs_[ring.index_of(expo[0], expo[1])] += coeff;
  }
  return e;
}

bool RingElem::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

RingElem RingElem::plus(const RingElem& other) const {
  require_same_ring(ring_, other.ring_, "plus");
  RingElem e(ring_);
  for (size_t i = 0; i < coeffs_.size(); ++i)
    e.coeffs_[i] = coeffs_[i] + other.coeffs_[i];
  return e;
}

RingElem RingElem::minus(const RingElem& other) const {
  require_same_ring(ring_, other.ring_, "minus");
  RingElem e(ring_);
  for (size_t i = 0; i < coeffs_.size(); ++i)
    e.coeffs_[i] = coeffs_[i] - other.coeffs_[i];
  return e;
}

RingElem RingElem::scaled(const Rational& factor) const {
  RingElem e(ring_);
  for (size_t i = 0; i < coeffs_.size(); ++i)
    e.coeffs_[i] = coeffs_[i] * factor;
  return e;
}

RingElem RingElem::times(const RingElem& other) const {
  require_same_ring(ring_, other.ring_, "times");
  RingElem e(ring_);
  int n = ring_.order;
  for (int i = 0; i < ring_.dim(); ++i) {
    if (coeffs_[i] == 0) continue;
    auto [a1, b1] = ring_.monomial_at(i);
    for (int j = 0; j < ring_.dim(); ++j) {
      if (other.coeffs_[j] == 0) continue;
      auto [a2, b2] = ring_.monomial_at(j);
      if (a1 + b1 + a2 + b2 >= n) continue;
      e.coeffs_[ring_.index_of(a1 + a2, b1 + b2)] +=
          coeffs_[i] * other.coeffs_[j];
    }
  }
  return e;
}

std::string RingElem::to_string() const {
  std::vector<std::pair<std::vector<int>, Rational>> terms;
  for (int i = 0; i < ring_.dim(); ++i) {
    if (coeffs_[i] == 0) continue;
    auto [a, b] = ring_.monomial_at(i);
    terms.push_back({{a, b}, coeffs_[i]});
  }
  return format_terms(terms, {"u", "v"});
}

QMat multiplication_matrix(const RingElem& g) {
  const TruncRing& ring = g.ring();
  QMat m(ring.dim(), ring.dim());
  for (int j = 0; j < ring.dim(); ++j) {
    auto [a, b] = ring.monomial_at(j);
    RingElem image = g.times(RingElem::monomial(ring, a, b));
    for (int i = 0; i < ring.dim(); ++i) m.at(i, j) = image.coeffs()[i];
  }
  return m;
}

LinearSubst make_subst(const Rational& a, const Rational& b, const Rational& c,
                       const Rational& d) {
  Rational det = a * d - b * c;
  if (det == 0) throw DomainError("coordinate change is not invertible");
  return LinearSubst{a, b, c, d};
}

QMat substitution_matrix(TruncRing ring, const LinearSubst& subst) {
  if (ring.order == 1) return QMat::identity(1);
  RingElem image_u = RingElem::monomial(ring, 1, 0, subst.a)
                         .plus(RingElem::monomial(ring, 0, 1, subst.b));
  RingElem image_v = RingElem::monomial(ring, 1, 0, subst.c)
                         .plus(RingElem::monomial(ring, 0, 1, subst.d));
  QMat m(ring.dim(), ring.dim());
  for (int j = 0; j < ring.dim(); ++j) {
    auto [a, b] = ring.monomial_at(j);
    RingElem image = RingElem::one(ring);
    for (int i = 0; i < a; ++i) image = image.times(image_u);
    for (int i = 0; i < b; ++i) image = image.times(image_v);
    for (int i = 0; i < ring.dim(); ++i) m.at(i, j) = image.coeffs()[i];
  }
  return m;
}

RingElem substituted(const RingElem& f, const LinearSubst& subst) {
  // order == 1 has no u, v presence at all; substitution is the identity.
  if (f.ring().order == 1) return f;
  QMat m = substitution_matrix(f.ring(), subst);
  QMat col(f.ring().dim(), 1);
  for (int i = 0; i < f.ring().dim(); ++i) col.at(i, 0) = f.coeffs()[i];
  QMat image = m.times(col);
  std::vector<Rational> coeffs(f.ring().dim());
  for (int i = 0; i < f.ring().dim(); ++i) coeffs[i] = image.at(i, 0);
  return RingElem(f.ring(), std::move(coeffs));
}

} // namespace hilb
