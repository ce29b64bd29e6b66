#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "errors.hpp"
#include "truncring.hpp"

using namespace hilb;

TEST_CASE("basis order: total degree, then descending u-power") {
  TruncRing ring(3);
  CHECK(ring.dim() == 6);
  CHECK(ring.index_of(0, 0) == 0);
  CHECK(ring.index_of(1, 0) == 1);
  CHECK(ring.index_of(0, 1) == 2);
  CHECK(ring.index_of(2, 0) == 3);
  CHECK(ring.index_of(1, 1) == 4);
  CHECK(ring.index_of(0, 2) == 5);
  for (int i = 0; i < ring.dim(); ++i) {
    auto [a, b] = ring.monomial_at(i);
    CHECK(ring.index_of(a, b) == i);
  }
  CHECK_THROWS_AS(ring.index_of(2, 1), DomainError);
  CHECK_THROWS_AS(TruncRing(0), DomainError);
}

TEST_CASE("parse truncates away the tail") {
  TruncRing ring(3);
  RingElem f = RingElem::parse(ring, "1 + 2*u - v^2 + u^5");
  CHECK(f.coeff(0, 0) == 1);
  CHECK(f.coeff(1, 0) == 2);
  CHECK(f.coeff(0, 1) == 0);
  CHECK(f.coeff(0, 2) == -1);
  CHECK(RingElem::parse(ring, "u^3").is_zero());
  CHECK(RingElem::parse(ring, f.to_string()) == f);
}

TEST_CASE("ring law: products are truncated convolution") {
  TruncRing two(2);
  RingElem u2 = RingElem::monomial(two, 1, 0);
  RingElem v2 = RingElem::monomial(two, 0, 1);
  CHECK(u2.times(v2).is_zero());

  TruncRing three(3);
  RingElem s = RingElem::parse(three, "u + v");
  CHECK(s.times(s) == RingElem::parse(three, "u^2 + 2*u*v + v^2"));
  CHECK(RingElem::one(three).times(s) == s);
}

TEST_CASE("arithmetic matches coefficient arithmetic") {
  TruncRing ring(4);
  RingElem f = RingElem::parse(ring, "1 + u*v - 3*v^3");
  RingElem g = RingElem::parse(ring, "2 - u*v");
  CHECK(f.plus(g) == RingElem::parse(ring, "3 - 3*v^3"));
  CHECK(f.minus(f).is_zero());
  CHECK(f.scaled(make_rational(1, 2)) ==
        RingElem::parse(ring, "1/2 + 1/2*u*v - 3/2*v^3"));
  TruncRing other(3);
  CHECK_THROWS_AS(f.plus(RingElem::one(other)), DomainError);
}

TEST_CASE("multiplication matrix represents left multiplication") {
  TruncRing ring(3);
  RingElem g = RingElem::parse(ring, "1 + u");
  QMat m = multiplication_matrix(g);
  RingElem f = RingElem::parse(ring, "u + v - 2*u*v");
  QMat col(ring.dim(), 1);
  for (int i = 0; i < ring.dim(); ++i) col.at(i, 0) = f.coeffs()[i];
  QMat image = m.times(col);
  RingElem product = g.times(f);
  for (int i = 0; i < ring.dim(); ++i)
    CHECK(image.at(i, 0) == product.coeffs()[i]);
}

TEST_CASE("substitution is a ring automorphism") {
  TruncRing ring(3);
  LinearSubst shear = make_subst(Rational(1), Rational(1), Rational(0),
                                 Rational(1)); // u -> u + v
  RingElem u = RingElem::monomial(ring, 1, 0);
  CHECK(substituted(u, shear) == RingElem::parse(ring, "u + v"));
  RingElem usq = RingElem::monomial(ring, 2, 0);
  CHECK(substituted(usq, shear) == RingElem::parse(ring, "u^2 + 2*u*v + v^2"));

  // Multiplicativity on a non-monomial pair.
  RingElem f = RingElem::parse(ring, "1 + u - v");
  RingElem g = RingElem::parse(ring, "u + 2*v");
  LinearSubst t = make_subst(Rational(2), Rational(1), Rational(1),
                             Rational(1));
  CHECK(substituted(f.times(g), t) == substituted(f, t).times(substituted(g, t)));
}

TEST_CASE("singular substitutions are rejected") {
  CHECK_THROWS_AS(
      make_subst(Rational(1), Rational(2), Rational(2), Rational(4)),
      DomainError);
}

TEST_CASE("substitution matrix inverts with the inverse substitution") {
  TruncRing ring(4);
  LinearSubst shear = make_subst(Rational(1), Rational(1), Rational(0),
                                 Rational(1));
  LinearSubst back = make_subst(Rational(1), Rational(-1), Rational(0),
                                Rational(1));
  QMat product =
      substitution_matrix(ring, shear).times(substitution_matrix(ring, back));
  CHECK(product == QMat::identity(ring.dim()));
}
