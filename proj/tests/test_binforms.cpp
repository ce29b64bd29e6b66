#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ampleness.hpp"
#include "binforms.hpp"
#include "errors.hpp"

using namespace hilb;

namespace {

bool scheme_has_component(const PointedScheme& s, const ProjPoint& p,
                          int length) {
  for (const auto& c : s.components())
    if (c.point.same_point(p) && c.length() == length) return true;
  return false;
}

} // namespace

TEST_CASE("binary forms normalize projectively") {
  BinaryForm f = BinaryForm::parse("2*U^2 + 4*U*V");
  CHECK(f.degree() == 2);
  CHECK(f.f.c[0] == 1);
  CHECK(f.f.c[1] == 2);
  CHECK(f.f.c[2] == 0);
  CHECK(BinaryForm::parse(f.to_string()) == f);
  CHECK(BinaryForm::parse("-3*V^2") == BinaryForm::parse("V^2"));
  CHECK_THROWS_AS(BinaryForm::parse("U + V^2"), ParseError);
  CHECK_THROWS_AS(BinaryForm::of(BivarForm(2)), DomainError);
}

TEST_CASE("parameterized lines stay on their carrier") {
  LineWithParam line = LineWithParam::of(HomForm::parse("x2"));
  for (long u : {1L, 0L, 3L}) {
    for (long v : {0L, 1L, -2L}) {
      if (u == 0 && v == 0) continue;
      ProjPoint p = line.at(Rational(u), Rational(v));
      CHECK(line.line.eval(p.x[0], p.x[1], p.x[2]) == 0);
    }
  }
  ProjPoint p0(line.p0[0], line.p0[1], line.p0[2]);
  CHECK(line.at(Rational(1), Rational(0)).same_point(p0));
  CHECK_THROWS_AS(line.at(Rational(0), Rational(0)), DomainError);

  LineWithParam skew = LineWithParam::of(HomForm::parse("x0 + x1 + x2"));
  ProjPoint q = skew.at(Rational(2), Rational(5));
  CHECK(skew.line.eval(q.x[0], q.x[1], q.x[2]) == 0);
  CHECK_THROWS_AS(LineWithParam::of(HomForm::parse("x0^2")), DomainError);
}

TEST_CASE("pencil construction enforces its premises") {
  LineWithParam line = LineWithParam::of(HomForm::parse("x2"));
  CHECK_THROWS_AS(FormPencil::build(BinaryForm::parse("U^2"),
                                    BinaryForm::parse("V^3"), line),
                  DomainError);
  CHECK_THROWS_AS(FormPencil::build(BinaryForm::parse("U"),
                                    BinaryForm::parse("V"), line),
                  DomainError);
  // Shared root at (1 : 0).
  CHECK_THROWS_AS(FormPencil::build(BinaryForm::parse("U^2*V"),
                                    BinaryForm::parse("V^3"), line),
                  DomainError);
  FormPencil p = FormPencil::build(BinaryForm::parse("U^2"),
                                   BinaryForm::parse("V^2"), line);
  CHECK(p.n() == 2);
  CHECK(p.member(Rational(1), Rational(0)) == p.F().f);
  CHECK(p.member(Rational(0), Rational(2)) == bivar_scale(p.G().f, 2));
  CHECK_THROWS_AS(p.member(Rational(0), Rational(0)), DomainError);
}

TEST_CASE("discriminant of the diagonal pencil is the product of parameters") {
  LineWithParam line = LineWithParam::of(HomForm::parse("x2"));
  FormPencil p = FormPencil::build(BinaryForm::parse("U^2"),
                                   BinaryForm::parse("V^2"), line);
  BivarForm disc = pencil_discriminant(p);
  CHECK(disc.degree() == 2);
  CHECK(disc.c[0] == 0);
  CHECK(disc.c[1] != 0);
  CHECK(disc.c[2] == 0);
  CHECK(pencil_b_degree(p) == 2);
  CHECK(pencil_d_degree(p, Rational(1), Rational(1)) == 1);
  CHECK(pencil_d_degree(p, Rational(2), Rational(-3)) == 1);
  CHECK_THROWS_AS(pencil_d_degree(p, Rational(0), Rational(0)), DomainError);
}

TEST_CASE("the class of an embedded pencil") {
  LineWithParam line = LineWithParam::of(HomForm::parse("x1 - x2"));
  FormPencil p = FormPencil::build(BinaryForm::parse("U^3"),
                                   BinaryForm::parse("V^3"), line);
  CurveClass c = pencil_class(p);
  CHECK(c.n == 3);
  CHECK(c.a == 1);
  CHECK(c.b == -2);
  // Degree one against the polarization n D - B/2.
  DivisorClass h{3, Rational(3), make_rational(-1, 2)};
  CHECK(pair(h, c) == 1);
}

TEST_CASE("line components carry the line equation") {
  LineWithParam line = LineWithParam::of(HomForm::parse("x0 - 2*x1"));
  LocalComponent comp = line_component(line, Rational(1), Rational(1), 3);
  CHECK(comp.length() == 3);
  CHECK(line.line.eval(comp.point.x[0], comp.point.x[1], comp.point.x[2]) ==
        0);
  PointedScheme single({comp});
  CHECK(scheme_in_line(single, line.line));
  CHECK(line_component(line, Rational(0), Rational(1), 1).length() == 1);
  CHECK_THROWS_AS(line_component(line, Rational(1), Rational(0), 0),
                  DomainError);
}

TEST_CASE("embedding a split member") {
  LineWithParam line = LineWithParam::of(HomForm::parse("x2"));
  FormPencil p = FormPencil::build(BinaryForm::parse("U^2*V"),
                                   BinaryForm::parse("U^3 - 3*U^2*V + 3*U*V^2 - V^3"),
                                   line);
  // First member: double root at (0 : 1), simple root at (1 : 0).
  auto first = embed_member(p, Rational(1), Rational(0));
  REQUIRE(first.has_value());
  CHECK(first->length() == 3);
  CHECK(first->components().size() == 2);
  CHECK(scheme_has_component(*first, line.at(Rational(0), Rational(1)), 2));
  CHECK(scheme_has_component(*first, line.at(Rational(1), Rational(0)), 1));
  // Second member: (U - V)^3, one triple point.
  auto second = embed_member(p, Rational(0), Rational(1));
  REQUIRE(second.has_value());
  CHECK(second->components().size() == 1);
  CHECK(scheme_has_component(*second, line.at(Rational(1), Rational(1)), 3));
  CHECK(scheme_in_line(*second, line.line));
}

TEST_CASE("fractional roots split as well") {
  LineWithParam line = LineWithParam::of(HomForm::parse("x0"));
  FormPencil p = FormPencil::build(BinaryForm::parse("2*U^2 - 5*U*V + 3*V^2"),
                                   BinaryForm::parse("U^2"), line);
  auto s = embed_member(p, Rational(1), Rational(0));
  REQUIRE(s.has_value());
  CHECK(s->components().size() == 2);
  CHECK(scheme_has_component(*s, line.at(make_rational(3, 2), Rational(1)), 1));
  CHECK(scheme_has_component(*s, line.at(Rational(1), Rational(1)), 1));
}

TEST_CASE("irrational members refuse to embed") {
  LineWithParam line = LineWithParam::of(HomForm::parse("x2"));
  FormPencil p = FormPencil::build(BinaryForm::parse("U^3"),
                                   BinaryForm::parse("V^3"), line);
  CHECK_FALSE(embed_member(p, Rational(1), Rational(1)).has_value());
  auto triple = embed_member(p, Rational(1), Rational(0));
  REQUIRE(triple.has_value());
  CHECK(scheme_has_component(*triple, line.at(Rational(0), Rational(1)), 3));
  auto infinity = embed_member(p, Rational(0), Rational(1));
  REQUIRE(infinity.has_value());
  CHECK(scheme_has_component(*infinity, line.at(Rational(1), Rational(0)), 3));
}

TEST_CASE("moduli dimension of the pencil bundle") {
  CHECK(grass_bundle_moduli_dim(2) == 4);
  CHECK(grass_bundle_moduli_dim(3) == 6);
  CHECK_THROWS_AS(grass_bundle_moduli_dim(1), DomainError);
}
