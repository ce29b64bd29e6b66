#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "errors.hpp"
#include "schemes.hpp"

using namespace hilb;

namespace {

ProjPoint pt(long a, long b, long c) {
  return ProjPoint(Rational(a), Rational(b), Rational(c));
}

} // namespace

TEST_CASE("projective points compare up to scale") {
  CHECK(pt(1, 2, 3).same_point(pt(2, 4, 6)));
  CHECK(pt(1, 2, 3).same_point(pt(-1, -2, -3)));
  CHECK_FALSE(pt(1, 2, 3).same_point(pt(1, 2, 4)));
  CHECK_THROWS_AS(pt(0, 0, 0), DomainError);
}

TEST_CASE("chart selection: largest coordinate, lowest index on ties") {
  CHECK(pt(1, -3, 2).chart() == 1);
  CHECK(pt(2, -2, 1).chart() == 0);
  CHECK(pt(0, 0, 5).chart() == 2);
  ProjPoint p(make_rational(1, 2), make_rational(2, 3), Rational(0));
  CHECK(p.chart() == 1);
}

TEST_CASE("affine coordinates divide by the chart coordinate") {
  ProjPoint p = pt(1, -3, 2);
  auto a = p.affine(1);
  CHECK(a[0] == make_rational(-1, 3));
  CHECK(a[1] == make_rational(-2, 3));
  auto b = p.affine(0);
  CHECK(b[0] == Rational(-3));
  CHECK(b[1] == Rational(2));
  CHECK_THROWS_AS(pt(1, 0, 2).affine(1), DomainError);
}

TEST_CASE("local components pin chart validity") {
  TruncRing ring(2);
  IdealSubspace m = IdealSubspace::maximal_ideal(ring);
  LocalComponent def(pt(3, 1, 1), m);
  CHECK(def.chart == 0);
  CHECK(def.length() == 1);
  LocalComponent explicit_chart(pt(3, 1, 1), 2, m);
  CHECK(explicit_chart.chart == 2);
  CHECK_THROWS_AS(LocalComponent(pt(1, 0, 2), 1, m), DomainError);
}

TEST_CASE("schemes require distinct support") {
  TruncRing ring(2);
  IdealSubspace m = IdealSubspace::maximal_ideal(ring);
  std::vector<LocalComponent> comps = {LocalComponent(pt(1, 0, 0), m),
                                       LocalComponent(pt(2, 0, 0), m)};
  CHECK_THROWS_AS(PointedScheme{comps}, DomainError);
  CHECK_THROWS_AS(PointedScheme(std::vector<LocalComponent>{}), DomainError);
}

TEST_CASE("length adds over components") {
  TruncRing three(3);
  std::vector<LocalComponent> comps = {
      LocalComponent(pt(1, 0, 0), IdealSubspace::theta(three)),
      LocalComponent(pt(0, 1, 0),
                     IdealSubspace::maximal_ideal(TruncRing(2)))};
  PointedScheme s(comps);
  CHECK(s.length() == 4);
  CHECK(s.components().size() == 2);
}

TEST_CASE("reduced schemes have length-one components") {
  PointedScheme s = reduced_scheme({pt(1, 0, 0), pt(0, 1, 0), pt(1, 1, 1)});
  CHECK(s.length() == 3);
  for (const auto& c : s.components()) CHECK(c.length() == 1);
}

TEST_CASE("support lines") {
  PointedScheme on_line = reduced_scheme({pt(1, 0, 0), pt(0, 1, 0),
                                          pt(1, 1, 0)});
  auto l = support_line(on_line);
  REQUIRE(l.has_value());
  CHECK((*l)[0] == 0);
  CHECK((*l)[1] == 0);
  CHECK((*l)[2] != 0);
  for (const auto& c : on_line.components()) {
    Rational dot = (*l)[0] * c.point.x[0] + (*l)[1] * c.point.x[1] +
                   (*l)[2] * c.point.x[2];
    CHECK(dot == 0);
  }

  PointedScheme pair = reduced_scheme({pt(1, 2, 3), pt(0, 1, 1)});
  auto through = support_line(pair);
  REQUIRE(through.has_value());
  for (const auto& c : pair.components()) {
    Rational dot = (*through)[0] * c.point.x[0] + (*through)[1] * c.point.x[1] +
                   (*through)[2] * c.point.x[2];
    CHECK(dot == 0);
  }

  CHECK_FALSE(support_line(reduced_scheme({pt(1, 2, 3)})).has_value());
  CHECK_FALSE(
      support_line(reduced_scheme({pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1)}))
          .has_value());
}
