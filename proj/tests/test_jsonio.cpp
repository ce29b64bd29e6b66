#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "errors.hpp"
#include "jsonio.hpp"

using namespace hilb;

TEST_CASE("rationals as strings, never floats") {
  CHECK(rational_json(make_rational(3, 4)) == Json("3/4"));
  CHECK(rational_json(make_rational(5)) == Json("5"));
  CHECK(rational_json(make_rational(-1, 2)) == Json("-1/2"));
  CHECK(rational_from_json(Json(7)) == 7);
  CHECK(rational_from_json(Json("-2/6")) == make_rational(-1, 3));
  CHECK(rational_from_json(Json("-4")) == -4);
  CHECK_THROWS_AS(rational_from_json(Json(2.5)), ParseError);
  CHECK_THROWS_AS(rational_from_json(Json("abc")), ParseError);
  CHECK_THROWS_AS(rational_from_json(Json("1/0")), ParseError);
  CHECK_THROWS_AS(rational_from_json(Json("1.5")), ParseError);
}

TEST_CASE("matrix round trip") {
  QMat m(2, 3);
  m.at(0, 0) = make_rational(1, 2);
  m.at(1, 2) = Rational(-7);
  Json j = matrix_json(m);
  CHECK(j.is_array());
  CHECK(j.size() == 2);
  CHECK(j[0][0] == Json("1/2"));
  QMat back = matrix_from_json(j, 3);
  CHECK(back == m);
  CHECK_THROWS_AS(matrix_from_json(j, 4), ParseError);
  CHECK_THROWS_AS(matrix_from_json(Json::object(), 3), ParseError);
}

TEST_CASE("ideal serialization carries its invariants") {
  TruncRing ring(3);
  IdealSubspace theta = IdealSubspace::theta(ring);
  Json j = ideal_json(theta);
  CHECK(j["N"] == 3);
  CHECK(j["colength"] == 3);
  CHECK(j["socle_dim"] == 2);
  auto back = ideal_from_json(j);
  REQUIRE(back.has_value());
  CHECK(*back == theta);
}

TEST_CASE("ideals parse from generators or rows") {
  Json gens = {{"N", 3}, {"generators", {"u^2", "u*v", "v^2"}}};
  auto ideal = ideal_from_json(gens);
  REQUIRE(ideal.has_value());
  CHECK(ideal->colength() == 3);

  Json unit = {{"N", 3}, {"generators", {"1 + u"}}};
  CHECK_FALSE(ideal_from_json(unit).has_value());

  Json no_order = {{"generators", {"u"}}};
  CHECK_THROWS_AS(ideal_from_json(no_order), ParseError);
  Json neither = {{"N", 3}};
  CHECK_THROWS_AS(ideal_from_json(neither), ParseError);
  Json bad_gen = {{"N", 3}, {"generators", {"u^"}}};
  CHECK_THROWS_AS(ideal_from_json(bad_gen), ParseError);
}

TEST_CASE("scheme round trip") {
  TruncRing three(3);
  std::vector<LocalComponent> comps = {
      LocalComponent(ProjPoint(Rational(1), Rational(0), Rational(0)),
                     IdealSubspace::theta(three)),
      LocalComponent(ProjPoint(Rational(0), Rational(2), Rational(1)),
                     IdealSubspace::maximal_ideal(TruncRing(2)))};
  PointedScheme s(std::move(comps));
  Json j = scheme_json(s);
  CHECK(j["length"] == 4);
  CHECK(j["points"].size() == 2);
  PointedScheme back = scheme_from_json(j);
  CHECK(back.length() == s.length());
  REQUIRE(back.components().size() == s.components().size());
  for (size_t i = 0; i < s.components().size(); ++i) {
    CHECK(back.components()[i].point.same_point(s.components()[i].point));
    CHECK(back.components()[i].chart == s.components()[i].chart);
    CHECK(back.components()[i].local == s.components()[i].local);
  }
}

TEST_CASE("scheme parsing rejects degenerate input") {
  Json unit_local = {
      {"points",
       {{{"coords", {"1", "0", "0"}},
         {"local", {{"N", 2}, {"generators", {"1"}}}}}}}};
  CHECK_THROWS_AS(scheme_from_json(unit_local), DomainError);
  Json two_coords = {
      {"points",
       {{{"coords", {"1", "0"}},
         {"local", {{"N", 2}, {"generators", Json::array()}}}}}}};
  CHECK_THROWS_AS(scheme_from_json(two_coords), ParseError);

  // Chart defaults to the largest coordinate when omitted.
  Json defaulted = {
      {"points",
       {{{"coords", {"1", "-5", "2"}},
         {"local", {{"N", 1}, {"generators", Json::array()}}}}}}};
  PointedScheme s = scheme_from_json(defaulted);
  CHECK(s.components()[0].chart == 1);
}

TEST_CASE("pluecker vectors list only nonzero coordinates") {
  QMat rows(2, 4);
  rows.at(0, 0) = 1;
  rows.at(1, 1) = 1;
  Json j = pluecker_json(pluecker_coords(rows));
  CHECK(j["k"] == 2);
  CHECK(j["amb"] == 4);
  CHECK(j["coords"].size() == 1);
  CHECK(j["coords"]["0,1"] == Json("1"));
}

TEST_CASE("class expressions over the named bases") {
  DivisorClass d = divisor_class_from_json(4, Json("3*D - 1/2*B"));
  CHECK(d.n == 4);
  CHECK(d.p == 3);
  CHECK(d.q == make_rational(-1, 2));
  CurveClass c = curve_class_from_json(4, Json("bl - 3*bn"));
  CHECK(c.a == 1);
  CHECK(c.b == -3);
  CHECK(curve_class_from_json(2, Json("bn")).b == 1);
  CHECK_THROWS_AS(divisor_class_from_json(4, Json("D*B")), ParseError);
  CHECK_THROWS_AS(divisor_class_from_json(4, Json("D^2")), ParseError);

  DivisorClass obj = divisor_class_from_json(5, Json{{"p", 2}, {"q", "-1/2"}});
  CHECK(obj.p == 2);
  CHECK(obj.q == make_rational(-1, 2));
  CurveClass cobj = curve_class_from_json(5, Json{{"a", 0}, {"b", 1}});
  CHECK(cobj.a == 0);
  CHECK(cobj.b == 1);

  Json dj = divisor_class_json(d);
  CHECK(dj["n"] == 4);
  CHECK(dj["p"] == Json("3"));
  CHECK(dj["q"] == Json("-1/2"));
  Json cj = curve_class_json(c);
  CHECK(cj["a"] == Json("1"));
  CHECK(cj["b"] == Json("-3"));
}
