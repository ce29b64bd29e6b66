#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "errors.hpp"
#include "homform.hpp"

using namespace hilb;

namespace {

BivarForm bv(const std::vector<long>& coeffs) {
  std::vector<Rational> c;
  for (long v : coeffs) c.emplace_back(v);
  return BivarForm(std::move(c));
}

} // namespace

TEST_CASE("trivariate parsing and printing") {
  HomForm f = HomForm::parse("x0^2 - 2*x1*x2");
  CHECK(f.degree == 2);
  CHECK(f.c[f.index_of(2, 0)] == 1);
  CHECK(f.c[f.index_of(0, 1)] == -2);
  CHECK(HomForm::parse(f.to_string()) == f);
  CHECK_THROWS_AS(HomForm::parse("x0 + x1^2"), ParseError);
  CHECK_THROWS_AS(HomForm::parse("0"), ParseError);
}

TEST_CASE("monomial indexing round trip") {
  HomForm f(3);
  CHECK(HomForm::coeff_count(3) == 10);
  for (int p = 0; p < 10; ++p) {
    auto [i, j] = f.exponents_at(p);
    CHECK(f.index_of(i, j) == p);
  }
  CHECK_THROWS_AS(f.index_of(2, 2), DomainError);
}

TEST_CASE("products and evaluation") {
  HomForm sum = HomForm::parse("x0 + x1");
  HomForm diff = HomForm::parse("x0 - x1");
  CHECK(sum.times(diff) == HomForm::parse("x0^2 - x1^2"));
  HomForm f = HomForm::parse("x0*x2 - x1^2");
  CHECK(f.eval(Rational(1), Rational(2), Rational(4)) == 0);
  CHECK(f.eval(Rational(1), Rational(1), Rational(4)) == 3);
  CHECK(f.normalized() == f);
  CHECK(f.scaled(Rational(-5)).normalized() == f);
}

TEST_CASE("bivariate arithmetic") {
  BivarForm x = bv({1, 0});  // X
  BivarForm y = bv({0, 1});  // Y
  CHECK(bivar_mul(x, y) == bv({0, 1, 0}));
  CHECK(bivar_add(x, y) == bv({1, 1}));
  CHECK(bivar_sub(x, x).is_zero());
  CHECK(bivar_scale(x, Rational(3)) == bv({3, 0}));
  CHECK_THROWS_AS(bivar_add(x, bv({1, 0, 0})), DomainError);
  CHECK(bv({1, 2, 1}).eval(Rational(1), Rational(1)) == 4);
}

TEST_CASE("exact division") {
  BivarForm a = bv({1, 2, 1});       // (X + Y)^2
  BivarForm b = bv({1, 1});          // X + Y
  CHECK(bivar_divexact(a, b) == b);
  CHECK(bivar_divexact(bv({0, 1, 0}), bv({0, 1})) == bv({1, 0})); // XY / Y
  CHECK_THROWS_AS(bivar_divexact(bv({1, 0, 1}), b), DomainError);
  CHECK_THROWS_AS(bivar_divexact(b, a), DomainError);
  // Round trip on an uneven product.
  BivarForm p = bivar_mul(bv({2, 0, 3}), bv({1, -1, 0, 5}));
  CHECK(bivar_divexact(p, bv({2, 0, 3})) == bv({1, -1, 0, 5}));
}

TEST_CASE("derivative in the first variable") {
  // d/dX of X^2 Y is 2 X Y.
  CHECK(bivar_derivative_x(bv({0, 1, 0, 0})) == bv({0, 2, 0}));
  CHECK(bivar_derivative_x(bv({1, 0, 0})) == bv({2, 0}));
  CHECK_THROWS_AS(bivar_derivative_x(bv({5})), DomainError);
}

TEST_CASE("bivariate gcd keeps track of both variables") {
  BivarForm xy = bv({0, 1, 0});
  BivarForm y2 = bv({0, 0, 1});
  CHECK(bivar_gcd(xy, y2) == bv({0, 1}));          // gcd(XY, Y^2) = Y
  CHECK(bivar_gcd(xy, bv({1, 0, 0})) == bv({1, 0})); // gcd(XY, X^2) = X
  CHECK(bivar_gcd(bv({0, 1, 0, 0}), bv({0, 0, 1, 0})) == bv({0, 1, 0})); // XY
  BivarForm a = bivar_mul(bv({1, -1}), bv({1, 0}));
  BivarForm c = bivar_mul(bv({1, -1}), bv({0, 1}));
  CHECK(bivar_gcd(a, c) == bv({1, -1}));
  CHECK(bivar_gcd(bv({1, 1}), bv({1, -1})).degree() == 0);
  CHECK_THROWS_AS(bivar_gcd(bv({0, 0}), xy), DomainError);
}

TEST_CASE("resultants detect common roots") {
  BivarForm f = bv({1, -2}); // U - 2V
  BivarForm g = bv({1, -3});
  CHECK(bivar_resultant(f, g) != 0);
  CHECK(bivar_resultant(f, bv({2, -4})) == 0);
  // Multiplicative in the first argument.
  BivarForm h = bv({1, 5});
  CHECK(bivar_resultant(bivar_mul(f, h), g) ==
        bivar_resultant(f, g) * bivar_resultant(h, g));
  CHECK_THROWS_AS(bivar_resultant(bv({3}), f), DomainError);
}

TEST_CASE("trivariate gcd") {
  HomForm g = HomForm::parse("x0 - x1");
  HomForm a = g.times(HomForm::parse("x0 + x2"));
  HomForm b = g.times(HomForm::parse("x1 + x2"));
  CHECK(hom_gcd(a, b) == g);
  CHECK(hom_gcd(a, a) == a.normalized());
  CHECK(hom_gcd(HomForm::parse("x0"), HomForm::parse("x1")).degree == 0);
  // Content-only gcd: both polynomials are multiples of x2.
  HomForm c = HomForm::parse("x2").times(HomForm::parse("x0 + x1"));
  HomForm d = HomForm::parse("x2").times(HomForm::parse("x0 - x1"));
  CHECK(hom_gcd(c, d) == HomForm::parse("x2"));
  // Mixed content and x0-part.
  HomForm e = HomForm::parse("x2").times(g);
  CHECK(hom_gcd(e.times(HomForm::parse("x0 + x2")), e.times(g)) ==
        e.normalized());
  CHECK_THROWS_AS(hom_gcd(HomForm(2), a), DomainError);
}

TEST_CASE("divisibility of forms") {
  HomForm line = HomForm::parse("x0 + 2*x1 - x2");
  HomForm quad = line.times(HomForm::parse("x1 - x2"));
  CHECK(hom_divides(line, quad));
  CHECK_FALSE(hom_divides(HomForm::parse("x0"), quad));
  CHECK_FALSE(hom_divides(quad, line));
  CHECK(hom_divides(line, line.scaled(Rational(7))));
}

TEST_CASE("rows as forms and products of spaces") {
  QMat id = QMat::identity(3);
  CHECK(form_from_row(id, 0, 1) == HomForm::parse("x0"));
  CHECK(form_from_row(id, 2, 1) == HomForm::parse("x2"));
  CHECK_THROWS_AS(form_from_row(id, 0, 2), DomainError);

  QMat prod = product_space(id, 1, HomForm::parse("x2"));
  CHECK(prod.rows() == 3);
  CHECK(prod.cols() == HomForm::coeff_count(2));
  // The product space is x2 * (all linear forms).
  for (int i = 0; i < prod.rows(); ++i) {
    HomForm f = form_from_row(prod, i, 2);
    CHECK(hom_divides(HomForm::parse("x2"), f));
  }
}
