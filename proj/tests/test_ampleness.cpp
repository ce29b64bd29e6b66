#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ampleness.hpp"
#include "errors.hpp"

using namespace hilb;

namespace {

ProjPoint pt(long a, long b, long c) {
  return ProjPoint(Rational(a), Rational(b), Rational(c));
}

PointedScheme fat_point(long a, long b, long c) {
  return PointedScheme(
      {LocalComponent(pt(a, b, c), IdealSubspace::theta(TruncRing(3)))});
}

} // namespace

TEST_CASE("section counts for reduced points") {
  PointedScheme one = reduced_scheme({pt(1, 2, 1)});
  CHECK(h0_ideal_twist(one, 1) == 2);
  CHECK(h0_ideal_twist(one, 2) == 5);
  PointedScheme three = reduced_scheme({pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1)});
  CHECK(h0_ideal_twist(three, 1) == 0);
  CHECK(h0_ideal_twist(three, 2) == 3);
}

TEST_CASE("section counts for a first-order neighborhood") {
  PointedScheme fat = fat_point(0, 0, 1);
  CHECK(fat.length() == 3);
  CHECK(h0_ideal_twist(fat, 1) == 0);
  CHECK(h0_ideal_twist(fat, 2) == 3);
  CHECK(h0_ideal_twist(fat, 3) == 7);
  // Away from the distinguished charts too.
  CHECK(h0_ideal_twist(fat_point(1, -2, 3), 2) == 3);
}

TEST_CASE("vanishing forms really vanish on the scheme") {
  PointedScheme fat = fat_point(1, 1, 1);
  QMat basis = vanishing_forms(fat, 2);
  CHECK(basis.rows() == h0_ideal_twist(fat, 2));
  for (int i = 0; i < basis.rows(); ++i) {
    HomForm f = form_from_row(basis, i, 2);
    CHECK(form_vanishes_on(fat, f));
    // Vanishing to second order: both points of a short segment through
    // the support would not be enough, the full jet must die. Evaluate at
    // the support as a sanity cross-check.
    CHECK(f.eval(Rational(1), Rational(1), Rational(1)) == 0);
  }
  CHECK_FALSE(form_vanishes_on(fat, HomForm::parse("x0^2")));
}

TEST_CASE("containment in a line is a jet condition") {
  PointedScheme collinear = reduced_scheme({pt(1, -1, 0), pt(0, 0, 1)});
  CHECK(scheme_in_line(collinear, HomForm::parse("x0 + x1")));
  CHECK_FALSE(scheme_in_line(collinear, HomForm::parse("x0")));
  // A fat point has collinear support but does not embed in any line.
  PointedScheme fat = fat_point(0, 0, 1);
  CHECK_FALSE(scheme_in_line(fat, HomForm::parse("x0")));
  CHECK_FALSE(scheme_in_line(fat, HomForm::parse("x1")));
  CHECK_THROWS_AS(scheme_in_line(fat, HomForm::parse("x1^2")), DomainError);
}

TEST_CASE("numerical k-very-ampleness test") {
  for (int n = 2; n <= 12; ++n)
    CHECK_FALSE(kva_violation(n, n).has_value());
  auto bad = kva_violation(1, 2);
  REQUIRE(bad.has_value());
  CHECK(*bad == 1);
  CHECK(kva_applicable(1, 2));
  CHECK_FALSE(kva_applicable(1, 3));
  CHECK_THROWS_AS(kva_violation(1, 3), DomainError);
  CHECK(kva_applicable(7, 7));
  CHECK_FALSE(kva_violation(3, 2).has_value());
}

TEST_CASE("section map images live on the Grassmannian") {
  PointedScheme two = reduced_scheme({pt(1, 0, 0), pt(0, 1, 0)});
  PhiImage image = phi_map(two);
  CHECK(image.twist == 2);
  CHECK(image.subspace.rows() == HomForm::coeff_count(2) - 2);
  CHECK(reconstruct_subspace(image.coords) == image.subspace);
  PhiImage cubic = phi_map(two, 3);
  CHECK(cubic.twist == 3);
  CHECK(cubic.subspace.rows() == HomForm::coeff_count(3) - 2);
}

TEST_CASE("fibers of the one-less twist map") {
  PointedScheme collinear =
      reduced_scheme({pt(1, 0, 0), pt(0, 1, 0), pt(1, 1, 0)});
  PhiFiber f = phi1_fiber(collinear);
  CHECK(f.kind == FiberKind::Line);
  REQUIRE(f.line.has_value());
  CHECK(*f.line == HomForm::parse("x2"));
  CHECK(f.subspace.rows() == 3);

  PointedScheme generic =
      reduced_scheme({pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1)});
  PhiFiber g = phi1_fiber(generic);
  CHECK(g.kind == FiberKind::Point);
  CHECK_FALSE(g.line.has_value());

  // Two points always lie on one line.
  PointedScheme segment = reduced_scheme({pt(1, 2, 3), pt(0, 1, 1)});
  PhiFiber s = phi1_fiber(segment);
  CHECK(s.kind == FiberKind::Line);
  REQUIRE(s.line.has_value());
  for (const auto& c : segment.components())
    CHECK(s.line->eval(c.point.x[0], c.point.x[1], c.point.x[2]) == 0);

  CHECK_THROWS_AS(phi1_fiber(reduced_scheme({pt(1, 1, 1)})), DomainError);
}
