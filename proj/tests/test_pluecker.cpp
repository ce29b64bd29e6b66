#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "errors.hpp"
#include "pluecker.hpp"

using namespace hilb;

namespace {

QMat mat(const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<Rational>> q;
  for (const auto& r : rows) {
    std::vector<Rational> row;
    for (long v : r) row.emplace_back(v);
    q.push_back(std::move(row));
  }
  return QMat::from_rows(q);
}

// Direct minor-by-minor oracle: determinant of every column subset,
// normalized so the first nonzero entry is 1.
std::vector<Rational> brute_minors(const QMat& rows) {
  int k = rows.rows(), amb = rows.cols();
  std::vector<Rational> out;
  for (const auto& subset : lex_subsets(amb, k)) {
    QMat sub(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) sub.at(i, j) = rows.at(i, subset[j]);
    out.push_back(sub.determinant());
  }
  for (const auto& x : out) {
    if (x == 0) continue;
    Rational inv = 1 / x;
    for (auto& y : out) y *= inv;
    break;
  }
  return out;
}

QMat unit_rows(int amb, const std::vector<int>& positions) {
  QMat m(static_cast<int>(positions.size()), amb);
  for (size_t i = 0; i < positions.size(); ++i)
    m.at(static_cast<int>(i), positions[i]) = 1;
  return m;
}

} // namespace

TEST_CASE("coordinates match explicit minors") {
  std::vector<QMat> cases = {
      mat({{1, 2, 3, 4}, {0, 1, 1, 1}}),
      mat({{1, 0, 0, 2, 1}, {0, 1, 0, 3, -1}, {0, 0, 1, 1, 1}}),
      mat({{2, 1, 0, 0, 5}, {0, 3, 1, -1, 0}}),
      mat({{1, 0, 0, 0, 1}, {0, 1, 0, 0, 2}, {0, 0, 1, 0, 3}, {0, 0, 0, 1, 4}}),
      mat({{3, -1, 2}}),
  };
  for (const auto& rows : cases) {
    PlueckerVector p = pluecker_coords(rows);
    CHECK(p.sub_dim == rows.rows());
    CHECK(p.amb_dim == rows.cols());
    CHECK(p.coords == brute_minors(rows));
  }
}

TEST_CASE("fractional entries reduce to the same projective vector") {
  std::vector<std::vector<Rational>> rows = {
      {make_rational(1, 2), make_rational(1, 3), Rational(0), Rational(1)},
      {Rational(0), make_rational(2, 5), make_rational(1, 7), Rational(3)}};
  QMat m = QMat::from_rows(rows);
  CHECK(pluecker_coords(m).coords == brute_minors(m));
}

TEST_CASE("coord lookup by subset") {
  QMat rows = mat({{1, 2, 3, 4}, {0, 1, 1, 1}});
  PlueckerVector p = pluecker_coords(rows);
  CHECK(p.coord({0, 1}) == 1); // first minor normalizes to 1
  CHECK(p.coord({2, 3}) == brute_minors(rows)[5]);
  CHECK_THROWS_AS(p.coord({1, 0}), DomainError);
  CHECK_THROWS_AS(p.coord({0, 4}), DomainError);
}

TEST_CASE("dependent rows are rejected") {
  CHECK_THROWS_AS(pluecker_coords(mat({{1, 2, 3, 4}, {2, 4, 6, 8}})),
                  DomainError);
}

TEST_CASE("reconstruction inverts the embedding") {
  std::vector<QMat> cases = {
      mat({{1, 2, 3, 4}, {0, 1, 1, 1}}),
      mat({{1, 0, 0, 2, 1}, {0, 1, 0, 3, -1}, {0, 0, 1, 1, 1}}),
      mat({{7, 0, 0, 1}}),
  };
  for (const auto& rows : cases) {
    PlueckerVector p = pluecker_coords(rows);
    CHECK(reconstruct_subspace(p) == row_space(rows));
    // Same subspace, different spanning set, same normalized vector.
    QMat mixed = rows;
    for (int j = 0; j < mixed.cols(); ++j)
      mixed.at(0, j) = rows.at(0, j) * 3 + rows.at(rows.rows() - 1, j);
    CHECK(pluecker_coords(mixed) == p);
  }
}

TEST_CASE("quadric relation holds for planes in four-space") {
  QMat rows = mat({{1, 2, 3, 4}, {0, 1, 1, 1}});
  PlueckerVector p = pluecker_coords(rows);
  // Lex order over pairs: 01, 02, 03, 12, 13, 23.
  const auto& c = p.coords;
  CHECK(c[0] * c[5] - c[1] * c[4] + c[2] * c[3] == 0);
}

TEST_CASE("pencil through two subspaces") {
  QMat v1 = unit_rows(4, {0, 1});
  QMat v2 = unit_rows(4, {0, 2});
  SubspacePencil pencil = pencil_from_two(v1, v2);
  CHECK(pencil.common.rows() == 1);
  CHECK(pencil.span.rows() == 3);
  CHECK(row_space_equal(pencil.member(Rational(1), Rational(0)), v1));
  CHECK(row_space_equal(pencil.member(Rational(0), Rational(1)), v2));
  QMat mixed = pencil.member(Rational(1), Rational(1));
  CHECK(mixed.rows() == 2);
  CHECK(row_space_contains(mixed, pencil.common));
  CHECK(row_space_contains(pencil.span, mixed));
  CHECK_THROWS_AS(pencil.member(Rational(0), Rational(0)), DomainError);

  // Disjoint subspaces do not span a pencil.
  CHECK_THROWS_AS(pencil_from_two(unit_rows(4, {0, 1}), unit_rows(4, {2, 3})),
                  DomainError);
}

TEST_CASE("line family recognition") {
  QMat a = unit_rows(4, {0, 1});
  QMat b = unit_rows(4, {0, 2});
  QMat c = row_space(mat({{1, 0, 0, 0}, {0, 1, 1, 0}}));
  std::vector<QMat> family = {a, b, c};
  LineFamilyCheck check = is_line_family(family);
  CHECK(check.is_line);
  REQUIRE(check.pencil.has_value());
  CHECK(check.pencil->common == row_space(mat({{1, 0, 0, 0}})));

  std::vector<QMat> broken = {a, b, unit_rows(4, {0, 3})};
  CHECK_FALSE(is_line_family(broken).is_line);

  // Fewer than two distinct samples violates the precondition.
  std::vector<QMat> repeated = {a, a};
  CHECK_THROWS_AS(is_line_family(repeated), DomainError);

  std::vector<QMat> pairwise = {a, b, row_space(mat({{0, 1, 0, 0},
                                                     {0, 0, 1, 0}}))};
  // Every pair meets in dimension one, but no common line.
  CHECK_FALSE(is_line_family(pairwise).is_line);
}

TEST_CASE("coordinate count guard") {
  QMat wide(14, 28);
  for (int i = 0; i < 14; ++i) wide.at(i, i) = 1;
  CHECK_THROWS_AS(pluecker_coords(wide), DomainError);
}
