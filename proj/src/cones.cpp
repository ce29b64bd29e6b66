#include "cones.hpp"

#include "errors.hpp"

namespace hilb {

void require_valid_n(int n) {
  if (n < 2) throw DomainError("number of points must be at least 2");
}

namespace {

void require_same_n(int a, int b) {
  require_valid_n(a);
  require_valid_n(b);
  if (a != b)
    throw DomainError("classes live on different Hilbert schemes (n=" +
                      std::to_string(a) + " vs n=" + std::to_string(b) + ")");
}

} // namespace

Rational pair(const DivisorClass& d, const CurveClass& c) {
  require_same_n(d.n, c.n);
  // Pairing table: D.(line sweep) = 1, D.(punctual) = 0,
  //                B.(line sweep) = 0, B.(punctual) = -2.
  return d.p * c.a - 2 * d.q * c.b;
}

DivisorClass canonical_class(int n) {
  require_valid_n(n);
  return DivisorClass{n, Rational(-3), Rational(0)};
}

std::pair<DivisorClass, DivisorClass> nef_generators(int n) {
  require_valid_n(n);
  return {DivisorClass{n, Rational(1), Rational(0)},
          DivisorClass{n, Rational(n - 1), make_rational(-1, 2)}};
}

std::pair<CurveClass, CurveClass> effective_generators(int n) {
  require_valid_n(n);
  return {CurveClass{n, Rational(0), Rational(1)},
          CurveClass{n, Rational(1), Rational(-(n - 1))}};
}

bool is_nef(const DivisorClass& d) {
  auto [punctual, swept] = effective_generators(d.n);
  return pair(d, punctual) >= 0 && pair(d, swept) >= 0;
}

bool is_effective_curve(const CurveClass& c) {
  require_valid_n(c.n);
  // c = s * (0,1) + t * (1,-(n-1)); solve exactly and test s, t >= 0.
  Rational t = c.a;
  Rational s = c.b + (c.n - 1) * c.a;
  return s >= 0 && t >= 0;
}

std::vector<CurveClass> degree_one_classes(int n) {
  auto [punctual, swept] = effective_generators(n);
  // Degree under n D - B/2: the punctual generator meets it in 1, and so
  // does the swept line; any other integral effective class is a positive
  // combination and pairs strictly higher.
  return {punctual, swept};
}

std::pair<int, int> line_class_moduli_dim(int n) {
  require_valid_n(n);
  // Anticanonical degree 3 plus (2n - 3) matches the direct count
  // 2 + 2(n - 1) of lines with n - 1 free residual points.
  DivisorClass anti = canonical_class(n);
  anti.p = -anti.p;
  auto swept = effective_generators(n).second;
  Rational expected = pair(anti, swept) + 2 * n - 3;
  int direct = 2 + 2 * (n - 1);
  if (expected != direct)
    throw DomainError("line_class_moduli_dim: internal mismatch");
  return {direct, direct};
}

} // namespace hilb
