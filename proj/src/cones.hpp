#pragma once

#include <utility>
#include <vector>

#include "rat.hpp"

namespace hilb {

/// Numerical curve class on the Hilbert scheme of n points in the plane,
/// written over the basis (moving-line class, punctual-pencil class):
/// a * [line sweep] + b * [pencil in a fiber].
struct CurveClass {
  int n = 2;
  Rational a, b;

  bool operator==(const CurveClass&) const = default;
};

/// Numerical divisor class over the dual basis: p * D + q * B, where D is
/// the hyperplane-type generator and B the locus of non-reduced subschemes.
/// Half-integral q is legitimate: B/2 is an integral class.
struct DivisorClass {
  int n = 2;
  Rational p, q;

  bool operator==(const DivisorClass&) const = default;
};

void require_valid_n(int n);

/// The intersection pairing: D pairs 1 with the line-sweep class and 0 with
/// the punctual class; B pairs 0 and -2 respectively.
Rational pair(const DivisorClass& d, const CurveClass& c);

/// Canonical divisor class: -3 D.
DivisorClass canonical_class(int n);

/// Extremal nef generators: D and (n-1) D - B/2.
std::pair<DivisorClass, DivisorClass> nef_generators(int n);

/// Extremal effective-curve generators: the punctual class (0,1) and the
/// swept line with n-1 residual points (1, -(n-1)).
std::pair<CurveClass, CurveClass> effective_generators(int n);

/// Nef test by pairing against both effective generators.
bool is_nef(const DivisorClass& d);

/// Effectivity test by solving the 2x2 cone-coordinate system exactly.
bool is_effective_curve(const CurveClass& c);

/// The integral effective classes of degree 1 under n D - B/2; exactly the
/// two effective generators.
std::vector<CurveClass> degree_one_classes(int n);

/// Moduli dimension of the family of line-sweep curves: actual and
/// deformation-expected values, both 2n.
std::pair<int, int> line_class_moduli_dim(int n);

} // namespace hilb
