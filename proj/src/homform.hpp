#pragma once

#include <string>
#include <vector>

#include "qmat.hpp"
#include "rat.hpp"

namespace hilb {

/// Homogeneous bivariate form of a fixed formal degree d:
/// c[0] X^d + c[1] X^(d-1) Y + ... + c[d] Y^d. The zero form of any degree
/// has all coefficients zero. These double as degree-d coefficient lists of
/// pencils in (t:s) parameters.
struct BivarForm {
  std::vector<Rational> c; // size degree + 1

  BivarForm() = default;
  explicit BivarForm(int degree) : c(static_cast<size_t>(degree) + 1) {}
  explicit BivarForm(std::vector<Rational> coeffs) : c(std::move(coeffs)) {}

  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const;
  bool operator==(const BivarForm&) const = default;

  Rational eval(const Rational& x, const Rational& y) const;
};

BivarForm bivar_add(const BivarForm& a, const BivarForm& b);
BivarForm bivar_sub(const BivarForm& a, const BivarForm& b);
BivarForm bivar_scale(const BivarForm& a, const Rational& s);
BivarForm bivar_mul(const BivarForm& a, const BivarForm& b);
/// Exact division; throws DomainError when b does not divide a.
BivarForm bivar_divexact(const BivarForm& a, const BivarForm& b);
/// d/dX of the form, one degree lower.
BivarForm bivar_derivative_x(const BivarForm& a);
/// Monic (first nonzero coefficient 1) greatest common divisor; degree 0
/// form "1" when coprime. Both inputs nonzero.
BivarForm bivar_gcd(const BivarForm& a, const BivarForm& b);
/// Resultant of two forms at their formal degrees (Sylvester determinant);
/// zero iff they share a projective root over the algebraic closure.
Rational bivar_resultant(const BivarForm& a, const BivarForm& b);

/// Homogeneous trivariate form of fixed degree in x0, x1, x2. Monomials
/// x0^i x1^j x2^k are ordered by i descending, then j descending.
struct HomForm {
  int degree = 0;
  std::vector<Rational> c;

  HomForm() : c(1) {}
  explicit HomForm(int d);

  static int coeff_count(int degree) {
    return (degree + 1) * (degree + 2) / 2;
  }
  /// Parses the shared grammar over x0, x1, x2; must be homogeneous.
  static HomForm parse(const std::string& text);

  int index_of(int i, int j) const; // exponent of x2 is implied
  std::pair<int, int> exponents_at(int index) const;

  bool is_zero() const;
  bool operator==(const HomForm&) const = default;

  HomForm times(const HomForm& other) const;
  HomForm plus(const HomForm& other) const;
  HomForm scaled(const Rational& s) const;
  Rational eval(const Rational& x0, const Rational& x1,
                const Rational& x2) const;

  /// Scales so the first nonzero coefficient is 1.
  HomForm normalized() const;

  std::string to_string() const;
};

/// The degree-d form whose coefficient vector is the given matrix row.
HomForm form_from_row(const QMat& rows, int row_index, int degree);

/// Canonical basis of factor * span(rows), where the rows are coefficient
/// vectors of degree-d forms; the result lives in degree d + deg(factor).
QMat product_space(const QMat& rows, int degree, const HomForm& factor);

/// Monic greatest common divisor of homogeneous trivariate forms, degree 0
/// form when coprime. Exact, via primitive pseudo-remainder sequences over
/// the bivariate coefficient ring.
HomForm hom_gcd(const HomForm& a, const HomForm& b);

/// True iff b divides a exactly.
bool hom_divides(const HomForm& divisor, const HomForm& a);

} // namespace hilb
