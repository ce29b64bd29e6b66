#pragma once

#include <array>
#include <optional>
#include <string>

#include "cones.hpp"
#include "homform.hpp"
#include "schemes.hpp"

namespace hilb {

/// Degree-n binary form a0*U^n + a1*U^(n-1)*V + ... + an*V^n, stored
/// normalized so the first nonzero coefficient is 1 (the forms are points
/// of a projective space).
struct BinaryForm {
  BivarForm f;

  static BinaryForm of(BivarForm raw);
  /// Parses the shared grammar over U, V; must be homogeneous and nonzero.
  static BinaryForm parse(const std::string& text);

  int degree() const { return f.degree(); }
  std::string to_string() const;
  bool operator==(const BinaryForm&) const = default;
};

/// A line in the plane together with an explicit rational parameterization
/// (U : V) -> U*p0 + V*p1, fixing the identification of the line with the
/// parameter space of binary forms.
struct LineWithParam {
  HomForm line; // degree 1, normalized
  std::array<Rational, 3> p0, p1;

  static LineWithParam of(const HomForm& line);
  ProjPoint at(const Rational& u, const Rational& v) const;
};

/// Pencil of length-n subschemes of a fixed line: the members are the roots
/// of lambda*F + mu*G. Coprimality (nonzero resultant) keeps the pencil
/// base-point free.
class FormPencil {
 public:
  static FormPencil build(BinaryForm F, BinaryForm G, LineWithParam line);

  int n() const { return F_.degree(); }
  const BinaryForm& F() const { return F_; }
  const BinaryForm& G() const { return G_; }
  const LineWithParam& line() const { return line_; }

  /// lambda*F + mu*G; (0 : 0) is rejected.
  BivarForm member(const Rational& lambda, const Rational& mu) const;

 private:
  FormPencil(BinaryForm F, BinaryForm G, LineWithParam line)
      : F_(std::move(F)), G_(std::move(G)), line_(std::move(line)) {}

  BinaryForm F_, G_;
  LineWithParam line_;
};

/// Discriminant of the pencil member as a form in (lambda, mu): the
/// resultant of H and dH/dU divided by the leading coefficient, a
/// homogeneous form of degree 2(n-1). Identically zero iff every member
/// has a repeated root.
BivarForm pencil_discriminant(const FormPencil& p);

/// Count of parameters whose member vanishes at the probe (u : v) on the
/// line; always 1 for a valid probe (the count is a linear-form degree).
/// Throws DomainError when F and G both vanish at the probe.
int pencil_d_degree(const FormPencil& p, const Rational& u, const Rational& v);

/// Number of non-reduced members counted with multiplicity: the degree
/// 2(n-1) of the discriminant. Throws DomainError when the discriminant is
/// identically zero (class computation invalid, family inside the
/// non-reduced locus).
int pencil_b_degree(const FormPencil& p);

/// The curve class of the embedded pencil, solved from the two counts and
/// cross-checked against the intersection pairing.
CurveClass pencil_class(const FormPencil& p);

/// Length-r component of the line at parameter (u : v): the point together
/// with the local ideal generated by the line's local equation in a
/// context of order r (so the component is the r-th order neighborhood
/// along the line).
LocalComponent line_component(const LineWithParam& line, const Rational& u,
                              const Rational& v, int r);

/// The member at (lambda : mu) as a subscheme of the plane, when the member
/// splits into rational linear factors: each root of multiplicity r becomes
/// a length-r component cut out by the line and the r-th power of a
/// coordinate along it. nullopt when the member does not split over the
/// rationals.
std::optional<PointedScheme> embed_member(const FormPencil& p,
                                          const Rational& lambda,
                                          const Rational& mu);

/// Dimension 2n of the family of such pencils: the dual plane plus a
/// Grassmannian of pencils in the n+1 binary-form coefficients.
int grass_bundle_moduli_dim(int n);

} // namespace hilb
