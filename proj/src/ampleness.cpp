#include "ampleness.hpp"

#include <string>

#include "errors.hpp"
#include "truncring.hpp"

namespace hilb {

namespace {

// Translation data for one component: powers of (alpha + u) and (beta + v)
// in the component's local ring, where (alpha, beta) are the affine
// coordinates of the point in its chart. The jet of any dehomogenized
// monomial is then a product of two table entries.
struct ComponentJets {
  const LocalComponent& comp;
  int u_index, v_index; // form exponent positions feeding u and v
  std::vector<RingElem> pow_u, pow_v;

  ComponentJets(const LocalComponent& c, int max_degree) : comp(c) {
    u_index = c.chart == 0 ? 1 : 0;
    v_index = c.chart == 2 ? 1 : 2;
    std::array<Rational, 2> affine = c.point.affine(c.chart);
    const TruncRing& ring = c.local.ring();
    pow_u = powers(ring, affine[0], true, max_degree);
    pow_v = powers(ring, affine[1], false, max_degree);
  }

  RingElem monomial_jet(int e0, int e1, int e2) const {
    std::array<int, 3> e{e0, e1, e2};
    return pow_u[e[u_index]].times(pow_v[e[v_index]]);
  }

  RingElem form_jet(const HomForm& f) const {
    RingElem jet(comp.local.ring());
    for (size_t p = 0; p < f.c.size(); ++p) {
      if (f.c[p] == 0) continue;
      auto [i, j] = f.exponents_at(static_cast<int>(p));
      jet = jet.plus(monomial_jet(i, j, f.degree - i - j).scaled(f.c[p]));
    }
    return jet;
  }

 private:
  static std::vector<RingElem> powers(const TruncRing& ring, const Rational& a,
                                      bool is_u, int max_degree) {
    RingElem base = RingElem::one(ring).scaled(a);
    if (ring.order >= 2)
      base = base.plus(RingElem::monomial(ring, is_u ? 1 : 0, is_u ? 0 : 1));
    std::vector<RingElem> out;
    out.reserve(max_degree + 1);
    out.push_back(RingElem::one(ring));
    for (int i = 1; i <= max_degree; ++i) out.push_back(out.back().times(base));
    return out;
  }
};

} // namespace

QMat vanishing_forms(const PointedScheme& xi, int m) {
  if (m < 0) throw DomainError("twist must be nonnegative");
  int amb = HomForm::coeff_count(m);
  QMat conditions(0, amb);
  for (const auto& comp : xi.components()) {
    ComponentJets jets(comp, m);
    QMat block(comp.local.ring().dim(), amb);
    HomForm shape(m);
    for (int p = 0; p < amb; ++p) {
      auto [i, j] = shape.exponents_at(p);
      RingElem jet = jets.monomial_jet(i, j, m - i - j);
      std::vector<Rational> residual =
          reduce_against(comp.local.rows(), jet.coeffs());
      for (int r = 0; r < block.rows(); ++r) block.at(r, p) = residual[r];
    }
    conditions = conditions.vstack(block);
  }
  return conditions.kernel();
}

int h0_ideal_twist(const PointedScheme& xi, int m) {
  return vanishing_forms(xi, m).rows();
}

bool form_vanishes_on(const PointedScheme& xi, const HomForm& f) {
  for (const auto& comp : xi.components()) {
    ComponentJets jets(comp, f.degree);
    RingElem jet = jets.form_jet(f);
    if (!comp.local.contains_element(jet)) return false;
  }
  return true;
}

bool scheme_in_line(const PointedScheme& xi, const HomForm& line) {
  if (line.degree != 1 || line.is_zero())
    throw DomainError("scheme_in_line needs a nonzero degree-1 form");
  return form_vanishes_on(xi, line);
}

PhiImage phi_map(const PointedScheme& xi, int m) {
  QMat basis = vanishing_forms(xi, m);
  if (basis.rows() == 0)
    throw DomainError("no sections of twist " + std::to_string(m) +
                      " vanish on the scheme");
  PlueckerVector coords = pluecker_coords(basis);
  return PhiImage{m, std::move(basis), std::move(coords)};
}

PhiImage phi_map(const PointedScheme& xi) { return phi_map(xi, xi.length()); }

bool kva_applicable(int a, int k) {
  if (a < 0 || k < 0) throw DomainError("kva test needs a >= 0 and k >= 0");
  long long s = a + 3;
  return s * s > 4LL * k + 5;
}

std::optional<int> kva_violation(int a, int k) {
  if (!kva_applicable(a, k))
    throw DomainError("kva test not applicable: (a+3)^2 <= 4k+5 for a=" +
                      std::to_string(a) + ", k=" + std::to_string(k));
  // A curve of degree d obstructs exactly when it can absorb a length-(k+1)
  // subscheme that degree-a forms cannot separate; the three inequalities
  // pin down the numerical window where that happens.
  long long s = a + 3;
  for (long long d = 1; 2 * d < s; ++d) {
    bool deep_enough = s * d - k - 1 <= d * d;
    bool small_half = 2 * (k + 1) > s * d;
    if (deep_enough && small_half) return static_cast<int>(d);
  }
  return std::nullopt;
}

PhiFiber phi1_fiber(const PointedScheme& xi) {
  int n = xi.length();
  if (n < 2) throw DomainError("fiber test needs a scheme of length >= 2");
  QMat basis = vanishing_forms(xi, n - 1);
  int expected = n * (n - 1) / 2;
  if (basis.rows() != expected)
    throw DomainError("section count " + std::to_string(basis.rows()) +
                      " differs from the expected " + std::to_string(expected));
  HomForm g = form_from_row(basis, 0, n - 1);
  for (int i = 1; i < basis.rows() && g.degree > 0; ++i)
    g = hom_gcd(g, form_from_row(basis, i, n - 1));
  PhiFiber out;
  out.subspace = std::move(basis);
  if (g.degree == 0) {
    out.kind = FiberKind::Point;
    return out;
  }
  // The section count forces deg(gcd) <= 1: a common factor of degree d
  // leaves at most (n+1-d)(n-d)/2 independent sections.
  if (g.degree > 1)
    throw DomainError("common factor of impossible degree " +
                      std::to_string(g.degree));
  out.kind = FiberKind::Line;
  out.line = g.normalized();
  return out;
}

} // namespace hilb
