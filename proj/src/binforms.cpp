#include "binforms.hpp"

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "polyparse.hpp"

namespace hilb {

BinaryForm BinaryForm::of(BivarForm raw) {
  if (raw.is_zero()) throw DomainError("binary form must be nonzero");
  for (auto& x : raw.c) {
    if (x == 0) continue;
    if (x != 1) {
      Rational inv = 1 / x;
      for (auto& y : raw.c) y *= inv;
    }
    break;
  }
  return BinaryForm{std::move(raw)};
}

BinaryForm BinaryForm::parse(const std::string& text) {
  SparsePoly poly = parse_polynomial(text, {"U", "V"});
  if (poly.empty()) throw ParseError("zero form has no degree");
  int degree = -1;
  for (const auto& [expo, coeff] : poly) {
    int d = expo[0] + expo[1];
    if (degree < 0) degree = d;
    if (d != degree) throw ParseError("form is not homogeneous");
  }
  BivarForm f(degree);
  for (const auto& [expo, coeff] : poly) f.c[expo[1]] = coeff;
  return of(std::move(f));
}

std::string BinaryForm::to_string() const {
  std::vector<std::pair<std::vector<int>, Rational>> terms;
  for (int i = 0; i <= f.degree(); ++i) {
    if (f.c[i] == 0) continue;
    terms.push_back({{f.degree() - i, i}, f.c[i]});
  }
  return format_terms(terms, {"U", "V"});
}

LineWithParam LineWithParam::of(const HomForm& line) {
  if (line.degree != 1 || line.is_zero())
    throw DomainError("the carrier must be a nonzero degree-1 form");
  QMat row(1, 3);
  for (int j = 0; j < 3; ++j) row.at(0, j) = line.c[j];
  QMat ker = row.kernel();
  LineWithParam out;
  out.line = line.normalized();
  for (int j = 0; j < 3; ++j) {
    out.p0[j] = ker.at(0, j);
    out.p1[j] = ker.at(1, j);
  }
  return out;
}

ProjPoint LineWithParam::at(const Rational& u, const Rational& v) const {
  if (u == 0 && v == 0) throw DomainError("parameter (0 : 0) is not a point");
  return ProjPoint(u * p0[0] + v * p1[0], u * p0[1] + v * p1[1],
                   u * p0[2] + v * p1[2]);
}

FormPencil FormPencil::build(BinaryForm F, BinaryForm G, LineWithParam line) {
  int n = F.degree();
  if (G.degree() != n)
    throw DomainError("pencil forms must have equal degrees");
  if (n < 2) throw DomainError("pencil degree must be at least 2");
  if (bivar_resultant(F.f, G.f) == 0)
    throw DomainError("pencil forms share a root (not coprime)");
  return FormPencil(std::move(F), std::move(G), std::move(line));
}

BivarForm FormPencil::member(const Rational& lambda, const Rational& mu) const {
  if (lambda == 0 && mu == 0)
    throw DomainError("member at (0 : 0) is undefined");
  return bivar_add(bivar_scale(F_.f, lambda), bivar_scale(G_.f, mu));
}

namespace {

// Fraction-free elimination over the homogeneous forms in (lambda, mu);
// every intermediate entry is a minor of the original matrix, so the
// divisions are exact. Entries of one sweep share their formal degree.
BivarForm bareiss_determinant(std::vector<std::vector<BivarForm>> m) {
  int size = static_cast<int>(m.size());
  int sign = 1;
  BivarForm prev(0);
  prev.c[0] = 1;
  for (int k = 0; k < size - 1; ++k) {
    int pivot = -1;
    for (int i = k; i < size; ++i)
      if (!m[i][k].is_zero()) {
        pivot = i;
        break;
      }
    if (pivot < 0) return BivarForm(size); // singular: zero of full degree
    if (pivot != k) {
      std::swap(m[pivot], m[k]);
      sign = -sign;
    }
    for (int i = k + 1; i < size; ++i)
      for (int j = k + 1; j < size; ++j)
        m[i][j] = bivar_divexact(
            bivar_sub(bivar_mul(m[k][k], m[i][j]), bivar_mul(m[i][k], m[k][j])),
            prev);
    prev = m[k][k];
  }
  BivarForm det = m[size - 1][size - 1];
  return sign < 0 ? bivar_scale(det, -1) : det;
}

// Linear form lambda*a + mu*b in (lambda, mu).
BivarForm linear_entry(const Rational& a, const Rational& b) {
  BivarForm e(1);
  e.c[0] = a;
  e.c[1] = b;
  return e;
}

} // namespace

BivarForm pencil_discriminant(const FormPencil& p) {
  int n = p.n();
  // Sylvester matrix of H = lambda*F + mu*G and dH/dU in U, with entries
  // linear in (lambda, mu): n-1 rows of H-shifts, n rows of dH/dU-shifts.
  int size = 2 * n - 1;
  std::vector<std::vector<BivarForm>> syl(
      size, std::vector<BivarForm>(size, BivarForm(1)));
  for (int i = 0; i < n - 1; ++i)
    for (int j = 0; j <= n; ++j)
      syl[i][i + j] = linear_entry(p.F().f.c[j], p.G().f.c[j]);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      syl[n - 1 + i][i + j] =
          linear_entry((n - j) * p.F().f.c[j], (n - j) * p.G().f.c[j]);
  BivarForm res = bareiss_determinant(std::move(syl));
  // res = a0(lambda, mu) * disc as a polynomial identity; a0 is nonzero
  // because coprime forms cannot both lose their leading coefficient.
  BivarForm a0 = linear_entry(p.F().f.c[0], p.G().f.c[0]);
  if (a0.is_zero())
    throw DomainError("pencil forms both vanish at infinity");
  return bivar_divexact(res, a0);
}

int pencil_d_degree(const FormPencil& p, const Rational& u, const Rational& v) {
  if (u == 0 && v == 0) throw DomainError("parameter (0 : 0) is not a point");
  Rational fu = p.F().f.eval(u, v);
  Rational gu = p.G().f.eval(u, v);
  if (fu == 0 && gu == 0)
    throw DomainError("degenerate probe: both forms vanish there");
  // lambda*F(q) + mu*G(q) is a nonzero linear form in (lambda : mu).
  return 1;
}

int pencil_b_degree(const FormPencil& p) {
  BivarForm disc = pencil_discriminant(p);
  if (disc.is_zero())
    throw DomainError(
        "class computation invalid: every member is non-reduced");
  return disc.degree();
}

CurveClass pencil_class(const FormPencil& p) {
  int n = p.n();
  require_valid_n(n);
  int dd = pencil_d_degree(p, Rational(1), Rational(1));
  int bd = pencil_b_degree(p);
  // pair(D, (a,b)) = a and pair(B, (a,b)) = -2b recover the coordinates.
  CurveClass c{n, Rational(dd), Rational(bd) / -2};
  DivisorClass d_gen{n, Rational(1), Rational(0)};
  DivisorClass b_gen{n, Rational(0), Rational(1)};
  if (pair(d_gen, c) != dd || pair(b_gen, c) != bd)
    throw DomainError("internal pairing cross-check failed");
  return c;
}

namespace {

// Coefficients of the two non-chart variables of a degree-1 form, in index
// order: the linear part of its dehomogenization, unchanged by translation.
std::array<Rational, 2> line_linear_part(const HomForm& line, int chart) {
  std::array<Rational, 2> out;
  int k = 0;
  for (int i = 0; i < 3; ++i) {
    if (i == chart) continue;
    out[k++] = line.c[i];
  }
  return out;
}

std::vector<mpz_class> divisors_of(const mpz_class& value) {
  mpz_class x = abs(value);
  if (x == 0) throw DomainError("divisors of zero requested");
  std::map<mpz_class, int> factors;
  for (mpz_class d = 2; d * d <= x && d < 1000000; ++d)
    while (x % d == 0) {
      ++factors[d];
      x /= d;
    }
  if (x > 1) {
    if (mpz_probab_prime_p(x.get_mpz_t(), 40) == 0)
      throw DomainError("root search: coefficient too hard to factor");
    ++factors[x];
  }
  std::vector<mpz_class> divs{1};
  for (const auto& [prime, count] : factors) {
    size_t base = divs.size();
    mpz_class power = 1;
    for (int e = 1; e <= count; ++e) {
      power *= prime;
      for (size_t i = 0; i < base; ++i) divs.push_back(divs[i] * power);
    }
  }
  return divs;
}

int poly_degree(const std::vector<Rational>& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
    if (p[i] != 0) return i;
  return -1;
}

// Divides the ascending-coefficient polynomial by (z - root) in place;
// returns true and deflates when the remainder is zero.
bool deflate_at(std::vector<Rational>& p, const Rational& root) {
  int d = poly_degree(p);
  std::vector<Rational> q(d);
  Rational carry;
  for (int i = d; i >= 1; --i) {
    carry = p[i] + root * carry;
    q[i - 1] = carry;
  }
  Rational rem = p[0] + root * carry;
  if (rem != 0) return false;
  p = std::move(q);
  return true;
}

// Roots with multiplicities of an ascending-coefficient polynomial, when it
// splits into rational linear factors; nullopt otherwise.
std::optional<std::vector<std::pair<Rational, int>>> rational_split(
    std::vector<Rational> p) {
  std::vector<std::pair<Rational, int>> roots;
  int degree = poly_degree(p);
  p.resize(degree + 1);
  int zeros = 0;
  while (p.size() > 1 && p[0] == 0) {
    p.erase(p.begin());
    ++zeros;
  }
  if (zeros > 0) roots.push_back({Rational(0), zeros});
  while (poly_degree(p) > 0) {
    // Rational root theorem on the integer-scaled polynomial.
    mpz_class denom_lcm = 1;
    for (const auto& c : p) {
      mpz_class den = c.get_den();
      denom_lcm = lcm(denom_lcm, den);
    }
    std::vector<mpz_class> ints;
    ints.reserve(p.size());
    for (const auto& c : p) {
      Rational scaled = c * Rational(denom_lcm);
      ints.push_back(scaled.get_num());
    }
    std::optional<Rational> found;
    std::vector<mpz_class> nums = divisors_of(ints.front());
    std::vector<mpz_class> dens = divisors_of(ints.back());
    for (const auto& num : nums) {
      for (const auto& den : dens) {
        if (gcd(num, den) != 1) continue;
        for (int sign = 1; sign >= -1 && !found; sign -= 2) {
          mpz_class signed_num = sign > 0 ? num : mpz_class(-num);
          Rational cand(signed_num, den);
          cand.canonicalize();
          Rational value;
          for (int i = poly_degree(p); i >= 0; --i) {
            value = value * cand;
            value += p[i];
          }
          if (value == 0) found = cand;
        }
        if (found) break;
      }
      if (found) break;
    }
    if (!found) return std::nullopt;
    int mult = 0;
    while (deflate_at(p, *found)) ++mult;
    roots.push_back({*found, mult});
  }
  return roots;
}

} // namespace

LocalComponent line_component(const LineWithParam& line, const Rational& u,
                              const Rational& v, int r) {
  if (r < 1) throw DomainError("component length must be positive");
  ProjPoint point = line.at(u, v);
  int chart = point.chart();
  TruncRing ring(r);
  std::vector<RingElem> gens;
  if (ring.order >= 2) {
    // Local equation of the line: the constant term vanishes because the
    // point lies on it, leaving the linear part in chart coordinates.
    std::array<Rational, 2> lin = line_linear_part(line.line, chart);
    gens.push_back(RingElem::monomial(ring, 1, 0, lin[0])
                       .plus(RingElem::monomial(ring, 0, 1, lin[1])));
  }
  auto ideal = IdealSubspace::from_generators(ring, gens);
  return LocalComponent(point, chart, std::move(*ideal));
}

std::optional<PointedScheme> embed_member(const FormPencil& p,
                                          const Rational& lambda,
                                          const Rational& mu) {
  BivarForm h = p.member(lambda, mu);
  int n = h.degree();
  // Multiplicity of the root at (1 : 0): the power of V dividing H.
  int at_infinity = 0;
  while (at_infinity <= n && h.c[at_infinity] == 0) ++at_infinity;
  // Finite roots via z = U/V: ascending coefficients are reversed.
  std::vector<Rational> univ(h.c.rbegin(), h.c.rend());
  auto roots = rational_split(std::move(univ));
  if (!roots) return std::nullopt;
  int total = at_infinity;
  for (const auto& rm : *roots) total += rm.second;
  if (total != n) return std::nullopt;

  std::vector<LocalComponent> comps;
  if (at_infinity > 0)
    comps.push_back(line_component(p.line(), Rational(1), Rational(0),
                                   at_infinity));
  for (const auto& [root, mult] : *roots)
    comps.push_back(line_component(p.line(), root, Rational(1), mult));
  return PointedScheme(std::move(comps));
}

int grass_bundle_moduli_dim(int n) {
  require_valid_n(n);
  // Dual-plane base plus Grass(2, n+1) fibers.
  return 2 + 2 * ((n + 1) - 2);
}

} // namespace hilb
