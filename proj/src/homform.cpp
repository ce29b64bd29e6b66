#include "homform.hpp"

#include <algorithm>

#include "errors.hpp"
#include "polyparse.hpp"
#include "qmat.hpp"

namespace hilb {

bool BivarForm::is_zero() const {
  return std::all_of(c.begin(), c.end(),
                     [](const Rational& x) { return x == 0; });
}

Rational BivarForm::eval(const Rational& x, const Rational& y) const {
  Rational acc;
  for (int i = 0; i <= degree(); ++i) {
    Rational term = c[i];
    for (int t = 0; t < degree() - i; ++t) term *= x;
    for (int t = 0; t < i; ++t) term *= y;
    acc += term;
  }
  return acc;
}

BivarForm bivar_add(const BivarForm& a, const BivarForm& b) {
  if (a.degree() != b.degree()) throw DomainError("bivar_add: degree mismatch");
  BivarForm out(a.degree());
  for (size_t i = 0; i < a.c.size(); ++i) out.c[i] = a.c[i] + b.c[i];
  return out;
}

BivarForm bivar_sub(const BivarForm& a, const BivarForm& b) {
  if (a.degree() != b.degree()) throw DomainError("bivar_sub: degree mismatch");
  BivarForm out(a.degree());
  for (size_t i = 0; i < a.c.size(); ++i) out.c[i] = a.c[i] - b.c[i];
  return out;
}

BivarForm bivar_scale(const BivarForm& a, const Rational& s) {
  BivarForm out(a.degree());
  for (size_t i = 0; i < a.c.size(); ++i) out.c[i] = a.c[i] * s;
  return out;
}

BivarForm bivar_mul(const BivarForm& a, const BivarForm& b) {
  BivarForm out(a.degree() + b.degree());
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (size_t j = 0; j < b.c.size(); ++j) {
      if (b.c[j] == 0) continue;
      out.c[i + j] += a.c[i] * b.c[j];
    }
  }
  return out;
}

namespace {

// Dense univariate view p(t) = B(t, 1): coefficient of t^j is c[d-j].
std::vector<Rational> to_poly(const BivarForm& b) {
  std::vector<Rational> p(b.c.rbegin(), b.c.rend());
  while (p.size() > 1 && p.back() == 0) p.pop_back();
  return p;
}

int poly_degree(const std::vector<Rational>& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
    if (p[i] != 0) return i;
  return -1; // zero polynomial
}

// Remainder of a by b (b nonzero), standard monic-free division.
std::vector<Rational> poly_rem(std::vector<Rational> a,
                               const std::vector<Rational>& b) {
  int db = poly_degree(b);
  for (int da = poly_degree(a); da >= db && da >= 0; da = poly_degree(a)) {
    Rational factor = a[da] / b[db];
    for (int i = 0; i <= db; ++i) a[da - db + i] -= factor * b[i];
    a[da] = 0;
  }
  return a;
}

std::vector<Rational> poly_gcd(std::vector<Rational> a,
                               std::vector<Rational> b) {
  while (poly_degree(b) >= 0) {
    auto r = poly_rem(std::move(a), b);
    a = std::move(b);
    b = std::move(r);
  }
  int d = poly_degree(a);
  if (d < 0) return a;
  Rational inv = 1 / a[d];
  for (auto& x : a) x *= inv;
  a.resize(d + 1);
  return a;
}

} // namespace

BivarForm bivar_divexact(const BivarForm& a, const BivarForm& b) {
  if (b.is_zero()) throw DomainError("bivar_divexact: division by zero");
  if (a.is_zero()) return BivarForm(std::max(a.degree() - b.degree(), 0));
  int dq = a.degree() - b.degree();
  if (dq < 0) throw DomainError("bivar_divexact: not divisible");
  auto pa = to_poly(a), pb = to_poly(b);
  int da = poly_degree(pa), db = poly_degree(pb);
  if (da - db > dq) throw DomainError("bivar_divexact: not divisible");
  std::vector<Rational> q(dq + 1);
  for (int i = da; i >= db; --i) {
    if (pa[i] == 0) continue;
    Rational factor = pa[i] / pb[db];
    q[i - db] = factor;
    for (int j = 0; j <= db; ++j) pa[i - db + j] -= factor * pb[j];
  }
  if (poly_degree(pa) >= 0) throw DomainError("bivar_divexact: not divisible");
  BivarForm out(dq);
  for (int j = 0; j <= dq; ++j) out.c[dq - j] = q[j];
  return out;
}

BivarForm bivar_derivative_x(const BivarForm& a) {
  int d = a.degree();
  if (d == 0) throw DomainError("bivar_derivative_x: constant form");
  BivarForm out(d - 1);
  for (int i = 0; i < d; ++i) out.c[i] = (d - i) * a.c[i];
  return out;
}

BivarForm bivar_gcd(const BivarForm& a, const BivarForm& b) {
  if (a.is_zero() || b.is_zero())
    throw DomainError("bivar_gcd: zero input");
  // Split off the powers of Y lost by the t = X/Y view, then reduce to a
  // univariate gcd.
  auto pa = to_poly(a), pb = to_poly(b);
  int ya = a.degree() - poly_degree(pa), yb = b.degree() - poly_degree(pb);
  auto g = poly_gcd(pa, pb);
  int dg = poly_degree(g), y = std::min(ya, yb);
  BivarForm out(dg + y);
  // Homogenize g to degree dg and attach the common Y^y factor; entry index
  // is the Y-exponent, so the t^j coefficient lands at dg + y - j.
  for (int j = 0; j <= dg; ++j) out.c[dg + y - j] = g[j];
  return out;
}

Rational bivar_resultant(const BivarForm& a, const BivarForm& b) {
  int m = a.degree(), n = b.degree();
  if (m < 1 || n < 1)
    throw DomainError("bivar_resultant: needs positive degrees");
  QMat syl(m + n, m + n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) syl.at(i, i + j) = a.c[j];
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) syl.at(n + i, i + j) = b.c[j];
  return syl.determinant();
}

HomForm::HomForm(int d) : degree(d), c(coeff_count(d)) {
  if (d < 0) throw DomainError("negative form degree");
}

int HomForm::index_of(int i, int j) const {
  if (i < 0 || j < 0 || i + j > degree)
    throw DomainError("monomial outside the form degree");
  // Block of x0-exponent i starts after the larger-i blocks.
  int offset = 0;
  for (int t = degree; t > i; --t) offset += degree - t + 1;
  return offset + (degree - i - j);
}

std::pair<int, int> HomForm::exponents_at(int index) const {
  int i = degree, remaining = index;
  while (remaining >= degree - i + 1) {
    remaining -= degree - i + 1;
    --i;
  }
  return {i, degree - i - remaining};
}

bool HomForm::is_zero() const {
  return std::all_of(c.begin(), c.end(),
                     [](const Rational& x) { return x == 0; });
}

HomForm HomForm::parse(const std::string& text) {
  SparsePoly poly = parse_polynomial(text, {"x0", "x1", "x2"});
  if (poly.empty()) throw ParseError("zero form has no degree");
  int degree = -1;
  for (const auto& [expo, coeff] : poly) {
    int d = expo[0] + expo[1] + expo[2];
    if (degree < 0) degree = d;
    if (d != degree) throw ParseError("form is not homogeneous");
  }
  HomForm f(degree);
  for (const auto& [expo, coeff] : poly)
    f.c[f.index_of(expo[0], expo[1])] = coeff;
  return f;
}

HomForm HomForm::times(const HomForm& other) const {
  HomForm out(degree + other.degree);
  for (int p = 0; p < coeff_count(degree); ++p) {
    if (c[p] == 0) continue;
    auto [i1, j1] = exponents_at(p);
    for (int q = 0; q < coeff_count(other.degree); ++q) {
      if (other.c[q] == 0) continue;
      auto [i2, j2] = other.exponents_at(q);
      out.c[out.index_of(i1 + i2, j1 + j2)] += c[p] * other.c[q];
    }
  }
  return out;
}

HomForm HomForm::plus(const HomForm& other) const {
  if (degree != other.degree) throw DomainError("plus: degree mismatch");
  HomForm out(degree);
  for (size_t i = 0; i < c.size(); ++i) out.c[i] = c[i] + other.c[i];
  return out;
}

HomForm HomForm::scaled(const Rational& s) const {
  HomForm out(degree);
  for (size_t i = 0; i < c.size(); ++i) out.c[i] = c[i] * s;
  return out;
}

Rational HomForm::eval(const Rational& x0, const Rational& x1,
                       const Rational& x2) const {
  Rational acc;
  for (size_t p = 0; p < c.size(); ++p) {
    if (c[p] == 0) continue;
    auto [i, j] = exponents_at(static_cast<int>(p));
    int k = degree - i - j;
    Rational term = c[p];
    for (int t = 0; t < i; ++t) term *= x0;
    for (int t = 0; t < j; ++t) term *= x1;
    for (int t = 0; t < k; ++t) term *= x2;
    acc += term;
  }
  return acc;
}

HomForm HomForm::normalized() const {
  for (const auto& x : c) {
    if (x == 0) continue;
    return x == 1 ? *this : scaled(1 / x);
  }
  return *this;
}

std::string HomForm::to_string() const {
  std::vector<std::pair<std::vector<int>, Rational>> terms;
  for (size_t p = 0; p < c.size(); ++p) {
    if (c[p] == 0) continue;
    auto [i, j] = exponents_at(static_cast<int>(p));
    terms.push_back({{i, j, degree - i - j}, c[p]});
  }
  return format_terms(terms, {"x0", "x1", "x2"});
}

namespace {

// View of a trivariate form as a polynomial in x0 whose coefficients are
// bivariate forms in (x1, x2): entry i is the coefficient of x0^i, a form
// of degree (total - i).
std::vector<BivarForm> x0_coefficients(const HomForm& f) {
  std::vector<BivarForm> out;
  out.reserve(f.degree + 1);
  for (int i = 0; i <= f.degree; ++i) {
    BivarForm b(f.degree - i);
    for (int j = 0; j + i <= f.degree; ++j)
      b.c[f.degree - i - j] = f.c[f.index_of(i, j)];
    out.push_back(std::move(b));
  }
  return out;
}

HomForm from_x0_coefficients(int degree, const std::vector<BivarForm>& coeffs) {
  HomForm f(degree);
  for (int i = 0; i < static_cast<int>(coeffs.size()); ++i)
    for (int j = 0; j <= coeffs[i].degree(); ++j)
      f.c[f.index_of(i, coeffs[i].degree() - j)] = coeffs[i].c[j];
  return f;
}

int x0_degree(const std::vector<BivarForm>& coeffs) {
  for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i)
    if (!coeffs[i].is_zero()) return i;
  return -1;
}

BivarForm content_of(const std::vector<BivarForm>& coeffs) {
  BivarForm content;
  bool seen = false;
  for (const auto& b : coeffs) {
    if (b.is_zero()) continue;
    content = seen ? bivar_gcd(content, b) : b;
    seen = true;
    if (content.degree() == 0) break;
  }
  if (!seen) throw DomainError("content of zero form");
  if (content.degree() == 0) {
    BivarForm one(0);
    one.c[0] = 1;
    return one;
  }
  // Monic by construction of bivar_gcd; if only one coefficient survived,
  // normalize it here.
  for (const auto& x : content.c)
    if (x != 0) return bivar_scale(content, 1 / x);
  return content;
}

// Also trims trailing zero coefficients, keeping the invariant that entry i
// is a form of degree (total - i) for one consistent total.
std::vector<BivarForm> divide_content(const std::vector<BivarForm>& coeffs,
                                      const BivarForm& content) {
  int top = x0_degree(coeffs);
  std::vector<BivarForm> out;
  out.reserve(top + 1);
  for (int i = 0; i <= top; ++i)
    out.push_back(coeffs[i].is_zero()
                      ? BivarForm(coeffs[i].degree() - content.degree())
                      : bivar_divexact(coeffs[i], content));
  return out;
}

// Pseudo-remainder of homogeneous x0-polynomials; keeps every intermediate
// value homogeneous, so the result either vanishes or has a well-defined
// total degree.
std::vector<BivarForm> pseudo_rem(std::vector<BivarForm> a,
                                  const std::vector<BivarForm>& b) {
  int db = x0_degree(b);
  const BivarForm& lead_b = b[db];
  for (int da = x0_degree(a); da >= db && da >= 0; da = x0_degree(a)) {
    BivarForm lead_a = a[da];
    // a := lead_b * a - lead_a * x0^(da-db) * b, degree-matched by scaling.
    for (int i = 0; i < static_cast<int>(a.size()); ++i) {
      BivarForm scaled = bivar_mul(a[i], lead_b);
      if (i >= da - db && i - (da - db) <= db) {
        BivarForm sub = bivar_mul(lead_a, b[i - (da - db)]);
        scaled = bivar_sub(scaled, sub);
      }
      a[i] = std::move(scaled);
    }
  }
  return a;
}

} // namespace

HomForm hom_gcd(const HomForm& a, const HomForm& b) {
  if (a.is_zero() || b.is_zero()) throw DomainError("hom_gcd: zero input");
  auto pa = x0_coefficients(a), pb = x0_coefficients(b);
  BivarForm cont_a = content_of(pa), cont_b = content_of(pb);
  BivarForm content = bivar_gcd(cont_a, cont_b);
  pa = divide_content(pa, cont_a);
  pb = divide_content(pb, cont_b);
  if (x0_degree(pa) < x0_degree(pb)) std::swap(pa, pb);
  // Primitive pseudo-remainder sequence in x0. An exact division leaves an
  // empty pb and pa holding the primitive gcd; a remainder that drops to
  // x0-degree 0 is a unit over the coefficient ring (it is primitive), so
  // the primitive parts are coprime.
  while (!pb.empty() && x0_degree(pb) > 0) {
    auto r = pseudo_rem(pa, pb);
    pa = std::move(pb);
    if (x0_degree(r) < 0)
      pb.clear();
    else
      pb = divide_content(r, content_of(r));
  }
  std::vector<BivarForm> primitive;
  if (!pb.empty()) {
    BivarForm one(0);
    one.c[0] = 1;
    primitive = {one};
  } else {
    primitive = std::move(pa);
  }
  // Assemble content * primitive with degree-consistent zero padding.
  int x0d = x0_degree(primitive);
  int total = content.degree() + x0d + primitive[x0d].degree();
  std::vector<BivarForm> assembled;
  assembled.reserve(total + 1);
  for (int i = 0; i <= total; ++i) {
    if (i <= x0d && !primitive[i].is_zero())
      assembled.push_back(bivar_mul(primitive[i], content));
    else
      assembled.push_back(BivarForm(total - i));
  }
  return from_x0_coefficients(total, assembled).normalized();
}

HomForm form_from_row(const QMat& rows, int row_index, int degree) {
  if (rows.cols() != HomForm::coeff_count(degree))
    throw DomainError("coefficient row has the wrong length for the degree");
  HomForm f(degree);
  for (int j = 0; j < rows.cols(); ++j) f.c[j] = rows.at(row_index, j);
  return f;
}

QMat product_space(const QMat& rows, int degree, const HomForm& factor) {
  QMat out(rows.rows(), HomForm::coeff_count(degree + factor.degree));
  for (int i = 0; i < rows.rows(); ++i) {
    HomForm prod = form_from_row(rows, i, degree).times(factor);
    for (size_t j = 0; j < prod.c.size(); ++j)
      out.at(i, static_cast<int>(j)) = prod.c[j];
  }
  return row_space(out);
}

bool hom_divides(const HomForm& divisor, const HomForm& a) {
  if (divisor.is_zero()) throw DomainError("hom_divides: zero divisor");
  if (a.is_zero()) return true;
  if (divisor.degree > a.degree) return false;
  HomForm g = hom_gcd(divisor, a);
  return g.degree == divisor.degree;
}

} // namespace hilb
