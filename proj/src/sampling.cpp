#include "sampling.hpp"

#include <algorithm>

#include "errors.hpp"
#include "qmat.hpp"

namespace hilb {

int Rng::uniform(int lo, int hi) {
  if (hi < lo) throw DomainError("empty sampling range");
  std::uint64_t width = static_cast<std::uint64_t>(hi) - lo + 1;
  return lo + static_cast<int>(gen_() % width);
}

Rational Rng::rational() {
  return make_rational(uniform(-9, 9), uniform(1, 4));
}

Rational Rng::nonzero_rational() {
  for (;;) {
    Rational r = rational();
    if (r != 0) return r;
  }
}

std::vector<int> random_partition(Rng& rng, int n) {
  const std::vector<std::vector<int>> all = partitions_of(n);
  return all[rng.uniform(0, static_cast<int>(all.size()) - 1)];
}

IdealSubspace random_monomial_ideal(Rng& rng, TruncRing ring, int colength) {
  return IdealSubspace::monomial_ideal(ring, random_partition(rng, colength));
}

LinearSubst random_substitution(Rng& rng) {
  for (;;) {
    Rational a = rng.rational(), b = rng.rational();
    Rational c = rng.rational(), d = rng.rational();
    Rational det = a * d - b * c;
    if (det != 0) return make_subst(a, b, c, d);
  }
}

IdealSubspace random_ideal(Rng& rng, TruncRing ring, int colength) {
  return random_monomial_ideal(rng, ring, colength)
      .substituted(random_substitution(rng));
}

namespace {

int staircase_max_degree(const std::vector<int>& partition) {
  int best = 0;
  for (size_t i = 0; i < partition.size(); ++i)
    best = std::max(best, static_cast<int>(i) + partition[i] - 1);
  return best;
}

int staircase_corners(const std::vector<int>& partition) {
  int corners = 1;
  for (size_t i = 1; i < partition.size(); ++i)
    if (partition[i] != partition[i - 1]) ++corners;
  return corners;
}

} // namespace

EtaPair random_eta_pair(Rng& rng, int n) {
  if (n < 2) throw DomainError("pencil bases exist only for n >= 2");
  TruncRing ring(n + 1);
  // Staircases of colength n+1 inside the degree-(n-1) triangle (so the
  // ideal contains the degree-n tail) with at least two corners (so the
  // socle holds a pencil).
  std::vector<std::vector<int>> candidates;
  for (const auto& partition : partitions_of(n + 1))
    if (staircase_max_degree(partition) <= n - 1 &&
        staircase_corners(partition) >= 2)
      candidates.push_back(partition);
  if (candidates.empty())
    throw DomainError("no pencil base of colength " + std::to_string(n + 1));
  const auto& partition =
      candidates[rng.uniform(0, static_cast<int>(candidates.size()) - 1)];
  IdealSubspace eta = IdealSubspace::monomial_ideal(ring, partition)
                          .substituted(random_substitution(rng));
  QMat socle = eta.socle();
  int s = socle.rows();
  for (;;) {
    QMat coeffs(2, s);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < s; ++j) coeffs.at(i, j) = rng.rational();
    if (coeffs.rank() != 2) continue;
    QMat combos = coeffs.times(socle);
    return EtaPair{std::move(eta), RingElem(ring, combos.row_vector(0)),
                   RingElem(ring, combos.row_vector(1))};
  }
}

ProjPoint random_point(Rng& rng) {
  for (;;) {
    Rational a = rng.rational(), b = rng.rational(), c = rng.rational();
    if (a == 0 && b == 0 && c == 0) continue;
    return ProjPoint(a, b, c);
  }
}

PointedScheme random_scheme(Rng& rng, int n) {
  if (n < 1) throw DomainError("scheme length must be positive");
  std::vector<int> parts;
  for (int remaining = n; remaining > 0;) {
    int part = rng.uniform(1, std::min(remaining, 4));
    parts.push_back(part);
    remaining -= part;
  }
  std::vector<LocalComponent> comps;
  std::vector<ProjPoint> used;
  for (int part : parts) {
    ProjPoint p = random_point(rng);
    auto taken = [&](const ProjPoint& q) {
      return std::any_of(used.begin(), used.end(), [&](const ProjPoint& r) {
        return r.same_point(q);
      });
    };
    while (taken(p)) p = random_point(rng);
    used.push_back(p);
    TruncRing ring(part);
    IdealSubspace local = part == 1 ? IdealSubspace::maximal_ideal(ring)
                                    : random_ideal(rng, ring, part);
    comps.emplace_back(p, std::move(local));
  }
  return PointedScheme(std::move(comps));
}

LineWithParam random_line(Rng& rng) {
  for (;;) {
    HomForm line(1);
    for (int i = 0; i < 3; ++i) line.c[i] = rng.rational();
    if (line.is_zero()) continue;
    return LineWithParam::of(line);
  }
}

PointedScheme random_collinear_scheme(Rng& rng, int n,
                                      const LineWithParam& line) {
  if (n < 1) throw DomainError("scheme length must be positive");
  std::vector<LocalComponent> comps;
  std::vector<Rational> used; // finite parameters already taken
  bool used_infinity = false;
  for (int remaining = n; remaining > 0;) {
    int part = rng.uniform(1, std::min(remaining, 3));
    if (!used_infinity && rng.uniform(0, 5) == 0) {
      comps.push_back(line_component(line, Rational(1), Rational(0), part));
      used_infinity = true;
    } else {
      Rational u = rng.rational();
      if (std::find(used.begin(), used.end(), u) != used.end()) continue;
      used.push_back(u);
      comps.push_back(line_component(line, u, Rational(1), part));
    }
    remaining -= part;
  }
  return PointedScheme(std::move(comps));
}

namespace {

BinaryForm split_form(Rng& rng, int n, std::vector<Rational>& taken) {
  BivarForm prod(0);
  prod.c[0] = 1;
  for (int i = 0; i < n; ++i) {
    Rational root;
    do {
      root = rng.rational();
    } while (std::find(taken.begin(), taken.end(), root) != taken.end());
    taken.push_back(root);
    BivarForm lin(1); // U - root*V
    lin.c[0] = 1;
    lin.c[1] = -root;
    prod = bivar_mul(prod, lin);
  }
  return BinaryForm::of(std::move(prod));
}

} // namespace

FormPencil random_split_pencil(Rng& rng, int n) {
  std::vector<Rational> taken;
  BinaryForm f = split_form(rng, n, taken);
  BinaryForm g = split_form(rng, n, taken);
  return FormPencil::build(std::move(f), std::move(g), random_line(rng));
}

FormPencil random_pencil(Rng& rng, int n) {
  for (;;) {
    BivarForm f(n), g(n);
    for (int i = 0; i <= n; ++i) {
      f.c[i] = rng.rational();
      g.c[i] = rng.rational();
    }
    if (f.is_zero() || g.is_zero()) continue;
    if (bivar_resultant(f, g) == 0) continue;
    return FormPencil::build(BinaryForm::of(std::move(f)),
                             BinaryForm::of(std::move(g)), random_line(rng));
  }
}

} // namespace hilb
