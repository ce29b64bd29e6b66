#include "verify.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <variant>

#include "ampleness.hpp"
#include "binforms.hpp"
#include "cones.hpp"
#include "errors.hpp"
#include "ideals.hpp"
#include "pencils.hpp"
#include "pluecker.hpp"
#include "sampling.hpp"
#include "schemes.hpp"

namespace hilb {

namespace {

using Clock = std::chrono::steady_clock;

/// Accumulates items; per-item time is the span since the previous item.
struct SuiteBuilder {
  SuiteReport rep;
  Clock::time_point mark = Clock::now();

  explicit SuiteBuilder(std::string suite) { rep.suite = std::move(suite); }

  void item(const std::string& name, bool ok, const std::string& detail) {
    Clock::time_point now = Clock::now();
    rep.items.push_back(
        {name, ok, ok ? std::string() : detail,
         std::chrono::duration<double, std::milli>(now - mark).count()});
    rep.pass = rep.pass && ok;
    mark = now;
  }

  SuiteReport finish(Clock::time_point start) {
    rep.millis =
        std::chrono::duration<double, std::milli>(Clock::now() - start)
            .count();
    return std::move(rep);
  }
};

/// First-failure tracker: a property checked across many instances keeps only
/// the earliest failing instance as its diagnostic.
struct Prop {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& where) {
    if (ok && !cond) {
      ok = false;
      detail = where;
    }
  }
};

std::vector<int> n_values(const VerifyOptions& o, int lo, int hi,
                          int min_allowed) {
  if (o.n) {
    if (*o.n < min_allowed)
      throw DomainError("this suite needs n >= " +
                        std::to_string(min_allowed));
    return {*o.n};
  }
  std::vector<int> out;
  for (int n = lo; n <= hi; ++n) out.push_back(n);
  return out;
}

int trial_count(const VerifyOptions& o, int dflt) {
  int t = o.trials.value_or(dflt);
  if (t < 1) throw DomainError("trials must be positive");
  return t;
}

std::uint64_t mix_seed(const VerifyOptions& o, int salt, int n) {
  return o.seed + 0x9e3779b97f4a7c15ULL *
                      (static_cast<std::uint64_t>(salt) * 64 + n);
}

std::string at_n(int n) { return "n=" + std::to_string(n); }

std::string at_trial(int n, int t) {
  return "n=" + std::to_string(n) + " trial=" + std::to_string(t);
}

void normalize_triple(std::array<Rational, 3>& v) {
  for (const Rational& c : v) {
    if (c == 0) continue;
    Rational inv = 1 / c;
    for (Rational& x : v) x *= inv;
    return;
  }
}

// ---- pairing ---------------------------------------------------------

SuiteReport suite_pairing(const VerifyOptions& o) {
  Clock::time_point start = Clock::now();
  SuiteBuilder b("pairing");
  Prop table, edge, nef, gens;
  for (int n : n_values(o, 2, 50, 2)) {
    DivisorClass D{n, Rational(1), Rational(0)};
    DivisorClass B{n, Rational(0), Rational(1)};
    CurveClass beta_l{n, Rational(1), Rational(0)};
    CurveClass beta_n{n, Rational(0), Rational(1)};
    table.expect(pair(D, beta_l) == 1, at_n(n) + ": D.beta_l != 1");
    table.expect(pair(D, beta_n) == 0, at_n(n) + ": D.beta_n != 0");
    table.expect(pair(B, beta_l) == 0, at_n(n) + ": B.beta_l != 0");
    table.expect(pair(B, beta_n) == -2, at_n(n) + ": B.beta_n != -2");

    CurveClass line_edge{n, Rational(1), Rational(-(n - 1))};
    edge.expect(pair(canonical_class(n), line_edge) == -3,
                at_n(n) + ": K.(beta_l-(n-1)beta_n) != -3");

    DivisorClass half{n, Rational(n), make_rational(-1, 2)};
    nef.expect(pair(half, beta_n) == 1,
               at_n(n) + ": (nD-B/2).beta_n != 1");
    auto [g1, g2] = nef_generators(n);
    nef.expect(pair(g2, line_edge) == 0,
               at_n(n) + ": ((n-1)D-B/2).(beta_l-(n-1)beta_n) != 0");

    gens.expect(g1 == D, at_n(n) + ": first nef generator is not D");
    gens.expect(g2 == DivisorClass{n, Rational(n - 1), make_rational(-1, 2)},
                at_n(n) + ": second nef generator is not (n-1)D-B/2");
    gens.expect(canonical_class(n) ==
                    DivisorClass{n, Rational(-3), Rational(0)},
                at_n(n) + ": canonical class is not -3D");
  }
  b.item("table", table.ok, table.detail);
  b.item("canonical-edge", edge.ok, edge.detail);
  b.item("nef-degrees", nef.ok, nef.detail);
  b.item("generators", gens.ok, gens.detail);
  return b.finish(start);
}

// ---- deg1 ------------------------------------------------------------

SuiteReport suite_deg1(const VerifyOptions& o) {
  Clock::time_point start = Clock::now();
  SuiteBuilder b("deg1");
  Prop classes, brute, box;
  for (int n : n_values(o, 2, 10, 2)) {
    std::vector<CurveClass> expected = {
        {n, Rational(0), Rational(1)}, {n, Rational(1), Rational(-(n - 1))}};
    classes.expect(degree_one_classes(n) == expected,
                   at_n(n) + ": reported classes differ");

    // Independent enumeration: effectivity solved in cone coordinates by
    // hand, the degree written out as n*a + b.
    std::vector<std::pair<int, int>> found;
    for (int a = -20; a <= 20; ++a)
      for (int bb = -20; bb <= 20; ++bb) {
        bool effective = a >= 0 && bb + (n - 1) * a >= 0;
        if (effective && n * a + bb == 1) found.push_back({a, bb});
        CurveClass c{n, Rational(a), Rational(bb)};
        box.expect(is_effective_curve(c) == effective,
                   at_n(n) + ": effectivity test disagrees at (" +
                       std::to_string(a) + "," + std::to_string(bb) + ")");
      }
    std::sort(found.begin(), found.end());
    std::vector<std::pair<int, int>> want = {{0, 1}, {1, -(n - 1)}};
    std::sort(want.begin(), want.end());
    brute.expect(found == want, at_n(n) + ": brute-force box disagrees");
  }
  b.item("classes", classes.ok, classes.detail);
  b.item("brute-force", brute.ok, brute.detail);
  b.item("effective-box", box.ok, box.detail);
  return b.finish(start);
}

// ---- kva -------------------------------------------------------------

SuiteReport suite_kva(const VerifyOptions& o) {
  Clock::time_point start = Clock::now();
  SuiteBuilder b("kva");
  Prop diag;
  for (int n : n_values(o, 2, 50, 2))
    diag.expect(!kva_violation(n, n).has_value(),
                at_n(n) + ": (n,n) reported a violation");
  b.item("pass-diagonal", diag.ok, diag.detail);

  auto v12 = kva_violation(1, 2);
  b.item("violation-1-2", v12.has_value() && *v12 == 1,
         "(1,2) did not report the degree-1 violation");

  b.item("instances",
         !kva_violation(2, 2).has_value() && !kva_violation(7, 7).has_value(),
         "(2,2) or (7,7) failed to pass");

  bool applicable_ok = kva_applicable(1, 2) && !kva_applicable(1, 3);
  bool threw = false;
  try {
    kva_violation(1, 3);
  } catch (const DomainError&) {
    threw = true;
  }
  b.item("applicability", applicable_ok && threw,
         "applicability bound (a+3)^2 > 4k+5 not enforced");
  return b.finish(start);
}

// ---- lemma-4-7 -------------------------------------------------------

SuiteReport suite_lemma_4_7(const VerifyOptions& o) {
  Clock::time_point start = Clock::now();
  SuiteBuilder b("lemma-4-7");
  Prop premise, implication;
  int premise_cases = 0;
  for (int n : n_values(o, 2, 5, 2)) {
    TruncRing ring(n + 1);
    IdealSubspace tail = IdealSubspace::max_power(ring, n);
    int subst_count = trial_count(o, 20);
    Rng rng(mix_seed(o, 4, n));
    int index = 0;
    for (const IdealSubspace& base :
         enumerate_monomial_ideals(ring, n + 1)) {
      for (int v = 0; v <= subst_count; ++v, ++index) {
        IdealSubspace eta =
            v == 0 ? base : base.substituted(random_substitution(rng));
        std::string where = at_n(n) + " ideal=" + std::to_string(index);
        QMat socle = eta.socle();
        premise.expect(socle.rows() >= 1, where + ": empty socle");
        if (socle.rows() < 2) continue; // no two distinct ideals exist
        ++premise_cases;

        // The hypothesis, realized: two distinct colength-n ideals over eta.
        IdealSubspace i1 = IdealSubspace::from_rows(
            ring, row_space(eta.rows().vstack(socle.row(0))));
        IdealSubspace i2 = IdealSubspace::from_rows(
            ring, row_space(eta.rows().vstack(socle.row(1))));
        premise.expect(i1.colength() == n && i2.colength() == n,
                       where + ": extension is not colength n");
        premise.expect(!(i1 == i2), where + ": extensions coincide");
        premise.expect(i1.contains(eta) && i2.contains(eta),
                       where + ": extension lost the base ideal");

        implication.expect(eta.contains(tail),
                           where + ": m^n not inside the base ideal");
      }
    }
  }
  b.item("premise-construction", premise.ok, premise.detail);
  b.item("premise-nonvacuous", premise_cases > 0,
         "no ideal with socle dimension >= 2 was generated");
  b.item("implication", implication.ok, implication.detail);
  return b.finish(start);
}

// ---- pencils ---------------------------------------------------------

SuiteReport suite_pencils(const VerifyOptions& o) {
  Clock::time_point start = Clock::now();
  SuiteBuilder b("pencils");
  Prop members, family, roundtrip, independent;
  for (int n : n_values(o, 2, 6, 2)) {
    Rng rng(mix_seed(o, 5, n));
    int trials = trial_count(o, 50);
    for (int t = 0; t < trials; ++t) {
      std::string where = at_trial(n, t);
      EtaPair ep = random_eta_pair(rng, n);
      BetaPencil pencil = BetaPencil::build(ep.eta, ep.f1, ep.f2);

      std::vector<std::pair<Rational, Rational>> params = {
          {Rational(1), Rational(0)}, {Rational(0), Rational(1)}};
      for (int r = 0; r < 5; ++r)
        params.push_back({rng.rational(), rng.nonzero_rational()});
      for (const auto& [tt, ss] : params) {
        IdealSubspace m = pencil.member(tt, ss);
        members.expect(m.colength() == n,
                       where + ": member colength != " + std::to_string(n));
        members.expect(m.contains(ep.eta),
                       where + ": member does not contain the base ideal");
      }

      std::vector<IdealSubspace> mem = {
          pencil.member(Rational(1), Rational(0)),
          pencil.member(Rational(0), Rational(1)),
          pencil.member(Rational(1), Rational(1)),
          pencil.member(Rational(2), Rational(1))};

      std::vector<QMat> spaces = {mem[0].rows(), mem[1].rows(),
                                  mem[2].rows()};
      LineFamilyCheck check = is_line_family(spaces);
      family.expect(check.is_line, where + ": " + check.reason);

      RecognitionResult rec = recognize(mem);
      if (const auto* got = std::get_if<BetaPencil>(&rec)) {
        roundtrip.expect(got->eta().rows() == ep.eta.rows(),
                         where + ": recovered base ideal differs");
        roundtrip.expect(
            row_space_equal(got->span_rows(), pencil.span_rows()),
            where + ": recovered span differs");
      } else {
        roundtrip.expect(false, where + ": recognition failed: " +
                                    std::get<RecognitionFailure>(rec)
                                        .condition);
      }

      for (size_t i = 0; i < mem.size(); ++i)
        for (size_t j = i + 1; j < mem.size(); ++j)
          independent.expect(
              mem[i].intersect(mem[j]).rows() == ep.eta.rows(),
              where + ": intersection of a member pair is not the base");
    }
  }
  b.item("members", members.ok, members.detail);
  b.item("line-family", family.ok, family.detail);
  b.item("recognize-roundtrip", roundtrip.ok, roundtrip.detail);
  b.item("pair-independence", independent.ok, independent.detail);
  return b.finish(start);
}

// ---- decompose -------------------------------------------------------

PointedScheme moving_plus_fixed(const ProjPoint& x, int chart,
                                const IdealSubspace& local,
                                const std::vector<LocalComponent>& fixed) {
  std::vector<LocalComponent> comps;
  comps.emplace_back(x, chart, local);
  for (const LocalComponent& c : fixed) comps.push_back(c);
  return PointedScheme(std::move(comps));
}

SuiteReport suite_decompose(const VerifyOptions& o) {
  Clock::time_point start = Clock::now();
  SuiteBuilder b("decompose");
  Prop recover, fakes;
  const std::vector<std::pair<Rational, Rational>> params = {
      {Rational(1), Rational(0)},
      {Rational(0), Rational(1)},
      {Rational(1), Rational(1)}};
  for (int n : n_values(o, 2, 5, 2)) {
    Rng rng(mix_seed(o, 6, n));
    int trials = trial_count(o, 5);
    for (int k = 2; k <= n; ++k) {
      for (int t = 0; t < trials; ++t) {
        std::string where =
            at_trial(n, t) + " k=" + std::to_string(k);
        EtaPair ep = random_eta_pair(rng, k);
        BetaPencil pencil = BetaPencil::build(ep.eta, ep.f1, ep.f2);
        std::vector<LocalComponent> fixed;
        if (n > k) fixed = random_scheme(rng, n - k).components();
        auto hits_fixed = [&](const ProjPoint& p) {
          return std::any_of(fixed.begin(), fixed.end(),
                             [&](const LocalComponent& c) {
                               return c.point.same_point(p);
                             });
        };
        ProjPoint x = random_point(rng);
        while (hits_fixed(x)) x = random_point(rng);
        int chart = x.chart();

        std::vector<PointedScheme> samples;
        std::vector<IdealSubspace> locals;
        for (const auto& [tt, ss] : params) {
          locals.push_back(pencil.member(tt, ss));
          samples.push_back(moving_plus_fixed(x, chart, locals.back(), fixed));
        }

        DecomposeResult res = decompose_moving_point(samples);
        const auto* dec = std::get_if<Decomposition>(&res);
        if (!dec) {
          recover.expect(false,
                         where + ": rejected: " +
                             std::get<RecognitionFailure>(res).condition);
          continue;
        }
        recover.expect(dec->moving_point.same_point(x),
                       where + ": wrong moving point");
        recover.expect(dec->moving_length == k, where + ": wrong length");
        recover.expect(dec->pencil.eta().rows() == ep.eta.rows(),
                       where + ": wrong local base ideal");
        recover.expect(dec->moving.size() == locals.size() &&
                           std::equal(locals.begin(), locals.end(),
                                      dec->moving.begin()),
                       where + ": moving members differ");
        bool fixed_match = dec->fixed.size() == fixed.size();
        for (const LocalComponent& c : fixed) {
          bool hit = std::any_of(
              dec->fixed.begin(), dec->fixed.end(),
              [&](const LocalComponent& g) {
                return g.point.same_point(c.point) && g.chart == c.chart &&
                       g.local == c.local;
              });
          fixed_match = fixed_match && hit;
        }
        recover.expect(fixed_match, where + ": fixed part differs");
      }

      // Fake with two moving points: needs room for two pencils.
      if (n >= 4 && k == 2) {
        std::string where = at_n(n) + " fake";
        EtaPair e1 = random_eta_pair(rng, 2), e2 = random_eta_pair(rng, 2);
        BetaPencil p1 = BetaPencil::build(e1.eta, e1.f1, e1.f2);
        BetaPencil p2 = BetaPencil::build(e2.eta, e2.f1, e2.f2);
        std::vector<LocalComponent> fixed;
        if (n > 4) fixed = random_scheme(rng, n - 4).components();
        auto hits = [&](const ProjPoint& p,
                        const std::vector<LocalComponent>& away) {
          return std::any_of(away.begin(), away.end(),
                             [&](const LocalComponent& c) {
                               return c.point.same_point(p);
                             });
        };
        ProjPoint x1 = random_point(rng);
        while (hits(x1, fixed)) x1 = random_point(rng);
        ProjPoint x2 = random_point(rng);
        while (hits(x2, fixed) || x2.same_point(x1)) x2 = random_point(rng);

        std::vector<PointedScheme> samples;
        for (const auto& [tt, ss] : params) {
          std::vector<LocalComponent> comps;
          comps.emplace_back(x1, x1.chart(), p1.member(tt, ss));
          comps.emplace_back(x2, x2.chart(), p2.member(tt, ss));
          for (const LocalComponent& c : fixed) comps.push_back(c);
          samples.push_back(PointedScheme(std::move(comps)));
        }
        DecomposeResult res = decompose_moving_point(samples);
        fakes.expect(std::holds_alternative<RecognitionFailure>(res),
                     where + ": two moving points were accepted");
      }
    }
  }
  b.item("recover", recover.ok, recover.detail);
  b.item("reject-fakes", fakes.ok, fakes.detail);
  return b.finish(start);
}

// ---- binform-class ---------------------------------------------------

SuiteReport suite_binform_class(const VerifyOptions& o) {
  Clock::time_point start = Clock::now();
  SuiteBuilder b("binform-class");
  Prop ddeg, bdeg, cls, degree;
  for (int n : n_values(o, 2, 6, 2)) {
    Rng rng(mix_seed(o, 7, n));
    int trials = trial_count(o, 25);
    for (int t = 0; t < trials; ++t) {
      std::string where = at_trial(n, t);
      FormPencil p = random_pencil(rng, n);
      for (const auto& [u, v] :
           {std::pair{Rational(1), Rational(0)},
            std::pair{Rational(0), Rational(1)},
            std::pair{Rational(1), Rational(1)}})
        ddeg.expect(pencil_d_degree(p, u, v) == 1,
                    where + ": D-degree != 1");
      bdeg.expect(pencil_b_degree(p) == 2 * (n - 1),
                  where + ": B-degree != 2(n-1)");
      CurveClass got = pencil_class(p);
      cls.expect(got == CurveClass{n, Rational(1), Rational(-(n - 1))},
                 where + ": class is not beta_l-(n-1)beta_n");
      DivisorClass half{n, Rational(n), make_rational(-1, 2)};
      degree.expect(pair(half, got) == 1,
                    where + ": degree under nD-B/2 != 1");
    }
  }
  b.item("d-degree", ddeg.ok, ddeg.detail);
  b.item("b-degree", bdeg.ok, bdeg.detail);
  b.item("class", cls.ok, cls.detail);
  b.item("polarization-degree", degree.ok, degree.detail);
  return b.finish(start);
}

// ---- lemma-5-3 -------------------------------------------------------

SuiteReport suite_lemma_5_3(const VerifyOptions& o) {
  Clock::time_point start = Clock::now();
  SuiteBuilder b("lemma-5-3");
  Prop embed, sections, stable, supline;
  for (int n : n_values(o, 2, 6, 2)) {
    Rng rng(mix_seed(o, 8, n));
    int trials = trial_count(o, 25);
    for (int t = 0; t < trials; ++t) {
      std::string where = at_trial(n, t);
      FormPencil pencil = random_split_pencil(rng, n);
      QMat expected = product_space(
          QMat::identity(HomForm::coeff_count(n - 2)), n - 2,
          pencil.line().line);

      std::vector<QMat> spaces;
      for (const auto& [lm, mu] : {std::pair{Rational(1), Rational(0)},
                                   std::pair{Rational(0), Rational(1)}}) {
        auto xi = embed_member(pencil, lm, mu);
        if (!xi) {
          embed.expect(false, where + ": split member failed to embed");
          continue;
        }
        embed.expect(xi->length() == n, where + ": embedded length != n");
        QMat V = vanishing_forms(*xi, n - 1);
        sections.expect(
            row_space_equal(V, expected),
            where + ": sections differ from line times lower degree");
        spaces.push_back(std::move(V));

        auto line = support_line(*xi);
        if (!line) {
          supline.expect(false, where + ": no support line found");
          continue;
        }
        std::array<Rational, 3> got = *line;
        std::array<Rational, 3> want = {pencil.line().line.c[0],
                                        pencil.line().line.c[1],
                                        pencil.line().line.c[2]};
        normalize_triple(got);
        normalize_triple(want);
        supline.expect(got == want, where + ": support line differs");
      }
      if (spaces.size() == 2)
        stable.expect(row_space_equal(spaces[0], spaces[1]),
                      where + ": sections differ between members");
    }
  }
  b.item("embed", embed.ok, embed.detail);
  b.item("sections-factor", sections.ok, sections.detail);
  b.item("member-independence", stable.ok, stable.detail);
  b.item("support-line", supline.ok, supline.detail);
  return b.finish(start);
}

// ---- phi1-fibers -----------------------------------------------------

bool same_scheme(const PointedScheme& a, const PointedScheme& b) {
  if (a.components().size() != b.components().size()) return false;
  for (const LocalComponent& ca : a.components()) {
    bool hit = std::any_of(
        b.components().begin(), b.components().end(),
        [&](const LocalComponent& cb) {
          return ca.point.same_point(cb.point) && ca.chart == cb.chart &&
                 ca.local == cb.local;
        });
    if (!hit) return false;
  }
  return true;
}

SuiteReport suite_phi1_fibers(const VerifyOptions& o) {
  Clock::time_point start = Clock::now();
  SuiteBuilder b("phi1-fibers");
  Prop lines, points;
  for (int n : n_values(o, 3, 5, 3)) {
    Rng rng(mix_seed(o, 9, n));
    int trials = trial_count(o, 50);
    for (int t = 0; t < trials; ++t) {
      std::string where = at_trial(n, t);

      LineWithParam L = random_line(rng);
      PointedScheme xi1 = random_collinear_scheme(rng, n, L);
      PointedScheme xi2 = random_collinear_scheme(rng, n, L);
      int guard = 0;
      while (same_scheme(xi1, xi2) && ++guard < 100)
        xi2 = random_collinear_scheme(rng, n, L);
      PhiFiber f1 = phi1_fiber(xi1);
      PhiFiber f2 = phi1_fiber(xi2);
      lines.expect(f1.kind == FiberKind::Line && f2.kind == FiberKind::Line,
                   where + ": collinear scheme gave a point fiber");
      if (f1.kind == FiberKind::Line && f2.kind == FiberKind::Line) {
        lines.expect(f1.line.has_value() && f2.line.has_value() &&
                         *f1.line == *f2.line && *f1.line == L.line,
                     where + ": recovered lines differ");
        lines.expect(row_space_equal(f1.subspace, f2.subspace),
                     where + ": fiber subspaces differ");
      }

      PointedScheme xi = random_scheme(rng, n);
      guard = 0;
      while (h0_ideal_twist(xi, 1) != 0 && ++guard < 100)
        xi = random_scheme(rng, n);
      if (h0_ideal_twist(xi, 1) != 0) {
        points.expect(false, where + ": could not sample a non-collinear scheme");
        continue;
      }
      PhiFiber f = phi1_fiber(xi);
      points.expect(f.kind == FiberKind::Point && !f.line.has_value(),
                    where + ": generic scheme gave a line fiber");
    }
  }
  b.item("line-fibers", lines.ok, lines.detail);
  b.item("point-fibers", points.ok, points.detail);
  return b.finish(start);
}

// ---- dimensions ------------------------------------------------------

SuiteReport suite_dimensions(const VerifyOptions& o) {
  Clock::time_point start = Clock::now();
  SuiteBuilder b("dimensions");

  Prop h0;
  for (int n : n_values(o, 2, 6, 2)) {
    Rng rng(mix_seed(o, 10, n));
    int trials = trial_count(o, 20);
    for (int t = 0; t < trials; ++t) {
      std::string where = at_trial(n, t);
      PointedScheme xi = random_scheme(rng, n);
      h0.expect(h0_ideal_twist(xi, n - 1) ==
                    (n + 1) * n / 2 - n,
                where + ": h0 at twist n-1 is off the law");
      h0.expect(h0_ideal_twist(xi, n) == (n + 2) * (n + 1) / 2 - n,
                where + ": h0 at twist n is off the law");
    }
  }
  b.item("h0-laws", h0.ok, h0.detail);

  Prop moduli;
  for (int n : n_values(o, 2, 50, 2)) {
    auto beta = beta_moduli_dim(n);
    moduli.expect(beta.first == 2 * n - 2 && beta.second == 2 * n - 3,
                  at_n(n) + ": punctual-pencil moduli dimensions differ");
    moduli.expect(beta.first == beta.second + 1,
                  at_n(n) + ": actual != expected + 1");
    auto line = line_class_moduli_dim(n);
    moduli.expect(line.first == 2 * n && line.second == 2 * n,
                  at_n(n) + ": line-class moduli dimensions differ");
    moduli.expect(grass_bundle_moduli_dim(n) == 2 * n,
                  at_n(n) + ": pencil-bundle moduli dimension differs");
  }
  b.item("moduli", moduli.ok, moduli.detail);

  Prop theta;
  {
    TruncRing ring(3);
    IdealSubspace th = IdealSubspace::theta(ring);
    theta.expect(th.colength() == 3, "theta colength != 3");
    theta.expect(th.socle_dim() == 2, "theta socle dimension != 2");
    theta.expect(th.rows() == IdealSubspace::max_power(ring, 2).rows(),
                 "theta != m^2");

    // The only staircase of 3 boxes fitting under degree 2 with two
    // corners is (2,1), i.e. m^2: the n=2 base ideal is unique.
    int valid = 0;
    std::vector<int> the_one;
    for (const auto& part : partitions_of(3)) {
      int deg = 0, corners = 1;
      for (size_t i = 0; i < part.size(); ++i)
        deg = std::max(deg, static_cast<int>(i) + part[i] - 1);
      for (size_t i = 0; i + 1 < part.size(); ++i)
        if (part[i] != part[i + 1]) ++corners;
      if (deg <= 1 && corners >= 2) {
        ++valid;
        the_one = part;
      }
    }
    theta.expect(valid == 1 && the_one == std::vector<int>({2, 1}),
                 "n=2 admits a base staircase other than m^2");

    // Any admissible socle pair spans the same pencil.
    QMat socle = th.socle();
    Rng rng(mix_seed(o, 10, 1));
    RingElem ref1(ring, socle.row_vector(0));
    RingElem ref2(ring, socle.row_vector(1));
    BetaPencil ref = BetaPencil::build(th, ref1, ref2);
    for (int t = 0; t < 10; ++t) {
      QMat c(2, 2);
      do {
        for (int i = 0; i < 2; ++i)
          for (int j = 0; j < 2; ++j) c.at(i, j) = rng.rational();
      } while (c.determinant() == 0);
      QMat mixed = c.times(socle);
      BetaPencil other =
          BetaPencil::build(th, RingElem(ring, mixed.row_vector(0)),
                            RingElem(ring, mixed.row_vector(1)));
      theta.expect(other.eta().rows() == ref.eta().rows(),
                   "theta pencils disagree on the base ideal");
      theta.expect(row_space_equal(other.span_rows(), ref.span_rows()),
                   "theta pencils disagree on the span");
    }
  }
  b.item("theta-pencil", theta.ok, theta.detail);
  return b.finish(start);
}

// ---- partitions ------------------------------------------------------

SuiteReport suite_partitions(const VerifyOptions& o) {
  Clock::time_point start = Clock::now();
  SuiteBuilder b("partitions");
  int top = o.n.value_or(10);
  if (top < 1) throw DomainError("this suite needs n >= 1");

  // Independent count: the parts-bounded recurrence.
  int table_top = std::max(top, 10);
  std::vector<long> p(static_cast<size_t>(table_top) + 1, 0);
  p[0] = 1;
  for (int v = 1; v <= table_top; ++v)
    for (int s = v; s <= table_top; ++s) p[s] += p[s - v];
  b.item("oracle-constant", p[10] == 42, "recurrence gives p(10) != 42");

  Prop counts, valid, distinct, ideals;
  std::vector<int> ks;
  if (o.n)
    ks.push_back(*o.n);
  else
    for (int k = 1; k <= top; ++k) ks.push_back(k);
  for (int k : ks) {
    auto parts = partitions_of(k);
    counts.expect(static_cast<long>(parts.size()) == p[k],
                  "count at n=" + std::to_string(k) + " differs");
    std::set<std::vector<int>> seen;
    for (const auto& part : parts) {
      int sum = 0;
      bool sorted = true;
      for (size_t i = 0; i < part.size(); ++i) {
        sum += part[i];
        if (part[i] < 1 || (i > 0 && part[i] > part[i - 1])) sorted = false;
      }
      valid.expect(sorted && sum == k,
                   "invalid partition at n=" + std::to_string(k));
      seen.insert(part);
    }
    distinct.expect(seen.size() == parts.size(),
                    "duplicate partitions at n=" + std::to_string(k));

    TruncRing ring(k);
    auto mono = enumerate_monomial_ideals(ring, k);
    ideals.expect(mono.size() == parts.size(),
                  "ideal count at n=" + std::to_string(k) + " differs");
    for (const auto& ideal : mono)
      ideals.expect(ideal.colength() == k,
                    "wrong colength at n=" + std::to_string(k));
    for (size_t i = 0; i < mono.size(); ++i)
      for (size_t j = i + 1; j < mono.size(); ++j)
        ideals.expect(!(mono[i].rows() == mono[j].rows()),
                      "duplicate ideals at n=" + std::to_string(k));
  }
  b.item("counts", counts.ok, counts.detail);
  b.item("validity", valid.ok, valid.detail);
  b.item("distinctness", distinct.ok, distinct.detail);
  b.item("monomial-ideals", ideals.ok, ideals.detail);
  return b.finish(start);
}

} // namespace

std::vector<std::string> suite_names() {
  return {"pairing",  "deg1",          "kva",       "lemma-4-7",
          "pencils",  "decompose",     "binform-class", "lemma-5-3",
          "phi1-fibers", "dimensions", "partitions"};
}

SuiteReport run_suite(const std::string& name, const VerifyOptions& opts) {
  if (name == "pairing") return suite_pairing(opts);
  if (name == "deg1") return suite_deg1(opts);
  if (name == "kva") return suite_kva(opts);
  if (name == "lemma-4-7") return suite_lemma_4_7(opts);
  if (name == "pencils") return suite_pencils(opts);
  if (name == "decompose") return suite_decompose(opts);
  if (name == "binform-class") return suite_binform_class(opts);
  if (name == "lemma-5-3") return suite_lemma_5_3(opts);
  if (name == "phi1-fibers") return suite_phi1_fibers(opts);
  if (name == "dimensions") return suite_dimensions(opts);
  if (name == "partitions") return suite_partitions(opts);
  throw DomainError("unknown suite: " + name);
}

} // namespace hilb
