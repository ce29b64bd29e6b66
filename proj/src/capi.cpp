#include "hilbplane.h"

#include <cstdlib>
#include <cstring>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "ampleness.hpp"
#include "binforms.hpp"
#include "cones.hpp"
#include "errors.hpp"
#include "ideals.hpp"
#include "jsonio.hpp"
#include "pencils.hpp"
#include "pluecker.hpp"
#include "schemes.hpp"
#include "truncring.hpp"
#include "verify.hpp"

struct hilb_ring {
  hilb::TruncRing ring;
};

struct hilb_ideal {
  hilb::IdealSubspace ideal;
};

namespace {

using hilb::Json;

thread_local std::string g_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

/// Runs the body, translating exceptions into status codes and the
/// thread-local message.
template <typename F>
int guarded(F&& body) {
  try {
    body();
    g_error.clear();
    return HILB_OK;
  } catch (const hilb::ParseError& e) {
    g_error = e.what();
    return HILB_ERR_USAGE;
  } catch (const nlohmann::json::exception& e) {
    g_error = e.what();
    return HILB_ERR_USAGE;
  } catch (const hilb::DomainError& e) {
    g_error = e.what();
    return HILB_ERR_DOMAIN;
  } catch (const std::exception& e) {
    g_error = e.what();
    return HILB_ERR_DOMAIN;
  }
}

// ---- request helpers ---------------------------------------------------

hilb::TruncRing ring_arg(const Json& j, const char* key = "N") {
  return hilb::TruncRing(j.at(key).get<int>());
}

hilb::IdealSubspace need_ideal(const Json& j) {
  auto ideal = hilb::ideal_from_json(j);
  if (!ideal)
    throw hilb::DomainError("a proper ideal is required, got the unit ideal");
  return *ideal;
}

hilb::LinearSubst subst_arg(const Json& j) {
  return hilb::make_subst(
      hilb::rational_from_json(j.at("a")), hilb::rational_from_json(j.at("b")),
      hilb::rational_from_json(j.at("c")), hilb::rational_from_json(j.at("d")));
}

hilb::HomForm line_arg(const Json& j, const char* key = "line") {
  hilb::HomForm line = hilb::HomForm::parse(j.at(key).get<std::string>());
  if (line.degree != 1)
    throw hilb::DomainError("the line must be a degree-1 form");
  return line;
}

long integral(const hilb::Rational& r, const char* what) {
  if (r.get_den() != 1)
    throw hilb::DomainError(std::string(what) + " is not an integer");
  return r.get_num().get_si();
}

long checked_binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long result = 1;
  for (int i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
    if (result > 2'000'000)
      throw hilb::DomainError("coordinate vector too large");
  }
  return result;
}

Json pencil_json(const hilb::BetaPencil& pencil) {
  Json out;
  out["n"] = pencil.n();
  out["eta"] = hilb::ideal_json(pencil.eta());
  out["f1"] = pencil.f1().to_string();
  out["f2"] = pencil.f2().to_string();
  out["span"] = hilb::matrix_json(pencil.span_rows());
  return out;
}

Json component_json(const hilb::LocalComponent& comp) {
  Json p;
  Json coords = Json::array();
  for (int i = 0; i < 3; ++i)
    coords.push_back(hilb::rational_json(comp.point.x[i]));
  p["coords"] = std::move(coords);
  p["chart"] = comp.chart;
  p["local"] = hilb::ideal_json(comp.local);
  return p;
}

// ---- command handlers ----------------------------------------------------

Json cmd_ring_info(const Json& j) {
  hilb::TruncRing ring = ring_arg(j);
  Json out;
  out["N"] = ring.order;
  out["dim"] = ring.dim();
  Json basis = Json::array();
  for (int i = 0; i < ring.dim(); ++i) {
    auto [a, b] = ring.monomial_at(i);
    basis.push_back(hilb::RingElem::monomial(ring, a, b).to_string());
  }
  out["basis"] = std::move(basis);
  return out;
}

Json cmd_ring_multiply(const Json& j) {
  hilb::TruncRing ring = ring_arg(j);
  hilb::RingElem f = hilb::RingElem::parse(ring, j.at("f").get<std::string>());
  hilb::RingElem g = hilb::RingElem::parse(ring, j.at("g").get<std::string>());
  Json out;
  out["product"] = f.times(g).to_string();
  return out;
}

Json cmd_ring_substitute(const Json& j) {
  hilb::TruncRing ring = ring_arg(j);
  hilb::RingElem f = hilb::RingElem::parse(ring, j.at("f").get<std::string>());
  Json out;
  out["result"] = hilb::substituted(f, subst_arg(j.at("subst"))).to_string();
  return out;
}

Json cmd_ideal_colength(const Json& j) {
  auto ideal = hilb::ideal_from_json(j);
  Json out;
  out["colength"] = ideal ? ideal->colength() : 0;
  if (!ideal) out["unit"] = true;
  return out;
}

Json cmd_ideal_info(const Json& j) {
  auto ideal = hilb::ideal_from_json(j);
  if (!ideal) {
    Json out;
    out["unit"] = true;
    return out;
  }
  Json out = hilb::ideal_json(*ideal);
  out["unit"] = false;
  if (ideal->ring().order >= ideal->colength())
    out["min_generators"] = ideal->min_generators();
  return out;
}

Json cmd_ideal_socle(const Json& j) {
  Json out;
  out["socle"] = hilb::matrix_json(need_ideal(j).socle());
  return out;
}

Json cmd_ideal_min_generators(const Json& j) {
  Json out;
  out["min_generators"] = need_ideal(j).min_generators();
  return out;
}

Json cmd_ideal_intersect(const Json& j) {
  return hilb::ideal_json(need_ideal(j.at("a")).intersect(need_ideal(j.at("b"))));
}

Json cmd_ideal_sum(const Json& j) {
  return hilb::ideal_json(need_ideal(j.at("a")).sum(need_ideal(j.at("b"))));
}

Json cmd_ideal_contains(const Json& j) {
  Json out;
  out["contains"] = need_ideal(j.at("a")).contains(need_ideal(j.at("b")));
  return out;
}

Json cmd_ideal_equals(const Json& j) {
  Json out;
  out["equals"] = need_ideal(j.at("a")) == need_ideal(j.at("b"));
  return out;
}

Json cmd_ideal_substitute(const Json& j) {
  return hilb::ideal_json(
      need_ideal(j.at("ideal")).substituted(subst_arg(j.at("subst"))));
}

Json cmd_ideal_restrict(const Json& j) {
  return hilb::ideal_json(
      need_ideal(j.at("ideal")).restricted(j.at("order").get<int>()));
}

Json cmd_ideal_theta(const Json& j) {
  return hilb::ideal_json(hilb::IdealSubspace::theta(ring_arg(j)));
}

Json cmd_ideal_monomial(const Json& j) {
  std::vector<int> partition;
  for (const Json& part : j.at("partition"))
    partition.push_back(part.get<int>());
  return hilb::ideal_json(
      hilb::IdealSubspace::monomial_ideal(ring_arg(j), partition));
}

Json cmd_ideal_enumerate(const Json& j) {
  Json out;
  Json list = Json::array();
  for (const auto& ideal : hilb::enumerate_monomial_ideals(
           ring_arg(j), j.at("colength").get<int>()))
    list.push_back(hilb::ideal_json(ideal));
  out["ideals"] = std::move(list);
  return out;
}

Json cmd_pluecker_coords(const Json& j) {
  int amb = j.at("amb").get<int>();
  return hilb::pluecker_json(
      hilb::pluecker_coords(hilb::matrix_from_json(j.at("rows"), amb)));
}

Json cmd_pluecker_reconstruct(const Json& j) {
  hilb::PlueckerVector p;
  p.sub_dim = j.at("k").get<int>();
  p.amb_dim = j.at("amb").get<int>();
  if (p.sub_dim < 1 || p.sub_dim > p.amb_dim)
    throw hilb::DomainError("need 1 <= k <= ambient dimension");
  p.coords.assign(checked_binomial(p.amb_dim, p.sub_dim), hilb::Rational(0));
  const Json& coords = j.at("coords");
  auto subsets = hilb::lex_subsets(p.amb_dim, p.sub_dim);
  for (size_t i = 0; i < subsets.size(); ++i) {
    std::string key;
    for (size_t t = 0; t < subsets[i].size(); ++t) {
      if (t > 0) key += ',';
      key += std::to_string(subsets[i][t]);
    }
    if (coords.contains(key))
      p.coords[i] = hilb::rational_from_json(coords.at(key));
  }
  Json out;
  out["rows"] = hilb::matrix_json(hilb::reconstruct_subspace(p));
  return out;
}

Json cmd_pluecker_line_family(const Json& j) {
  int amb = j.at("amb").get<int>();
  std::vector<hilb::QMat> samples;
  for (const Json& rows : j.at("samples"))
    samples.push_back(hilb::matrix_from_json(rows, amb));
  hilb::LineFamilyCheck check = hilb::is_line_family(samples);
  Json out;
  out["is_line"] = check.is_line;
  if (!check.is_line) {
    out["reason"] = check.reason;
  } else {
    out["common"] = hilb::matrix_json(check.pencil->common);
    out["span"] = hilb::matrix_json(check.pencil->span);
  }
  return out;
}

hilb::BetaPencil pencil_arg(const Json& j) {
  hilb::IdealSubspace eta = need_ideal(j.at("eta"));
  hilb::RingElem f =
      hilb::RingElem::parse(eta.ring(), j.at("f").get<std::string>());
  hilb::RingElem g =
      hilb::RingElem::parse(eta.ring(), j.at("g").get<std::string>());
  return hilb::BetaPencil::build(eta, f, g);
}

Json cmd_betacurve_build(const Json& j) { return pencil_json(pencil_arg(j)); }

Json cmd_betacurve_member(const Json& j) {
  hilb::BetaPencil pencil = pencil_arg(j);
  return hilb::ideal_json(pencil.member(hilb::rational_from_json(j.at("t")),
                                        hilb::rational_from_json(j.at("s"))));
}

Json cmd_betacurve_recognize(const Json& j) {
  std::vector<hilb::IdealSubspace> samples;
  for (const Json& sample : j.at("samples"))
    samples.push_back(need_ideal(sample));
  hilb::RecognitionResult res = hilb::recognize(samples);
  Json out;
  if (const auto* pencil = std::get_if<hilb::BetaPencil>(&res)) {
    out["recognized"] = true;
    out["pencil"] = pencil_json(*pencil);
  } else {
    out["recognized"] = false;
    out["condition"] = std::get<hilb::RecognitionFailure>(res).condition;
  }
  return out;
}

Json cmd_betacurve_decompose(const Json& j) {
  std::vector<hilb::PointedScheme> samples;
  for (const Json& sample : j.at("samples"))
    samples.push_back(hilb::scheme_from_json(sample));
  hilb::DecomposeResult res = hilb::decompose_moving_point(samples);
  Json out;
  const auto* dec = std::get_if<hilb::Decomposition>(&res);
  if (!dec) {
    out["decomposed"] = false;
    out["condition"] = std::get<hilb::RecognitionFailure>(res).condition;
    return out;
  }
  out["decomposed"] = true;
  Json coords = Json::array();
  for (int i = 0; i < 3; ++i)
    coords.push_back(hilb::rational_json(dec->moving_point.x[i]));
  out["point"] = std::move(coords);
  out["chart"] = dec->chart;
  out["length"] = dec->moving_length;
  out["pencil"] = pencil_json(dec->pencil);
  Json moving = Json::array();
  for (const auto& ideal : dec->moving) moving.push_back(hilb::ideal_json(ideal));
  out["moving"] = std::move(moving);
  Json fixed = Json::array();
  for (const auto& comp : dec->fixed) fixed.push_back(component_json(comp));
  out["fixed"] = std::move(fixed);
  return out;
}

Json cmd_betacurve_moduli(const Json& j) {
  auto [dim, expected] = hilb::beta_moduli_dim(j.at("n").get<int>());
  Json out;
  out["dim"] = dim;
  out["expected"] = expected;
  return out;
}

Json cmd_cone_pair(const Json& j) {
  int n = j.at("n").get<int>();
  Json out;
  out["value"] = hilb::rational_json(
      hilb::pair(hilb::divisor_class_from_json(n, j.at("divisor")),
                 hilb::curve_class_from_json(n, j.at("curve"))));
  return out;
}

Json cmd_cone_nef(const Json& j) {
  int n = j.at("n").get<int>();
  Json out;
  out["nef"] = hilb::is_nef(hilb::divisor_class_from_json(n, j.at("divisor")));
  return out;
}

Json cmd_cone_effective(const Json& j) {
  int n = j.at("n").get<int>();
  Json out;
  out["effective"] =
      hilb::is_effective_curve(hilb::curve_class_from_json(n, j.at("curve")));
  return out;
}

Json cmd_cone_deg1(const Json& j) {
  Json out;
  Json classes = Json::array();
  for (const auto& c : hilb::degree_one_classes(j.at("n").get<int>())) {
    Json entry;
    entry["a"] = integral(c.a, "class coefficient");
    entry["b"] = integral(c.b, "class coefficient");
    classes.push_back(std::move(entry));
  }
  out["classes"] = std::move(classes);
  return out;
}

Json cmd_cone_generators(const Json& j) {
  int n = j.at("n").get<int>();
  auto [nef1, nef2] = hilb::nef_generators(n);
  auto [eff1, eff2] = hilb::effective_generators(n);
  Json out;
  out["nef"] = Json::array(
      {hilb::divisor_class_json(nef1), hilb::divisor_class_json(nef2)});
  out["effective"] = Json::array(
      {hilb::curve_class_json(eff1), hilb::curve_class_json(eff2)});
  return out;
}

Json cmd_cone_canonical(const Json& j) {
  return hilb::divisor_class_json(
      hilb::canonical_class(j.at("n").get<int>()));
}

Json cmd_cone_moduli_line(const Json& j) {
  auto [dim, expected] = hilb::line_class_moduli_dim(j.at("n").get<int>());
  Json out;
  out["dim"] = dim;
  out["expected"] = expected;
  return out;
}

Json cmd_scheme_info(const Json& j) {
  return hilb::scheme_json(hilb::scheme_from_json(j.at("scheme")));
}

Json cmd_scheme_reduced(const Json& j) {
  std::vector<hilb::ProjPoint> points;
  for (const Json& p : j.at("points")) {
    if (!p.is_array() || p.size() != 3)
      throw hilb::ParseError("each point needs three coordinates");
    points.emplace_back(hilb::rational_from_json(p[0]),
                        hilb::rational_from_json(p[1]),
                        hilb::rational_from_json(p[2]));
  }
  return hilb::scheme_json(hilb::reduced_scheme(points));
}

Json cmd_scheme_collinear(const Json& j) {
  auto line = hilb::support_line(hilb::scheme_from_json(j.at("scheme")));
  Json out;
  if (!line) {
    out["line"] = nullptr;
    return out;
  }
  Json coeffs = Json::array();
  for (const auto& c : *line) coeffs.push_back(hilb::rational_json(c));
  out["line"] = std::move(coeffs);
  return out;
}

Json cmd_scheme_in_line(const Json& j) {
  Json out;
  out["contained"] =
      hilb::scheme_in_line(hilb::scheme_from_json(j.at("scheme")), line_arg(j));
  return out;
}

Json cmd_h0(const Json& j) {
  hilb::PointedScheme xi = hilb::scheme_from_json(j.at("scheme"));
  int m = j.at("m").get<int>();
  Json out;
  hilb::QMat sections = hilb::vanishing_forms(xi, m);
  out["h0"] = sections.rows();
  out["sections"] = hilb::matrix_json(sections);
  return out;
}

Json cmd_phi(const Json& j) {
  hilb::PointedScheme xi = hilb::scheme_from_json(j.at("scheme"));
  hilb::PhiImage image = j.contains("m")
                             ? hilb::phi_map(xi, j.at("m").get<int>())
                             : hilb::phi_map(xi);
  Json out;
  out["twist"] = image.twist;
  out["subspace"] = hilb::matrix_json(image.subspace);
  out["pluecker"] = hilb::pluecker_json(image.coords);
  return out;
}

Json cmd_phi1_fiber(const Json& j) {
  hilb::PhiFiber fiber =
      hilb::phi1_fiber(hilb::scheme_from_json(j.at("scheme")));
  Json out;
  out["kind"] = fiber.kind == hilb::FiberKind::Line ? "line" : "point";
  out["line"] = fiber.line ? Json(fiber.line->to_string()) : Json(nullptr);
  out["subspace"] = hilb::matrix_json(fiber.subspace);
  return out;
}

Json cmd_kva(const Json& j) {
  auto violation =
      hilb::kva_violation(j.at("a").get<int>(), j.at("k").get<int>());
  Json out;
  if (!violation) {
    out["result"] = "pass";
  } else {
    out["result"] = "violation";
    out["d"] = *violation;
    out["note"] =
        "the test is sufficient only: a violation does not disprove "
        "k-very-ampleness";
  }
  return out;
}

hilb::FormPencil form_pencil_arg(const Json& j) {
  hilb::BinaryForm F = hilb::BinaryForm::parse(j.at("F").get<std::string>());
  hilb::BinaryForm G = hilb::BinaryForm::parse(j.at("G").get<std::string>());
  if (j.contains("n") && j.at("n").get<int>() != F.degree())
    throw hilb::DomainError("n disagrees with the degree of F");
  return hilb::FormPencil::build(std::move(F), std::move(G),
                                 hilb::LineWithParam::of(line_arg(j)));
}

Json cmd_binform_class(const Json& j) {
  hilb::FormPencil p = form_pencil_arg(j);
  hilb::CurveClass cls = hilb::pencil_class(p);
  Json out;
  out["n"] = p.n();
  out["d_degree"] =
      hilb::pencil_d_degree(p, hilb::Rational(1), hilb::Rational(0));
  out["b_degree"] = hilb::pencil_b_degree(p);
  Json entry;
  entry["a"] = integral(cls.a, "class coefficient");
  entry["b"] = integral(cls.b, "class coefficient");
  out["class"] = std::move(entry);
  return out;
}

Json cmd_binform_disc(const Json& j) {
  hilb::FormPencil p = form_pencil_arg(j);
  hilb::BivarForm disc = hilb::pencil_discriminant(p);
  Json out;
  out["degree"] = disc.degree();
  Json coeffs = Json::array();
  for (const auto& c : disc.c) coeffs.push_back(hilb::rational_json(c));
  out["coefficients"] = std::move(coeffs);
  return out;
}

Json cmd_binform_embed(const Json& j) {
  hilb::FormPencil p = form_pencil_arg(j);
  auto scheme =
      hilb::embed_member(p, hilb::rational_from_json(j.at("lambda")),
                         hilb::rational_from_json(j.at("mu")));
  Json out;
  out["split"] = scheme.has_value();
  if (scheme) out["scheme"] = hilb::scheme_json(*scheme);
  return out;
}

Json cmd_binform_moduli(const Json& j) {
  Json out;
  out["dim"] = hilb::grass_bundle_moduli_dim(j.at("n").get<int>());
  return out;
}

Json cmd_verify(const Json& j) {
  hilb::VerifyOptions opts;
  if (j.contains("n")) opts.n = j.at("n").get<int>();
  if (j.contains("trials")) opts.trials = j.at("trials").get<int>();
  if (j.contains("seed")) opts.seed = j.at("seed").get<std::uint64_t>();
  hilb::SuiteReport rep =
      hilb::run_suite(j.at("suite").get<std::string>(), opts);
  Json out;
  out["suite"] = rep.suite;
  out["pass"] = rep.pass;
  Json items = Json::array();
  for (const auto& item : rep.items) {
    Json entry;
    entry["name"] = item.name;
    entry["pass"] = item.pass;
    entry["detail"] = item.detail;
    entry["millis"] = item.millis;
    items.push_back(std::move(entry));
  }
  out["items"] = std::move(items);
  out["millis"] = rep.millis;
  return out;
}

Json cmd_verify_suites(const Json&) {
  Json out;
  out["suites"] = hilb::suite_names();
  return out;
}

using Handler = Json (*)(const Json&);

const std::map<std::string, Handler>& registry() {
  static const std::map<std::string, Handler> map = {
      {"ring.info", cmd_ring_info},
      {"ring.multiply", cmd_ring_multiply},
      {"ring.substitute", cmd_ring_substitute},
      {"ideal.colength", cmd_ideal_colength},
      {"ideal.info", cmd_ideal_info},
      {"ideal.socle", cmd_ideal_socle},
      {"ideal.min-generators", cmd_ideal_min_generators},
      {"ideal.intersect", cmd_ideal_intersect},
      {"ideal.sum", cmd_ideal_sum},
      {"ideal.contains", cmd_ideal_contains},
      {"ideal.equals", cmd_ideal_equals},
      {"ideal.substitute", cmd_ideal_substitute},
      {"ideal.restrict", cmd_ideal_restrict},
      {"ideal.theta", cmd_ideal_theta},
      {"ideal.monomial", cmd_ideal_monomial},
      {"ideal.enumerate", cmd_ideal_enumerate},
      {"pluecker.coords", cmd_pluecker_coords},
      {"pluecker.reconstruct", cmd_pluecker_reconstruct},
      {"pluecker.line-family", cmd_pluecker_line_family},
      {"betacurve.build", cmd_betacurve_build},
      {"betacurve.member", cmd_betacurve_member},
      {"betacurve.recognize", cmd_betacurve_recognize},
      {"betacurve.decompose", cmd_betacurve_decompose},
      {"betacurve.moduli", cmd_betacurve_moduli},
      {"cone.pair", cmd_cone_pair},
      {"cone.nef", cmd_cone_nef},
      {"cone.effective", cmd_cone_effective},
      {"cone.deg1", cmd_cone_deg1},
      {"cone.generators", cmd_cone_generators},
      {"cone.canonical", cmd_cone_canonical},
      {"cone.moduli-line", cmd_cone_moduli_line},
      {"scheme.info", cmd_scheme_info},
      {"scheme.reduced", cmd_scheme_reduced},
      {"scheme.collinear", cmd_scheme_collinear},
      {"scheme.in-line", cmd_scheme_in_line},
      {"h0", cmd_h0},
      {"phi", cmd_phi},
      {"phi1.fiber", cmd_phi1_fiber},
      {"kva", cmd_kva},
      {"binform.class", cmd_binform_class},
      {"binform.disc", cmd_binform_disc},
      {"binform.embed", cmd_binform_embed},
      {"binform.moduli", cmd_binform_moduli},
      {"verify", cmd_verify},
      {"verify.suites", cmd_verify_suites},
  };
  return map;
}

} // namespace

extern "C" {

const char* hilb_version(void) { return "1.0.0"; }

const char* hilb_last_error(void) { return g_error.c_str(); }

hilb_ring* hilb_ring_new(int order) {
  hilb_ring* out = nullptr;
  guarded([&] { out = new hilb_ring{hilb::TruncRing(order)}; });
  return out;
}

void hilb_ring_free(hilb_ring* ring) { delete ring; }

int hilb_ring_order(const hilb_ring* ring) {
  if (!ring) {
    g_error = "null ring";
    return -1;
  }
  return ring->ring.order;
}

int hilb_ring_dim(const hilb_ring* ring) {
  if (!ring) {
    g_error = "null ring";
    return -1;
  }
  return ring->ring.dim();
}

int hilb_ideal_from_generators(const hilb_ring* ring, const char* generators,
                               hilb_ideal** out, int* is_unit) {
  if (!ring || !out || !is_unit) {
    g_error = "null argument";
    return HILB_ERR_USAGE;
  }
  *out = nullptr;
  *is_unit = 0;
  return guarded([&] {
    std::vector<hilb::RingElem> gens;
    std::string text = generators ? generators : "";
    size_t pos = 0;
    while (pos <= text.size() && !text.empty()) {
      size_t comma = text.find(',', pos);
      std::string piece = text.substr(
          pos, comma == std::string::npos ? std::string::npos : comma - pos);
      if (piece.find_first_not_of(" \t") != std::string::npos)
        gens.push_back(hilb::RingElem::parse(ring->ring, piece));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    auto ideal = hilb::IdealSubspace::from_generators(ring->ring, gens);
    if (!ideal)
      *is_unit = 1;
    else
      *out = new hilb_ideal{*ideal};
  });
}

hilb_ideal* hilb_ideal_theta(const hilb_ring* ring) {
  if (!ring) {
    g_error = "null ring";
    return nullptr;
  }
  hilb_ideal* out = nullptr;
  guarded([&] { out = new hilb_ideal{hilb::IdealSubspace::theta(ring->ring)}; });
  return out;
}

void hilb_ideal_free(hilb_ideal* ideal) { delete ideal; }

int hilb_ideal_colength(const hilb_ideal* ideal) {
  if (!ideal) {
    g_error = "null ideal";
    return -1;
  }
  return ideal->ideal.colength();
}

int hilb_ideal_socle_dim(const hilb_ideal* ideal) {
  if (!ideal) {
    g_error = "null ideal";
    return -1;
  }
  int dim = -1;
  guarded([&] { dim = ideal->ideal.socle_dim(); });
  return dim;
}

int hilb_ideal_min_generators(const hilb_ideal* ideal) {
  if (!ideal) {
    g_error = "null ideal";
    return -1;
  }
  int count = -1;
  guarded([&] { count = ideal->ideal.min_generators(); });
  return count;
}

int hilb_ideal_contains(const hilb_ideal* a, const hilb_ideal* b) {
  if (!a || !b) {
    g_error = "null ideal";
    return -1;
  }
  int result = -1;
  guarded([&] { result = a->ideal.contains(b->ideal) ? 1 : 0; });
  return result;
}

int hilb_ideal_equals(const hilb_ideal* a, const hilb_ideal* b) {
  if (!a || !b) {
    g_error = "null ideal";
    return -1;
  }
  return a->ideal == b->ideal ? 1 : 0;
}

hilb_ideal* hilb_ideal_intersect(const hilb_ideal* a, const hilb_ideal* b) {
  if (!a || !b) {
    g_error = "null ideal";
    return nullptr;
  }
  hilb_ideal* out = nullptr;
  guarded([&] { out = new hilb_ideal{a->ideal.intersect(b->ideal)}; });
  return out;
}

hilb_ideal* hilb_ideal_sum(const hilb_ideal* a, const hilb_ideal* b) {
  if (!a || !b) {
    g_error = "null ideal";
    return nullptr;
  }
  hilb_ideal* out = nullptr;
  guarded([&] { out = new hilb_ideal{a->ideal.sum(b->ideal)}; });
  return out;
}

char* hilb_ideal_to_json(const hilb_ideal* ideal) {
  if (!ideal) {
    g_error = "null ideal";
    return nullptr;
  }
  char* out = nullptr;
  guarded([&] { out = dup_string(hilb::ideal_json(ideal->ideal).dump()); });
  return out;
}

int hilb_eval(const char* command, const char* request_json, char** out_json) {
  if (!command || !out_json) {
    g_error = "null argument";
    return HILB_ERR_USAGE;
  }
  *out_json = nullptr;
  return guarded([&] {
    Json request = (request_json && *request_json)
                       ? Json::parse(request_json)
                       : Json::object();
    auto it = registry().find(command);
    if (it == registry().end())
      throw hilb::ParseError("unknown command: " + std::string(command));
    *out_json = dup_string(it->second(request).dump());
    if (!*out_json) throw std::bad_alloc();
  });
}

char* hilb_commands(void) {
  std::string joined;
  for (const auto& [name, handler] : registry()) {
    (void)handler;
    if (!joined.empty()) joined += '\n';
    joined += name;
  }
  return dup_string(joined);
}

void hilb_string_free(char* s) { std::free(s); }

} // extern "C"
