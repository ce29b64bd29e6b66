#include "jsonio.hpp"

#include "errors.hpp"
#include "polyparse.hpp"

namespace hilb {

Json rational_json(const Rational& r) { return Json(rational_to_string(r)); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return rational_from_string(j.get<std::string>());
  throw ParseError("expected a rational as \"p/q\" string or integer");
}

Json matrix_json(const QMat& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(rational_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

QMat matrix_from_json(const Json& j, int expected_cols) {
  if (!j.is_array()) throw ParseError("expected an array of rows");
  QMat m(static_cast<int>(j.size()), expected_cols);
  for (int i = 0; i < m.rows(); ++i) {
    const Json& row = j[i];
    if (!row.is_array() || static_cast<int>(row.size()) != expected_cols)
      throw ParseError("row " + std::to_string(i) + " must have " +
                       std::to_string(expected_cols) + " entries");
    for (int k = 0; k < expected_cols; ++k)
      m.at(i, k) = rational_from_json(row[k]);
  }
  return m;
}

Json ideal_json(const IdealSubspace& ideal) {
  Json out;
  out["N"] = ideal.ring().order;
  out["colength"] = ideal.colength();
  out["rows"] = matrix_json(ideal.rows());
  out["socle_dim"] = ideal.socle_dim();
  return out;
}

std::optional<IdealSubspace> ideal_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("expected an ideal object");
  if (!j.contains("N")) throw ParseError("ideal needs the context order N");
  TruncRing ring(j.at("N").get<int>());
  if (j.contains("generators")) {
    std::vector<RingElem> gens;
    for (const Json& g : j.at("generators"))
      gens.push_back(RingElem::parse(ring, g.get<std::string>()));
    return IdealSubspace::from_generators(ring, gens);
  }
  if (j.contains("rows"))
    return IdealSubspace::from_rows(ring,
                                    matrix_from_json(j.at("rows"), ring.dim()));
  throw ParseError("ideal needs either generators or rows");
}

Json scheme_json(const PointedScheme& s) {
  Json out;
  out["length"] = s.length();
  Json points = Json::array();
  for (const auto& comp : s.components()) {
    Json p;
    Json coords = Json::array();
    for (int i = 0; i < 3; ++i) coords.push_back(rational_json(comp.point.x[i]));
    p["coords"] = std::move(coords);
    p["chart"] = comp.chart;
    p["local"] = ideal_json(comp.local);
    points.push_back(std::move(p));
  }
  out["points"] = std::move(points);
  return out;
}

PointedScheme scheme_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("points"))
    throw ParseError("expected a scheme object with points");
  std::vector<LocalComponent> comps;
  for (const Json& p : j.at("points")) {
    const Json& coords = p.at("coords");
    if (!coords.is_array() || coords.size() != 3)
      throw ParseError("point needs three coordinates");
    ProjPoint point(rational_from_json(coords[0]), rational_from_json(coords[1]),
                    rational_from_json(coords[2]));
    auto local = ideal_from_json(p.at("local"));
    if (!local)
      throw DomainError("a local ideal must be proper, not the unit ideal");
    int chart = p.contains("chart") ? p.at("chart").get<int>() : point.chart();
    comps.emplace_back(point, chart, std::move(*local));
  }
  return PointedScheme(std::move(comps));
}

Json pluecker_json(const PlueckerVector& p) {
  Json out;
  out["k"] = p.sub_dim;
  out["amb"] = p.amb_dim;
  Json coords = Json::object();
  auto subsets = lex_subsets(p.amb_dim, p.sub_dim);
  for (size_t i = 0; i < subsets.size(); ++i) {
    if (p.coords[i] == 0) continue;
    std::string key;
    for (size_t t = 0; t < subsets[i].size(); ++t) {
      if (t > 0) key += ',';
      key += std::to_string(subsets[i][t]);
    }
    coords[key] = rational_json(p.coords[i]);
  }
  out["coords"] = std::move(coords);
  return out;
}

Json curve_class_json(const CurveClass& c) {
  Json out;
  out["n"] = c.n;
  out["a"] = rational_json(c.a);
  out["b"] = rational_json(c.b);
  return out;
}

Json divisor_class_json(const DivisorClass& d) {
  Json out;
  out["n"] = d.n;
  out["p"] = rational_json(d.p);
  out["q"] = rational_json(d.q);
  return out;
}

namespace {

// Linear expression over two named basis symbols; returns the coefficients.
std::pair<Rational, Rational> linear_expression(const std::string& text,
                                                const std::string& first,
                                                const std::string& second) {
  SparsePoly poly = parse_polynomial(text, {first, second});
  Rational a, b;
  for (const auto& [expo, coeff] : poly) {
    if (expo[0] == 1 && expo[1] == 0)
      a = coeff;
    else if (expo[0] == 0 && expo[1] == 1)
      b = coeff;
    else
      throw ParseError("class expression must be linear in " + first +
                       " and " + second);
  }
  return {a, b};
}

} // namespace

DivisorClass divisor_class_from_json(int n, const Json& j) {
  if (j.is_string()) {
    auto [p, q] = linear_expression(j.get<std::string>(), "D", "B");
    return DivisorClass{n, p, q};
  }
  return DivisorClass{n, rational_from_json(j.at("p")),
                      rational_from_json(j.at("q"))};
}

CurveClass curve_class_from_json(int n, const Json& j) {
  if (j.is_string()) {
    auto [a, b] = linear_expression(j.get<std::string>(), "bl", "bn");
    return CurveClass{n, a, b};
  }
  return CurveClass{n, rational_from_json(j.at("a")),
                    rational_from_json(j.at("b"))};
}

} // namespace hilb
