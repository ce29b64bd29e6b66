#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "binforms.hpp"
#include "cones.hpp"
#include "ideals.hpp"
#include "pluecker.hpp"
#include "schemes.hpp"

namespace hilb {

/// Stable key order keeps every output byte-reproducible.
using Json = nlohmann::ordered_json;

/// Rationals always serialize as strings "p/q" (or "p"), never as floats.
Json rational_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json matrix_json(const QMat& m);
QMat matrix_from_json(const Json& j, int expected_cols);

Json ideal_json(const IdealSubspace& ideal);
/// Accepts {"N": order, "generators": ["u^2", ...]} or {"N", "rows": [[..]]};
/// nullopt when the generators span the unit ideal.
std::optional<IdealSubspace> ideal_from_json(const Json& j);

Json scheme_json(const PointedScheme& s);
PointedScheme scheme_from_json(const Json& j);

/// Nonzero coordinates only, keyed by the comma-joined column subset.
Json pluecker_json(const PlueckerVector& p);

Json curve_class_json(const CurveClass& c);
Json divisor_class_json(const DivisorClass& d);

/// Parses a class given either coordinate fields or a basis expression:
/// divisors over D and B ("3*D - 1/2*B"), curves over bl and bn.
DivisorClass divisor_class_from_json(int n, const Json& j);
CurveClass curve_class_from_json(int n, const Json& j);

} // namespace hilb
