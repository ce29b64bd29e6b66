#pragma once

#include <map>
#include <string>
#include <vector>

#include "rat.hpp"

namespace hilb {

/// Exponent vector (one entry per variable) -> coefficient, duplicates merged
/// and zero coefficients dropped.
using SparsePoly = std::map<std::vector<int>, Rational>;

/// Parses a polynomial over the given variable names.
///
/// Grammar: terms separated by '+'/'-'; a term is a '*'-separated product of
/// factors; a factor is a rational literal ("3", "-3/2") or a variable with
/// an optional '^' power. Whitespace is insignificant. Longest-match variable
/// names, so multi-character names like "x0" work.
SparsePoly parse_polynomial(const std::string& text,
                            const std::vector<std::string>& variables);

/// Canonical rendering: "c*v0^a*v1^b" terms joined by " + " / " - ",
/// coefficient omitted when 1, bare "0" for the zero polynomial. Terms are
/// emitted in the order produced by `order` over exponent vectors.
std::string format_terms(
    const std::vector<std::pair<std::vector<int>, Rational>>& ordered_terms,
    const std::vector<std::string>& variables);

} // namespace hilb
