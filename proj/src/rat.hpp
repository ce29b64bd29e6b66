#pragma once

#include <gmpxx.h>

#include <string>

namespace hilb {

/// Arbitrary-precision exact rational scalar. All arithmetic in the library
/// is exact; nothing is ever rounded.
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" with integer p, q and q > 0 after
/// canonicalization. Throws ParseError on anything else.
Rational rational_from_string(const std::string& text);

/// Canonical form: "p" when the denominator is 1, otherwise "p/q".
std::string rational_to_string(const Rational& value);

/// Canonicalized rational from machine integers. den must be nonzero.
Rational make_rational(long num, long den = 1);

} // namespace hilb
