#pragma once

#include <stdexcept>
#include <string>

namespace hilb {

/// Violation of an operation's contract: mismatched truncation contexts,
/// degenerate inputs, or values outside the supported range.
class DomainError : public std::runtime_error {
public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed textual or JSON input.
class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace hilb
