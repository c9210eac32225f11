#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "gwa/rational_function.hpp"

namespace gwa {

class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t column)
      : std::runtime_error(what + " at column " + std::to_string(column + 1)), column_(column) {}
  std::size_t column() const { return column_; }

private:
  std::size_t column_;
};

// Grammar of the canonical text syntax:
//   expr  := term (('+' | '-') term)*
//   term  := unary (('*' | '/') unary)*
//   unary := '-' unary | power
//   power := atom ('^' '-'? integer)?
//   atom  := integer | identifier | '(' expr ')'
// Identifiers are ring variables (h1..hn), field parameters, or `zeta`.

RationalFunction parse_rational(std::string_view text, const RingPtr& ring);
/// Throws ParseError when the expression is not a (Laurent) polynomial.
Poly parse_poly(std::string_view text, const RingPtr& ring);
Scalar parse_scalar(std::string_view text, const FieldPtr& field);

}  // namespace gwa
