#pragma once

#include <string>
#include <vector>

#include "gwa/cyclotomic.hpp"
#include "gwa/sparse_poly.hpp"

namespace gwa {

/// `h1^2*h2`; empty string for the unit monomial.
inline std::string format_monomial(const Exponents& e, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += names[i];
    if (e[i] != 1) out += "^" + std::to_string(e[i]);
  }
  return out;
}

/// Canonical text of a sparse polynomial, terms in descending grlex order. Rational
/// coefficients print inline with their sign; other coefficients are parenthesized unless
/// they are a single product such as `q^2` or `zeta`.
template <typename C>
std::string format_poly(const SparsePoly<C>& p, const std::vector<std::string>& names) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  const auto& terms = p.terms();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const auto& [e, c] = *it;
    const std::string mono = format_monomial(e, names);
    std::string piece;
    bool negative = false;
    if (c.is_rational()) {
      Rational r = c.rational_value();
      negative = r < 0;
      Rational mag = abs(r);
      if (mono.empty())
        piece = to_string(mag);
      else if (mag == 1)
        piece = mono;
      else
        piece = to_string(mag) + "*" + mono;
    } else {
      const std::string cs = c.str();
      const bool bare = cs.find_first_of(" -/()") == std::string::npos;
      piece = bare ? cs : "(" + cs + ")";
      if (!mono.empty()) piece += "*" + mono;
    }
    if (first)
      out += negative ? "-" + piece : piece;
    else
      out += (negative ? " - " : " + ") + piece;
    first = false;
  }
  return out;
}

}  // namespace gwa
