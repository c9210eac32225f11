#pragma once

#include <utility>
#include <vector>

#include "gwa/sparse_poly.hpp"

namespace gwa::univariate {

// Dense univariate helpers over a field, used for opportunistic gcd reduction.
// Index is degree; the zero polynomial is the empty vector.

template <typename C>
void trim(std::vector<C>& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

/// `p` must have exactly one variable and nonnegative exponents.
template <typename C>
std::vector<C> to_dense(const SparsePoly<C>& p, const C& zero) {
  std::vector<C> out;
  for (const auto& [e, c] : p.terms()) {
    if (static_cast<int>(out.size()) <= e[0]) out.resize(e[0] + 1, zero);
    out[e[0]] = c;
  }
  return out;
}

template <typename C>
SparsePoly<C> from_dense(const std::vector<C>& d) {
  std::vector<typename SparsePoly<C>::Term> terms;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (!d[i].is_zero()) terms.emplace_back(Exponents{static_cast<int>(i)}, d[i]);
  return SparsePoly<C>(1, std::move(terms));
}

template <typename C>
std::pair<std::vector<C>, std::vector<C>> divmod(std::vector<C> num, const std::vector<C>& den) {
  trim(num);
  std::vector<C> quot;
  const int dd = static_cast<int>(den.size()) - 1;
  if (static_cast<int>(num.size()) - 1 >= dd) quot.assign(num.size() - dd, den.back().zero_like());
  const C lead_inv = den.back().inverse();
  while (!num.empty() && static_cast<int>(num.size()) - 1 >= dd) {
    const int shift = static_cast<int>(num.size()) - 1 - dd;
    C factor = num.back() * lead_inv;
    for (int i = 0; i <= dd; ++i) num[shift + i] -= factor * den[i];
    quot[shift] = std::move(factor);
    // Leading coefficient cancels exactly; drop it even if the field is not canonical.
    num.pop_back();
    trim(num);
  }
  trim(quot);
  return {std::move(quot), std::move(num)};
}

/// Monic gcd; both inputs nonzero.
template <typename C>
std::vector<C> gcd(std::vector<C> a, std::vector<C> b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  const C inv = a.back().inverse();
  for (auto& c : a) c *= inv;
  return a;
}

}  // namespace gwa::univariate
