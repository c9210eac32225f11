#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace gwa {

using Exponents = std::vector<int>;

/// Graded lexicographic order: total degree first, then lex with the first variable most
/// significant.
inline bool grlex_less(const Exponents& a, const Exponents& b) {
  const long da = std::accumulate(a.begin(), a.end(), 0L);
  const long db = std::accumulate(b.begin(), b.end(), 0L);
  if (da != db) return da < db;
  return a < b;
}

template <typename C>
concept Coefficient = requires(C a, const C& b) {
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.zero_like() } -> std::convertible_to<C>;
  { a += b };
  { a -= b };
  { a * b } -> std::convertible_to<C>;
  { -a } -> std::convertible_to<C>;
  { a == b } -> std::convertible_to<bool>;
};

/// Sparse multivariate (Laurent) polynomial with terms kept sorted by ascending grlex and no
/// zero coefficients. Carries no ring context; wrappers attach names and scalar fields.
template <Coefficient C>
class SparsePoly {
public:
  using Term = std::pair<Exponents, C>;

  SparsePoly() = default;
  explicit SparsePoly(std::size_t nvars) : nvars_(nvars) {}
  SparsePoly(std::size_t nvars, std::vector<Term> terms) : nvars_(nvars), terms_(std::move(terms)) {
    normalize();
  }

  static SparsePoly constant(std::size_t nvars, const C& c) {
    SparsePoly p(nvars);
    if (!c.is_zero()) p.terms_.emplace_back(Exponents(nvars, 0), c);
    return p;
  }
  static SparsePoly monomial(std::size_t nvars, Exponents e, const C& c) {
    SparsePoly p(nvars);
    if (e.size() != nvars) throw std::invalid_argument("monomial arity mismatch");
    if (!c.is_zero()) p.terms_.emplace_back(std::move(e), c);
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  bool is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() != 1) return false;
    for (int e : terms_[0].first)
      if (e != 0) return false;
    return true;
  }
  /// Single term c * h^e (a unit in the Laurent ring when c != 0).
  bool is_monomial() const { return terms_.size() == 1; }

  /// Leading (grlex-largest) term; polynomial must be nonzero.
  const Term& leading() const {
    if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
    return terms_.back();
  }

  /// Coefficient of the exponent tuple, or nullptr when absent.
  const C* find(const Exponents& e) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const Term& t, const Exponents& k) { return grlex_less(t.first, k); });
    if (it != terms_.end() && it->first == e) return &it->second;
    return nullptr;
  }

  /// Componentwise minimum exponent over all terms (zeros for the zero polynomial).
  Exponents min_exponents() const {
    Exponents m(nvars_, 0);
    if (terms_.empty()) return m;
    m = terms_[0].first;
    for (const auto& [e, c] : terms_)
      for (std::size_t i = 0; i < nvars_; ++i) m[i] = std::min(m[i], e[i]);
    return m;
  }
  Exponents max_exponents() const {
    Exponents m(nvars_, 0);
    if (terms_.empty()) return m;
    m = terms_[0].first;
    for (const auto& [e, c] : terms_)
      for (std::size_t i = 0; i < nvars_; ++i) m[i] = std::max(m[i], e[i]);
    return m;
  }
  bool has_negative_exponent() const {
    for (const auto& [e, c] : terms_)
      for (int x : e)
        if (x < 0) return true;
    return false;
  }

  SparsePoly operator-() const {
    SparsePoly r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
  }

  SparsePoly& operator+=(const SparsePoly& o) { return *this = merge(*this, o, false); }
  SparsePoly& operator-=(const SparsePoly& o) { return *this = merge(*this, o, true); }
  friend SparsePoly operator+(const SparsePoly& a, const SparsePoly& b) { return merge(a, b, false); }
  friend SparsePoly operator-(const SparsePoly& a, const SparsePoly& b) { return merge(a, b, true); }

  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    check_arity(a, b);
    if (a.is_zero() || b.is_zero()) return SparsePoly(a.nvars_);
    std::vector<Term> out;
    out.reserve(a.size() * b.size());
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e(a.nvars_);
        for (std::size_t i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
        out.emplace_back(std::move(e), ca * cb);
      }
    }
    return SparsePoly(a.nvars_, std::move(out));
  }
  SparsePoly& operator*=(const SparsePoly& o) { return *this = *this * o; }

  SparsePoly scaled(const C& c) const {
    if (c.is_zero()) return SparsePoly(nvars_);
    SparsePoly r(nvars_);
    r.terms_.reserve(terms_.size());
    for (const auto& [e, x] : terms_) {
      C y = x * c;
      if (!y.is_zero()) r.terms_.emplace_back(e, std::move(y));
    }
    return r;
  }

  /// Multiply by h^shift (shift may be negative).
  SparsePoly shifted(const Exponents& shift) const {
    SparsePoly r = *this;
    for (auto& [e, c] : r.terms_)
      for (std::size_t i = 0; i < nvars_; ++i) e[i] += shift[i];
    // A uniform shift changes total degree uniformly, so the order is preserved.
    return r;
  }

  friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
    if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
      if (a.terms_[i].first != b.terms_[i].first) return false;
      if (!(a.terms_[i].second == b.terms_[i].second)) return false;
    }
    return true;
  }

  /// Exact division in the polynomial ring over a field: returns the quotient when `d`
  /// divides `*this`, otherwise false. Both must have nonnegative exponents.
  /// `inv` computes coefficient inverses.
  template <typename Inv>
  bool divide_exact(const SparsePoly& d, SparsePoly& quotient, Inv&& inv) const {
    check_arity(*this, d);
    if (d.is_zero()) throw std::domain_error("division by zero polynomial");
    quotient = SparsePoly(nvars_);
    if (is_zero()) return true;
    // Per-variable degree window of any quotient.
    const Exponents fmax = max_exponents(), fmin = min_exponents();
    const Exponents dmax = d.max_exponents(), dmin = d.min_exponents();
    Exponents qmax(nvars_), qmin(nvars_);
    for (std::size_t i = 0; i < nvars_; ++i) {
      qmax[i] = fmax[i] - dmax[i];
      qmin[i] = fmin[i] - dmin[i];
      if (qmax[i] < qmin[i]) return false;
    }
    const auto& [lead_e, lead_c] = d.leading();
    const C lead_inv = inv(lead_c);
    SparsePoly rem = *this;
    std::vector<Term> q;
    while (!rem.is_zero()) {
      const auto& [re, rc] = rem.leading();
      Exponents shift(nvars_);
      for (std::size_t i = 0; i < nvars_; ++i) {
        shift[i] = re[i] - lead_e[i];
        if (shift[i] < 0 || shift[i] > qmax[i] || shift[i] < qmin[i]) return false;
      }
      C factor = rc * lead_inv;
      SparsePoly step = d.shifted(shift).scaled(factor);
      q.emplace_back(std::move(shift), std::move(factor));
      rem -= step;
    }
    quotient = SparsePoly(nvars_, std::move(q));
    return true;
  }

private:
  static void check_arity(const SparsePoly& a, const SparsePoly& b) {
    if (a.nvars_ != b.nvars_) throw std::invalid_argument("polynomial arity mismatch");
  }

  static SparsePoly merge(const SparsePoly& a, const SparsePoly& b, bool subtract) {
    check_arity(a, b);
    SparsePoly r(a.nvars_);
    r.terms_.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      if (j == b.terms_.size() || (i < a.terms_.size() && grlex_less(a.terms_[i].first, b.terms_[j].first))) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (i == a.terms_.size() || grlex_less(b.terms_[j].first, a.terms_[i].first)) {
        r.terms_.emplace_back(b.terms_[j].first, subtract ? -b.terms_[j].second : b.terms_[j].second);
        ++j;
      } else {
        C c = a.terms_[i].second;
        if (subtract)
          c -= b.terms_[j].second;
        else
          c += b.terms_[j].second;
        if (!c.is_zero()) r.terms_.emplace_back(a.terms_[i].first, std::move(c));
        ++i;
        ++j;
      }
    }
    return r;
  }

  void normalize() {
    for (const auto& t : terms_)
      if (t.first.size() != nvars_) throw std::invalid_argument("term arity mismatch");
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& x, const Term& y) { return grlex_less(x.first, y.first); });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().first == t.first)
        out.back().second += t.second;
      else
        out.push_back(std::move(t));
    }
    std::erase_if(out, [](const Term& t) { return t.second.is_zero(); });
    terms_ = std::move(out);
  }

  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
};

}  // namespace gwa
