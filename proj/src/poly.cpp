#include "gwa/poly.hpp"

#include <algorithm>
#include <stdexcept>

#include "gwa/format.hpp"

namespace gwa {

PolyRing::PolyRing(FieldPtr field, std::vector<std::string> vars, bool laurent)
    : field_(std::move(field)), vars_(std::move(vars)), laurent_(laurent) {}

int PolyRing::variable_index(const std::string& name) const {
  auto it = std::find(vars_.begin(), vars_.end(), name);
  return it == vars_.end() ? -1 : static_cast<int>(it - vars_.begin());
}

RingPtr make_ring(FieldPtr field, std::size_t n, bool laurent) {
  std::vector<std::string> vars;
  for (std::size_t i = 1; i <= n; ++i) vars.push_back("h" + std::to_string(i));
  return make_ring(std::move(field), std::move(vars), laurent);
}

RingPtr make_ring(FieldPtr field, std::vector<std::string> vars, bool laurent) {
  for (const auto& v : vars)
    if (field->parameter_index(v) >= 0) throw std::invalid_argument("variable '" + v + "' shadows a parameter");
  return std::make_shared<const PolyRing>(std::move(field), std::move(vars), laurent);
}

Poly::Poly(RingPtr ring) : ring_(std::move(ring)), p_(ring_->nvars()) {}

Poly::Poly(RingPtr ring, Terms terms) : ring_(std::move(ring)), p_(std::move(terms)) {
  if (p_.nvars() != ring_->nvars()) throw std::invalid_argument("polynomial arity mismatch");
  if (!ring_->laurent() && p_.has_negative_exponent())
    throw std::domain_error("negative exponent in a polynomial (non-Laurent) ring");
}

Poly::Poly(RingPtr ring, const Scalar& c) : ring_(std::move(ring)), p_(Terms::constant(ring_->nvars(), c)) {}

Poly::Poly(RingPtr ring, long c) : Poly(ring, Scalar(ring->field(), c)) {}

Poly Poly::variable(const RingPtr& ring, std::size_t index) {
  Exponents e(ring->nvars(), 0);
  e.at(index) = 1;
  return monomial(ring, std::move(e), Scalar(ring->field(), 1L));
}

Poly Poly::monomial(const RingPtr& ring, Exponents e, const Scalar& c) {
  return Poly(ring, Terms::monomial(ring->nvars(), std::move(e), c));
}

Scalar Poly::constant_value() const {
  if (!is_constant()) throw std::logic_error("polynomial is not constant");
  if (p_.is_zero()) return Scalar(field(), 0L);
  return p_.terms()[0].second;
}

bool Poly::is_unit() const {
  if (p_.is_zero()) return false;
  return ring_->laurent() ? p_.is_monomial() : p_.is_constant();
}

int Poly::total_degree() const {
  int d = 0;
  for (const auto& [e, c] : p_.terms()) {
    int s = 0;
    for (int x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

void Poly::check_ring(const Poly& o) const {
  if (ring_ != o.ring_ && !ring_->compatible(*o.ring_)) throw std::invalid_argument("polynomial ring mismatch");
}

Poly& Poly::operator+=(const Poly& o) {
  check_ring(o);
  p_ += o.p_;
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  check_ring(o);
  p_ -= o.p_;
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  check_ring(o);
  p_ = p_ * o.p_;
  return *this;
}

bool operator==(const Poly& a, const Poly& b) {
  a.check_ring(b);
  return a.p_ == b.p_;
}

Poly Poly::pow(int e) const {
  if (e < 0) return unit_inverse().pow(-e);
  Poly base = *this, out = one_like();
  while (e > 0) {
    if (e & 1) out *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return out;
}

Poly Poly::unit_inverse() const {
  if (!is_unit()) throw std::domain_error("polynomial is not a unit: " + str());
  const auto& [e, c] = p_.terms()[0];
  Exponents neg(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) neg[i] = -e[i];
  return monomial(ring_, std::move(neg), c.inverse());
}

Poly Poly::substitute(std::span<const Poly> images) const {
  const std::size_t n = ring_->nvars();
  if (images.size() != n) throw std::invalid_argument("substitution arity mismatch");
  if (p_.is_zero()) return images.empty() ? *this : images[0].zero_like();
  const RingPtr& target = images.empty() ? ring_ : images[0].ring();
  // Cache of powers per variable, keyed by exponent.
  std::vector<std::vector<std::pair<int, Poly>>> cache(n);
  auto power = [&](std::size_t j, int k) -> const Poly& {
    for (const auto& [kk, p] : cache[j])
      if (kk == k) return p;
    Poly base = images[j];
    if (k < 0) {
      if (!base.is_unit())
        throw std::domain_error("Laurent violation: " + ring_->variables()[j] + " maps to non-unit " + base.str());
      base = base.unit_inverse();
    }
    cache[j].emplace_back(k, base.pow(std::abs(k)));
    return cache[j].back().second;
  };
  Poly out(target);
  for (const auto& [e, c] : p_.terms()) {
    Poly term(target, c);
    for (std::size_t j = 0; j < n; ++j)
      if (e[j] != 0) term *= power(j, e[j]);
    out += term;
  }
  return out;
}

Poly Poly::permute_variables(std::span<const std::size_t> perm) const {
  const std::size_t n = ring_->nvars();
  if (perm.size() != n) throw std::invalid_argument("permutation arity mismatch");
  std::vector<Terms::Term> terms;
  terms.reserve(p_.size());
  for (const auto& [e, c] : p_.terms()) {
    Exponents f(n, 0);
    for (std::size_t i = 0; i < n; ++i) f[perm[i]] = e[i];
    terms.emplace_back(std::move(f), c);
  }
  return Poly(ring_, Terms(n, std::move(terms)));
}

std::string Poly::str() const {
  return format_poly(p_, ring_->variables());
}

Scalar poly_eval(const Poly& f, std::span<const Scalar> point) {
  const std::size_t n = f.ring()->nvars();
  if (point.size() != n) throw std::invalid_argument("evaluation point has wrong length");
  Scalar out(f.field(), 0L);
  std::vector<std::vector<std::pair<int, Scalar>>> cache(n);
  auto power = [&](std::size_t j, int k) -> const Scalar& {
    for (const auto& [kk, s] : cache[j])
      if (kk == k) return s;
    if (k < 0 && point[j].is_zero())
      throw std::domain_error("evaluation of a negative power at a zero coordinate");
    cache[j].emplace_back(k, point[j].pow(k));
    return cache[j].back().second;
  };
  for (const auto& [e, c] : f.terms().terms()) {
    Scalar term = c;
    for (std::size_t j = 0; j < n; ++j)
      if (e[j] != 0) term *= power(j, e[j]);
    out += term;
  }
  return out;
}

std::optional<Poly> poly_divides(const Poly& d, const Poly& f) {
  if (d.is_zero()) throw std::domain_error("poly_divides: zero divisor");
  if (f.ring() != d.ring() && !f.ring()->compatible(*d.ring()))
    throw std::invalid_argument("polynomial ring mismatch");
  const auto& ring = f.ring();
  auto inv = [](const Scalar& c) { return c.inverse(); };
  if (!ring->laurent()) {
    Poly::Terms q;
    if (!f.terms().divide_exact(d.terms(), q, inv)) return std::nullopt;
    return Poly(ring, std::move(q));
  }
  // In k[h^+-1] monomials are units: strip them, divide in k[h], restore.
  const Exponents md = d.terms().min_exponents();
  const Exponents mf = f.terms().min_exponents();
  Exponents sd(md.size()), sf(mf.size()), back(md.size());
  for (std::size_t i = 0; i < md.size(); ++i) {
    sd[i] = -md[i];
    sf[i] = -mf[i];
    back[i] = mf[i] - md[i];
  }
  Poly::Terms q;
  if (!f.terms().shifted(sf).divide_exact(d.terms().shifted(sd), q, inv)) return std::nullopt;
  return Poly(ring, q.shifted(back));
}

}  // namespace gwa
