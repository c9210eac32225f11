#include "gwa/cyclotomic.hpp"

#include <utility>

namespace gwa {

std::string to_string(const Rational& r) {
  return r.get_str();
}

namespace {

using Dense = std::vector<Rational>;

void trim(Dense& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Quotient and remainder of dense polynomials over Q; divisor must be nonzero.
std::pair<Dense, Dense> divmod(Dense num, const Dense& den) {
  trim(num);
  Dense quot;
  const int dd = static_cast<int>(den.size()) - 1;
  if (static_cast<int>(num.size()) - 1 >= dd) quot.assign(num.size() - dd, Rational(0));
  while (!num.empty() && static_cast<int>(num.size()) - 1 >= dd) {
    const int shift = static_cast<int>(num.size()) - 1 - dd;
    Rational factor = num.back() / den.back();
    quot[shift] = factor;
    for (int i = 0; i <= dd; ++i) num[shift + i] -= factor * den[i];
    trim(num);
  }
  trim(quot);
  return {std::move(quot), std::move(num)};
}

Dense mul(const Dense& a, const Dense& b) {
  if (a.empty() || b.empty()) return {};
  Dense out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

Dense sub(Dense a, const Dense& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

}  // namespace

std::vector<Rational> cyclotomic_polynomial(int order) {
  if (order < 1) throw std::invalid_argument("cyclotomic order must be >= 1");
  Dense p(order + 1, Rational(0));
  p[0] = -1;
  p[order] = 1;
  for (int d = 1; d < order; ++d) {
    if (order % d != 0) continue;
    auto [q, r] = divmod(p, cyclotomic_polynomial(d));
    p = std::move(q);
  }
  return p;
}

CyclotomicField::CyclotomicField(int order) : order_(order), modulus_(cyclotomic_polynomial(order)) {}

Cyclotomic::Cyclotomic(FieldPtr field, const Rational& value) : field_(std::move(field)) {
  if (!field_) throw std::invalid_argument("cyclotomic element needs a field");
  c_.assign(field_->degree(), Rational(0));
  c_[0] = value;
  c_[0].canonicalize();
}

Cyclotomic::Cyclotomic(FieldPtr field, std::vector<Rational> coeffs) : field_(std::move(field)) {
  if (!field_) throw std::invalid_argument("cyclotomic element needs a field");
  for (auto& c : coeffs) c.canonicalize();
  trim(coeffs);
  const auto& mod = field_->modulus();
  if (coeffs.size() >= mod.size()) coeffs = divmod(std::move(coeffs), mod).second;
  coeffs.resize(field_->degree(), Rational(0));
  c_ = std::move(coeffs);
}

Cyclotomic Cyclotomic::zeta(FieldPtr field) {
  std::vector<Rational> x{Rational(0), Rational(1)};
  return Cyclotomic(std::move(field), std::move(x));
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : c_)
    if (c != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

bool Cyclotomic::is_one() const {
  return is_rational() && c_[0] == 1;
}

void Cyclotomic::check_field(const Cyclotomic& o) const {
  if (field_ != o.field_ && field_->order() != o.field_->order())
    throw std::invalid_argument("cyclotomic field mismatch");
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  check_field(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
  check_field(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  check_field(o);
  if (c_.size() == 1) {
    c_[0] *= o.c_[0];
    return *this;
  }
  if (o.is_rational()) {
    for (auto& c : c_) c *= o.c_[0];
    return *this;
  }
  if (is_rational()) {
    const Rational r = c_[0];
    c_ = o.c_;
    for (auto& c : c_) c *= r;
    return *this;
  }
  *this = Cyclotomic(field_, mul(c_, o.c_));
  return *this;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero in cyclotomic field");
  if (c_.size() == 1) return Cyclotomic(field_, Rational(1) / c_[0]);
  // Extended Euclid: track s with s*a == r (mod Phi).
  Dense r0 = field_->modulus(), r1 = c_;
  trim(r1);
  Dense s0, s1{Rational(1)};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1);
    Dense s = sub(s0, mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  // r0 is a nonzero constant since Phi is irreducible.
  Rational inv = Rational(1) / r0[0];
  for (auto& c : s0) c *= inv;
  return Cyclotomic(field_, std::move(s0));
}

Cyclotomic Cyclotomic::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Cyclotomic base = *this, out = one_like();
  while (e > 0) {
    if (e & 1) out *= base;
    base *= base;
    e >>= 1;
  }
  return out;
}

std::string Cyclotomic::str() const {
  std::string out;
  bool first = true;
  for (int i = static_cast<int>(c_.size()) - 1; i >= 0; --i) {
    const Rational& c = c_[i];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (i == 0) {
      out += to_string(mag);
      continue;
    }
    if (mag != 1) out += to_string(mag) + "*";
    out += "zeta";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return first ? "0" : out;
}

}  // namespace gwa
