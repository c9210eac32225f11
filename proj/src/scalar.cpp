#include "gwa/scalar.hpp"

#include <algorithm>
#include <optional>
#include <regex>
#include <set>
#include <stdexcept>

#include "gwa/format.hpp"
#include "gwa/modular.hpp"
#include "gwa/univariate.hpp"

namespace gwa {

ScalarField::ScalarField(int cyclotomic_order, std::vector<std::string> parameters)
    : cyclo_(std::make_shared<const CyclotomicField>(cyclotomic_order)), params_(std::move(parameters)) {}

int ScalarField::parameter_index(const std::string& name) const {
  auto it = std::find(params_.begin(), params_.end(), name);
  return it == params_.end() ? -1 : static_cast<int>(it - params_.begin());
}

FieldPtr field_make(int cyclotomic_order, std::vector<std::string> parameters) {
  if (cyclotomic_order < 1) throw std::invalid_argument("cyclotomic_order must be >= 1");
  static const std::regex ident("[A-Za-z_][A-Za-z_0-9]*");
  static const std::regex variable("h[0-9]+");
  std::set<std::string> seen;
  for (const auto& p : parameters) {
    if (!std::regex_match(p, ident)) throw std::invalid_argument("invalid parameter name '" + p + "'");
    if (p == "zeta" || std::regex_match(p, variable))
      throw std::invalid_argument("parameter name '" + p + "' is reserved");
    if (!seen.insert(p).second) throw std::invalid_argument("duplicate parameter name '" + p + "'");
  }
  return std::make_shared<const ScalarField>(cyclotomic_order, std::move(parameters));
}

namespace {

Cyclotomic cyc(const FieldPtr& f, const Rational& r) {
  return Cyclotomic(f->cyclotomic(), r);
}

ParamPoly param_const(const FieldPtr& f, const Cyclotomic& c) {
  return ParamPoly::constant(f->nparams(), c);
}

}  // namespace

Scalar::Scalar(FieldPtr field, long value) : Scalar(field, Rational(value)) {}

Scalar::Scalar(FieldPtr field, const Rational& value) : Scalar(field, cyc(field, value)) {}

Scalar::Scalar(FieldPtr field, const Cyclotomic& value)
    : field_(std::move(field)),
      num_(param_const(field_, value)),
      den_(param_const(field_, value.one_like())) {}

Scalar::Scalar(FieldPtr field, ParamPoly num, ParamPoly den)
    : field_(std::move(field)), num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("scalar with zero denominator");
  if (num_.nvars() != field_->nparams() || den_.nvars() != field_->nparams())
    throw std::invalid_argument("scalar arity mismatch");
  normalize();
}

Scalar Scalar::zeta(const FieldPtr& field) {
  if (field->cyclotomic_order() == 1) return Scalar(field, 1L);
  return Scalar(field, Cyclotomic::zeta(field->cyclotomic()));
}

Scalar Scalar::parameter(const FieldPtr& field, const std::string& name) {
  const int idx = field->parameter_index(name);
  if (idx < 0) throw std::invalid_argument("unknown parameter '" + name + "'");
  Exponents e(field->nparams(), 0);
  e[idx] = 1;
  const Cyclotomic one = cyc(field, Rational(1));
  return Scalar(field, ParamPoly::monomial(field->nparams(), e, one), param_const(field, one));
}

bool Scalar::is_one() const {
  return num_ == den_;
}

bool Scalar::is_rational() const {
  if (!num_.is_constant() || !den_.is_constant()) return false;
  if (num_.is_zero()) return true;
  return num_.terms()[0].second.is_rational() && den_.terms()[0].second.is_rational();
}

Rational Scalar::rational_value() const {
  if (num_.is_zero()) return Rational(0);
  return num_.terms()[0].second.rational_part() / den_.terms()[0].second.rational_part();
}

namespace {

// True when the reductions at a degree-one prime have constant gcd and keep their
// degrees, which forces the gcd over Q(zeta) to be constant too.
bool coprime_mod_p(const ParamPoly& x, const ParamPoly& y) {
  const auto& sp = modular::split_prime(x.leading().second.field()->order());
  auto dense = [&](const ParamPoly& a) -> std::optional<std::vector<std::uint64_t>> {
    std::vector<std::uint64_t> out;
    for (const auto& [e, c] : a.terms()) {
      const auto v = modular::reduce(c, sp);
      if (!v) return std::nullopt;
      if (static_cast<int>(out.size()) <= e[0]) out.resize(e[0] + 1, 0);
      out[e[0]] = *v;
    }
    return out;
  };
  const auto a = dense(x), b = dense(y);
  if (!a || !b || a->back() == 0 || b->back() == 0) return false;
  return modular::gcd_degree(*a, *b, sp.p) == 0;
}

// Divides x and y by their gcd when one-parameter Euclid finds a nontrivial one.
// Common powers of the parameter are left to cancel_monomials().
void cancel_gcd(ParamPoly& x, ParamPoly& y) {
  if (x.size() <= 1 || y.size() <= 1) return;
  const Cyclotomic zero = x.leading().second.zero_like();
  if (coprime_mod_p(x, y)) return;
  const auto dx = univariate::to_dense(x, zero), dy = univariate::to_dense(y, zero);
  const auto g = univariate::gcd(dx, dy);
  if (g.size() <= 1) return;
  x = univariate::from_dense(univariate::divmod(dx, g).first);
  y = univariate::from_dense(univariate::divmod(dy, g).first);
}

void cancel_monomials(ParamPoly& num, ParamPoly& den) {
  const Exponents mn = num.min_exponents(), md = den.min_exponents();
  Exponents shift(mn.size());
  bool any = false;
  for (std::size_t i = 0; i < mn.size(); ++i) {
    shift[i] = -std::min(mn[i], md[i]);
    any = any || shift[i] != 0;
  }
  if (any) {
    num = num.shifted(shift);
    den = den.shifted(shift);
  }
}

}  // namespace

void Scalar::normalize() {
  normalize_with(true);
}

void Scalar::normalize_with(bool full_gcd) {
  const std::size_t np = field_->nparams();
  const Cyclotomic one = cyc(field_, Rational(1));
  if (num_.is_zero()) {
    den_ = param_const(field_, one);
    return;
  }
  if (np == 0) {
    const Cyclotomic d = den_.terms()[0].second;
    if (!d.is_one()) {
      num_ = num_.scaled(d.inverse());
      den_ = param_const(field_, one);
    }
    return;
  }
  cancel_monomials(num_, den_);
  if (!den_.is_constant()) {
    if (np == 1) {
      if (full_gcd) cancel_gcd(num_, den_);
    } else {
      ParamPoly q;
      auto inv = [](const Cyclotomic& c) { return c.inverse(); };
      if (num_.divide_exact(den_, q, inv)) {
        num_ = std::move(q);
        den_ = param_const(field_, one);
      }
    }
  }
  const Cyclotomic lead = den_.leading().second;
  if (!lead.is_one()) {
    const Cyclotomic inv = lead.inverse();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.num_ = -r.num_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (field_->nparams() == 0) {
    num_ += o.num_;
    return *this;
  }
  if (field_->nparams() > 1) {
    if (den_ == o.den_) {
      num_ += o.num_;
    } else {
      num_ = num_ * o.den_ + o.num_ * den_;
      den_ = den_ * o.den_;
    }
    normalize();
    return *this;
  }
  // One parameter: both operands are reduced, so only factors of gcd(b, d) can survive.
  if (den_ == o.den_) {
    num_ += o.num_;
    const bool reducible = den_.size() > 1;
    normalize_with(false);
    if (!num_.is_zero() && reducible) {
      cancel_gcd(num_, den_);
      normalize_with(false);
    }
    return *this;
  }
  ParamPoly b = den_, d = o.den_;
  const bool coprime = b.size() <= 1 || d.size() <= 1;
  ParamPoly bg = b, dg = d;
  if (!coprime) cancel_gcd(bg, dg);
  num_ = num_ * dg + o.num_ * bg;
  den_ = b * dg;
  normalize_with(false);
  if (!coprime && !num_.is_zero() && !(bg == b)) {
    cancel_gcd(num_, den_);
    normalize_with(false);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  return *this += -o;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (field_->nparams() == 0) {
    num_ *= o.num_;
    return *this;
  }
  if (field_->nparams() > 1) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
  }
  ParamPoly a = num_, c = o.num_, b = den_, d = o.den_;
  cancel_gcd(a, d);
  cancel_gcd(c, b);
  num_ = a * c;
  den_ = b * d;
  normalize_with(false);
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero scalar");
  return Scalar(field_, den_, num_);
}

Scalar& Scalar::operator/=(const Scalar& o) {
  return *this *= o.inverse();
}

Scalar Scalar::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar base = *this, out = one_like();
  while (e > 0) {
    if (e & 1) out *= base;
    base *= base;
    e >>= 1;
  }
  return out;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.canonical()) return a.num_ == b.num_ && a.den_ == b.den_;
  return a.num_ * b.den_ == b.num_ * a.den_;
}

namespace {

template <typename C>
bool poly_less(const SparsePoly<C>& a, const SparsePoly<C>& b) {
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  if (ta.size() != tb.size()) return ta.size() < tb.size();
  for (std::size_t i = 0; i < ta.size(); ++i) {
    if (ta[i].first != tb[i].first) return grlex_less(ta[i].first, tb[i].first);
    if (ta[i].second < tb[i].second) return true;
    if (tb[i].second < ta[i].second) return false;
  }
  return false;
}

}  // namespace

bool structural_less(const Scalar& a, const Scalar& b) {
  if (!(a.num_ == b.num_)) return poly_less(a.num_, b.num_);
  return poly_less(a.den_, b.den_);
}

std::string Scalar::str() const {
  const auto& names = field_->parameters();
  auto text = [&](const ParamPoly& p) {
    if (p.is_constant() && !p.is_zero()) return p.terms()[0].second.str();
    return format_poly(p, names);
  };
  const std::string n = text(num_);
  if (den_.is_constant() && den_.terms()[0].second.is_one()) return n;
  const std::string d = text(den_);
  const bool bare_den = den_.size() == 1 && d.find_first_of("*() ") == std::string::npos;
  return (n.find(' ') == std::string::npos ? n : "(" + n + ")") + "/" + (bare_den ? d : "(" + d + ")");
}

}  // namespace gwa
