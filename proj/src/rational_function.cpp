#include "gwa/rational_function.hpp"

#include <algorithm>
#include <stdexcept>

#include "gwa/univariate.hpp"

namespace gwa {

RationalFunction::RationalFunction(RingPtr ring) : num_(ring), den_(ring, 1L) {}

RationalFunction::RationalFunction(Poly num) : num_(std::move(num)), den_(num_.one_like()) {}

RationalFunction::RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(num_.one_like()) {
  if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (num_.ring() != den.ring() && !num_.ring()->compatible(*den.ring()))
    throw std::invalid_argument("rational function ring mismatch");
  if (num_.is_zero()) return;
  add_den_factor(den, 1);
  cancel();
  rebuild_den();
}

namespace {

void insert_factor(std::vector<std::pair<Poly, int>>& fs, Poly g, int e) {
  for (auto& [h, k] : fs) {
    if (h == g) {
      k += e;
      return;
    }
  }
  fs.emplace_back(std::move(g), e);
}

}  // namespace

// Multiplies the denominator by f^e. Constants and (Laurent) monomials move into the
// numerator; in the polynomial case monomials split into single-variable factors.
void RationalFunction::add_den_factor(const Poly& f, int e) {
  if (f.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (e == 0) return;
  const RingPtr& ring = num_.ring();
  const std::size_t n = ring->nvars();
  Poly g = f;
  const Exponents m = g.terms().min_exponents();
  bool shifted = false;
  for (int x : m) shifted = shifted || x != 0;
  if (shifted) {
    Exponents back(n);
    for (std::size_t i = 0; i < n; ++i) back[i] = -m[i];
    g = Poly(ring, g.terms().shifted(back));
    if (ring->laurent()) {
      Exponents inv(n);
      for (std::size_t i = 0; i < n; ++i) inv[i] = -m[i] * e;
      num_ = Poly(ring, num_.terms().shifted(inv));
    } else {
      for (std::size_t i = 0; i < n; ++i)
        if (m[i] != 0) insert_factor(factors_, Poly::variable(ring, i), m[i] * e);
    }
  }
  const Scalar lead = g.terms().leading().second;
  if (!lead.is_one()) {
    num_ = num_.scaled(lead.pow(-e));
    g = g.scaled(lead.inverse());
  }
  if (!g.is_constant()) insert_factor(factors_, std::move(g), e);
}

void RationalFunction::cancel() {
  if (num_.is_zero()) {
    factors_.clear();
    return;
  }
  for (auto& [f, e] : factors_) {
    while (e > 0) {
      auto q = poly_divides(f, num_);
      if (!q) break;
      num_ = std::move(*q);
      --e;
    }
  }
  std::erase_if(factors_, [](const auto& fe) { return fe.second == 0; });
  const RingPtr& ring = num_.ring();
  if (ring->nvars() != 1 || ring->field()->nparams() != 0 || num_.is_constant()) return;
  // One variable over a number field: strip gcds that exact division missed.
  const Scalar zero(ring->field(), 0L);
  bool again = true;
  while (again && !num_.is_constant()) {
    again = false;
    const Exponents nshift{-num_.terms().min_exponents()[0]};
    const auto dn = univariate::to_dense(num_.terms().shifted(nshift), zero);
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      const auto df = univariate::to_dense(factors_[i].first.terms(), zero);
      const auto g = univariate::gcd(dn, df);
      if (g.size() <= 1) continue;
      num_ = Poly(ring, univariate::from_dense(univariate::divmod(dn, g).first).shifted(Exponents{-nshift[0]}));
      Poly rest(ring, univariate::from_dense(univariate::divmod(df, g).first));
      if (--factors_[i].second == 0) factors_.erase(factors_.begin() + static_cast<long>(i));
      add_den_factor(rest, 1);
      again = true;
      break;
    }
  }
}

void RationalFunction::rebuild_den() {
  den_ = num_.one_like();
  for (const auto& [f, e] : factors_) den_ *= f.pow(e);
}

// lcm / den, where lcm dominates every factor of this.
Poly RationalFunction::cofactor(const Factors& lcm) const {
  Poly c = num_.one_like();
  for (const auto& [f, e] : lcm) {
    int mine = 0;
    for (const auto& [g, k] : factors_)
      if (g == f) mine = k;
    if (e > mine) c *= f.pow(e - mine);
  }
  return c;
}

namespace {

template <typename F>
std::vector<std::pair<Poly, int>> merge_factors(std::vector<std::pair<Poly, int>> a,
                                                const std::vector<std::pair<Poly, int>>& b, F combine) {
  for (const auto& [g, k] : b) {
    bool found = false;
    for (auto& [f, e] : a) {
      if (f == g) {
        e = combine(e, k);
        found = true;
        break;
      }
    }
    if (!found) a.emplace_back(g, k);
  }
  return a;
}

std::vector<std::pair<Poly, int>> lcm_factors(const std::vector<std::pair<Poly, int>>& a,
                                              const std::vector<std::pair<Poly, int>>& b) {
  return merge_factors(a, b, [](int x, int y) { return std::max(x, y); });
}

}  // namespace

std::optional<Poly> RationalFunction::as_poly() const {
  if (factors_.empty()) return num_;
  return poly_divides(den_, num_);
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (factors_.empty() && o.factors_.empty()) {
    num_ += o.num_;
    return *this;
  }
  Factors l = lcm_factors(factors_, o.factors_);
  num_ = num_ * cofactor(l) + o.num_ * o.cofactor(l);
  factors_ = std::move(l);
  cancel();
  rebuild_den();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) {
  return *this += -o;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  num_ *= o.num_;
  if (factors_.empty() && o.factors_.empty()) return *this;
  factors_ = merge_factors(std::move(factors_), o.factors_, [](int x, int y) { return x + y; });
  cancel();
  rebuild_den();
  return *this;
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero rational function");
  RationalFunction r(num_.one_like());
  r.num_ = den_;
  r.add_den_factor(num_, 1);
  r.rebuild_den();
  return r;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
  return *this *= o.inverse();
}

RationalFunction RationalFunction::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  RationalFunction r = *this;
  r.num_ = num_.pow(e);
  for (auto& fe : r.factors_) fe.second *= e;
  std::erase_if(r.factors_, [](const auto& fe) { return fe.second == 0; });
  r.rebuild_den();
  return r;
}

bool operator==(const RationalFunction& a, const RationalFunction& b) {
  if (a.factors_.empty() && b.factors_.empty()) return a.num_ == b.num_;
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  const auto l = lcm_factors(a.factors_, b.factors_);
  return a.num_ * a.cofactor(l) == b.num_ * b.cofactor(l);
}

RationalFunction RationalFunction::scaled(const Scalar& c) const {
  RationalFunction r = *this;
  r.num_ = r.num_.scaled(c);
  if (r.num_.is_zero()) {
    r.factors_.clear();
    r.den_ = r.num_.one_like();
  }
  return r;
}

RationalFunction RationalFunction::substitute(std::span<const Poly> images) const {
  RationalFunction r(num_.substitute(images));
  if (factors_.empty() || r.num_.is_zero()) return r;
  for (const auto& [f, e] : factors_) r.add_den_factor(f.substitute(images), e);
  r.cancel();
  r.rebuild_den();
  return r;
}

RationalFunction RationalFunction::permute_variables(std::span<const std::size_t> perm) const {
  RationalFunction r(num_.permute_variables(perm));
  if (factors_.empty() || r.num_.is_zero()) return r;
  for (const auto& [f, e] : factors_) r.add_den_factor(f.permute_variables(perm), e);
  r.rebuild_den();
  return r;
}

std::string RationalFunction::str() const {
  if (den_.is_constant()) return num_.str();
  const std::string n = num_.size() > 1 ? "(" + num_.str() + ")" : num_.str();
  const std::string d = den_.str();
  const bool bare = den_.size() == 1 && d.find_first_of("*() ") == std::string::npos;
  return n + "/" + (bare ? d : "(" + d + ")");
}

RationalFunction ratfun_arith(const RationalFunction& a, const RationalFunction& b, ArithOp op) {
  switch (op) {
    case ArithOp::add:
      return a + b;
    case ArithOp::mul:
      return a * b;
    case ArithOp::div:
      if (b.is_zero()) throw std::domain_error("division by zero rational function");
      return a / b;
  }
  throw std::invalid_argument("unknown arithmetic op");
}

}  // namespace gwa
