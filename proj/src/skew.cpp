#include "gwa/skew.hpp"

#include <algorithm>
#include <stdexcept>

namespace gwa {

SkewContext::SkewContext(RingPtr ring, std::vector<Automorphism> sigma) : ring_(std::move(ring)), sigma_(std::move(sigma)) {
  for (const auto& s : sigma_)
    if (!s.ring()->compatible(*ring_)) throw std::invalid_argument("skew generator acts on a different ring");
  for (std::size_t i = 0; i < sigma_.size(); ++i)
    for (std::size_t j = i + 1; j < sigma_.size(); ++j)
      if (!commute(sigma_[i], sigma_[j]))
        throw std::invalid_argument("sigma_" + std::to_string(i + 1) + " and sigma_" + std::to_string(j + 1) +
                                    " do not commute");
}

const Automorphism& SkewContext::automorphism(const LatticeElement& alpha) const {
  if (alpha.size() != rank()) throw std::invalid_argument("lattice element has wrong rank");
  std::lock_guard<std::mutex> lock(mu_);
  auto it = cache_.find(alpha);
  if (it != cache_.end()) return *it->second;
  Automorphism a = Automorphism::identity(ring_);
  for (std::size_t i = 0; i < alpha.size(); ++i)
    if (alpha[i] != 0) a = a * sigma_[i].pow(alpha[i]);
  return *cache_.emplace(alpha, std::make_unique<Automorphism>(std::move(a))).first->second;
}

SkewContextPtr make_skew_context(RingPtr ring, std::vector<Automorphism> sigma) {
  return std::make_shared<const SkewContext>(std::move(ring), std::move(sigma));
}

SkewElement::SkewElement(SkewContextPtr ctx) : ctx_(std::move(ctx)) {}

SkewElement::SkewElement(SkewContextPtr ctx, const RationalFunction& coeff, const LatticeElement& m)
    : ctx_(std::move(ctx)) {
  if (m.size() != ctx_->rank()) throw std::invalid_argument("lattice element has wrong rank");
  add_term(m, coeff);
}

SkewElement SkewElement::one(const SkewContextPtr& ctx) {
  return unit(ctx, lattice_zero(ctx->rank()));
}

SkewElement SkewElement::unit(const SkewContextPtr& ctx, const LatticeElement& m) {
  return SkewElement(ctx, RationalFunction(Poly(ctx->ring(), 1L)), m);
}

RationalFunction SkewElement::coefficient(const LatticeElement& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? RationalFunction(ctx_->ring()) : it->second;
}

void SkewElement::add_term(const LatticeElement& m, const RationalFunction& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void SkewElement::check_context(const SkewElement& o) const {
  if (ctx_ != o.ctx_ && !(ctx_->ring()->compatible(*o.ctx_->ring()) && ctx_->sigma() == o.ctx_->sigma()))
    throw std::invalid_argument("skew elements from different contexts");
}

SkewElement SkewElement::operator-() const {
  SkewElement r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

SkewElement& SkewElement::operator+=(const SkewElement& o) {
  check_context(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

SkewElement& SkewElement::operator-=(const SkewElement& o) {
  check_context(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

SkewElement operator*(const SkewElement& a, const SkewElement& b) {
  a.check_context(b);
  SkewElement r(a.ctx_);
  for (const auto& [m, c] : a.terms_) {
    const Automorphism& s = a.ctx_->automorphism(m);
    for (const auto& [n, d] : b.terms_) r.add_term(lattice_add(m, n), c * s.apply(d));
  }
  return r;
}

bool operator==(const SkewElement& a, const SkewElement& b) {
  a.check_context(b);
  if (a.terms_.size() != b.terms_.size()) return false;
  auto i = a.terms_.begin();
  for (auto j = b.terms_.begin(); j != b.terms_.end(); ++i, ++j)
    if (i->first != j->first || !(i->second == j->second)) return false;
  return true;
}

SkewElement SkewElement::scaled(const RationalFunction& c) const {
  SkewElement r(ctx_);
  for (const auto& [m, d] : terms_) r.add_term(m, c * d);
  return r;
}

std::string SkewElement::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!s.empty()) s += " + ";
    const std::string c = it->second.str();
    s += (c.find(' ') == std::string::npos ? c : "(" + c + ")") + " * " + lattice_str(it->first);
  }
  return s;
}

SkewElement skew_mul(const SkewElement& u, const SkewElement& v) {
  return u * v;
}

std::vector<LatticeElement> support(const SkewElement& u) {
  std::vector<LatticeElement> s;
  for (const auto& [m, c] : u.terms()) s.push_back(m);
  return s;
}

RationalFunction evaluate(const SkewElement& u, const RationalFunction& f) {
  RationalFunction r(u.context()->ring());
  for (const auto& [m, c] : u.terms()) r += c * u.context()->automorphism(m).apply(f);
  return r;
}

SkewElement group_act(const ReflectionGroupElement& g, const SkewElement& u) {
  const auto& ctx = u.context();
  if (g.n() != ctx->rank()) throw std::invalid_argument("group rank does not match the lattice rank");
  const auto perm = g.variable_permutation(ctx->ring()->nvars());
  SkewElement r(ctx);
  for (const auto& [m, c] : u.terms()) r += SkewElement(ctx, c.permute_variables(perm), g.act_on_lattice(m));
  return r;
}

SkewElement reynolds(const std::vector<ReflectionGroupElement>& group, const SkewElement& u) {
  if (group.empty()) throw std::invalid_argument("reynolds over an empty group");
  SkewElement sum(u.context());
  for (const auto& g : group) sum += group_act(g, u);
  const FieldPtr& f = u.context()->ring()->field();
  return sum.scaled(RationalFunction(Poly(u.context()->ring(), Scalar(f, Rational(1, static_cast<long>(group.size()))))));
}

bool is_invariant(const std::vector<ReflectionGroupElement>& gens, const SkewElement& u) {
  for (const auto& g : gens)
    if (!(group_act(g, u) == u)) return false;
  return true;
}

GenerationResult generates(const std::vector<SkewElement>& elements, const LatticeSubmonoidSpec& spec) {
  std::vector<LatticeElement> supp;
  for (const auto& e : elements)
    for (const auto& m : support(e))
      if (std::find(supp.begin(), supp.end(), m) == supp.end()) supp.push_back(m);
  LatticeSubmonoidSpec mine = spec;
  mine.generators = supp;
  GenerationResult out;
  auto check = [&](const LatticeSubmonoidSpec& s, const LatticeElement& v, const char* what) {
    const auto r = membership(s, v);
    if (r.status == Membership::yes) return true;
    if (out.status == Membership::yes || r.status == Membership::no) {
      out.status = r.status;
      out.witness = lattice_str(v) + (r.status == Membership::no ? " not in " : " undecided in ") + what;
    }
    return r.status != Membership::no;
  };
  for (const auto& g : spec.generators)
    if (!check(mine, g, "the span of the supports")) return out;
  for (const auto& m : supp)
    if (!check(spec, m, "the target lattice object")) return out;
  return out;
}

}  // namespace gwa
