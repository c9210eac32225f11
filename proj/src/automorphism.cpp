#include "gwa/automorphism.hpp"

#include <stdexcept>

namespace gwa {

namespace {

std::vector<Poly> variables(const RingPtr& ring) {
  std::vector<Poly> v;
  for (std::size_t j = 0; j < ring->nvars(); ++j) v.push_back(Poly::variable(ring, j));
  return v;
}

void check_images(const RingPtr& ring, const std::vector<Poly>& images, const char* which) {
  if (images.size() != ring->nvars())
    throw std::invalid_argument(std::string(which) + " images: expected " + std::to_string(ring->nvars()) +
                                ", got " + std::to_string(images.size()));
  for (std::size_t j = 0; j < images.size(); ++j) {
    if (!images[j].ring()->compatible(*ring))
      throw std::invalid_argument(std::string(which) + " image of " + ring->variables()[j] + " lives in another ring");
    if (ring->laurent() && !images[j].is_unit())
      throw std::domain_error(std::string("laurent violation: ") + which + " image " + images[j].str() + " of " +
                              ring->variables()[j] + " is not a unit");
  }
}

}  // namespace

Automorphism::Automorphism(RingPtr ring, std::vector<Poly> forward, std::vector<Poly> inverse, std::string name)
    : ring_(std::move(ring)), fwd_(std::move(forward)), inv_(std::move(inverse)), name_(std::move(name)) {
  check_images(ring_, fwd_, "forward");
  check_images(ring_, inv_, "inverse");
  for (std::size_t j = 0; j < ring_->nvars(); ++j) {
    const Poly h = Poly::variable(ring_, j);
    if (!(inv_[j].substitute(fwd_) == h) || !(fwd_[j].substitute(inv_) == h))
      throw std::invalid_argument("inverse does not invert the forward map on " + ring_->variables()[j]);
  }
}

Automorphism Automorphism::identity(const RingPtr& ring) {
  auto v = variables(ring);
  return Automorphism(ring, v, v, "id");
}

Poly Automorphism::apply(const Poly& f) const {
  if (!f.ring()->compatible(*ring_)) throw std::invalid_argument("automorphism applied in the wrong ring");
  return f.substitute(fwd_);
}

RationalFunction Automorphism::apply(const RationalFunction& f) const {
  if (!f.ring()->compatible(*ring_)) throw std::invalid_argument("automorphism applied in the wrong ring");
  return f.substitute(fwd_);
}

Automorphism Automorphism::inverse() const {
  Automorphism r = *this;
  std::swap(r.fwd_, r.inv_);
  r.name_ = name_.empty() ? "" : name_ + "^-1";
  return r;
}

Automorphism Automorphism::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  Automorphism out = identity(ring_), base = *this;
  while (k > 0) {
    if (k & 1) out = out * base;
    base = base * base;
    k >>= 1;
  }
  return out;
}

bool Automorphism::is_identity() const {
  for (std::size_t j = 0; j < fwd_.size(); ++j)
    if (!(fwd_[j] == Poly::variable(ring_, j))) return false;
  return true;
}

Automorphism operator*(const Automorphism& phi, const Automorphism& psi) {
  if (!phi.ring_->compatible(*psi.ring_)) throw std::invalid_argument("composing automorphisms of different rings");
  const std::size_t n = phi.ring_->nvars();
  Automorphism r = phi;
  for (std::size_t j = 0; j < n; ++j) {
    r.fwd_[j] = psi.fwd_[j].substitute(phi.fwd_);
    r.inv_[j] = phi.inv_[j].substitute(psi.inv_);
  }
  r.name_.clear();
  return r;
}

bool operator==(const Automorphism& a, const Automorphism& b) {
  return a.ring_->compatible(*b.ring_) && a.fwd_ == b.fwd_;
}

std::string Automorphism::str() const {
  std::string s;
  for (std::size_t j = 0; j < fwd_.size(); ++j) {
    if (j) s += ", ";
    s += ring_->variables()[j] + " -> " + fwd_[j].str();
  }
  return s;
}

RationalFunction auto_apply(const Automorphism& phi, const RationalFunction& f) {
  return phi.apply(f);
}

bool commute(const Automorphism& a, const Automorphism& b) {
  return a * b == b * a;
}

Automorphism lattice_to_auto(const LatticeElement& alpha, std::span<const Automorphism> generators) {
  if (alpha.size() != generators.size())
    throw std::invalid_argument("lattice element length does not match the number of generators");
  if (generators.empty()) throw std::invalid_argument("lattice_to_auto needs at least one generator");
  for (std::size_t i = 0; i < generators.size(); ++i)
    for (std::size_t j = i + 1; j < generators.size(); ++j)
      if (!commute(generators[i], generators[j]))
        throw std::invalid_argument("generators " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                                    " do not commute");
  Automorphism out = Automorphism::identity(generators[0].ring());
  for (std::size_t i = 0; i < alpha.size(); ++i)
    if (alpha[i] != 0) out = out * generators[i].pow(alpha[i]);
  return out;
}

std::vector<Scalar> act_on_point(const Automorphism& phi, std::span<const Scalar> p) {
  if (p.size() != phi.ring()->nvars()) throw std::invalid_argument("point has wrong number of coordinates");
  std::vector<Scalar> out;
  out.reserve(p.size());
  for (const Poly& img : phi.backward()) out.push_back(poly_eval(img, p));
  return out;
}

namespace {

Automorphism single(const RingPtr& ring, std::size_t i, Poly fwd, Poly inv, std::string name) {
  if (i >= ring->nvars()) throw std::out_of_range("variable index out of range");
  auto f = variables(ring), b = variables(ring);
  f[i] = std::move(fwd);
  b[i] = std::move(inv);
  return Automorphism(ring, std::move(f), std::move(b), std::move(name));
}

}  // namespace

Automorphism shift_auto(const RingPtr& ring, std::size_t i, const Scalar& step) {
  const Poly h = Poly::variable(ring, i);
  return single(ring, i, h - Poly(ring, step), h + Poly(ring, step), "shift");
}

Automorphism shift_auto(const RingPtr& ring, std::size_t i) {
  return shift_auto(ring, i, Scalar(ring->field(), 1L));
}

Automorphism q_scale_auto(const RingPtr& ring, std::size_t i, const Scalar& q) {
  const Poly h = Poly::variable(ring, i);
  return single(ring, i, h.scaled(q), h.scaled(q.inverse()), "q_scale");
}

Automorphism q_weyl_auto(const RingPtr& ring, std::size_t i, const Scalar& q) {
  const Poly h = Poly::variable(ring, i);
  const Poly one(ring, 1L);
  return single(ring, i, (h - one).scaled(q.inverse()), h.scaled(q) + one, "q_weyl");
}

Automorphism nagata_auto(const RingPtr& ring, std::size_t first) {
  if (first + 3 > ring->nvars()) throw std::out_of_range("nagata automorphism needs three variables");
  const Poly x = Poly::variable(ring, first), y = Poly::variable(ring, first + 1), z = Poly::variable(ring, first + 2);
  const Poly d = x * z + y * y;
  const Poly two(ring, 2L);
  auto f = variables(ring), b = variables(ring);
  f[first] = x - two * y * d - z * d * d;
  f[first + 1] = y + z * d;
  b[first] = x + two * y * d - z * d * d;
  b[first + 1] = y - z * d;
  return Automorphism(ring, std::move(f), std::move(b), "nagata");
}

}  // namespace gwa
