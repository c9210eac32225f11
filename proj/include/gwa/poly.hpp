#pragma once

#include <memory>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "gwa/scalar.hpp"
#include "gwa/sparse_poly.hpp"

namespace gwa {

/// Variables h1..hn (or custom names) over a scalar field; `laurent` allows negative
/// exponents, i.e. k[h1^+-1, ..., hn^+-1].
class PolyRing {
public:
  PolyRing(FieldPtr field, std::vector<std::string> vars, bool laurent);

  const FieldPtr& field() const { return field_; }
  const std::vector<std::string>& variables() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  bool laurent() const { return laurent_; }
  int variable_index(const std::string& name) const;

  bool compatible(const PolyRing& o) const {
    return field_->compatible(*o.field_) && vars_ == o.vars_ && laurent_ == o.laurent_;
  }

private:
  FieldPtr field_;
  std::vector<std::string> vars_;
  bool laurent_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

/// Ring with variables h1..hn.
RingPtr make_ring(FieldPtr field, std::size_t n, bool laurent = false);
RingPtr make_ring(FieldPtr field, std::vector<std::string> vars, bool laurent = false);

class Poly {
public:
  using Terms = SparsePoly<Scalar>;

  explicit Poly(RingPtr ring);
  Poly(RingPtr ring, Terms terms);
  Poly(RingPtr ring, const Scalar& c);
  Poly(RingPtr ring, long c);

  static Poly variable(const RingPtr& ring, std::size_t index);
  static Poly monomial(const RingPtr& ring, Exponents e, const Scalar& c);

  const RingPtr& ring() const { return ring_; }
  const Terms& terms() const { return p_; }
  const FieldPtr& field() const { return ring_->field(); }

  bool is_zero() const { return p_.is_zero(); }
  bool is_constant() const { return p_.is_constant(); }
  Scalar constant_value() const;
  /// Units of the ring: nonzero constants, or nonzero monomials in the Laurent case.
  bool is_unit() const;
  std::size_t size() const { return p_.size(); }
  int total_degree() const;

  Poly zero_like() const { return Poly(ring_); }
  Poly one_like() const { return Poly(ring_, 1L); }

  Poly operator-() const { return Poly(ring_, -p_); }
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend bool operator==(const Poly& a, const Poly& b);

  Poly scaled(const Scalar& c) const { return Poly(ring_, p_.scaled(c)); }
  Poly pow(int e) const;
  /// Inverse of a unit (see is_unit()).
  Poly unit_inverse() const;

  /// Ring homomorphism h_j -> images[j]. Negative exponents need unit images.
  Poly substitute(std::span<const Poly> images) const;
  /// h_i -> h_{perm[i]}.
  Poly permute_variables(std::span<const std::size_t> perm) const;

  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const Poly& x) { return os << x.str(); }

private:
  void check_ring(const Poly& o) const;

  RingPtr ring_;
  Terms p_;
};

/// f_m: evaluation at the point of the maximal ideal m.
/// Throws std::domain_error on a zero coordinate raised to a negative power.
Scalar poly_eval(const Poly& f, std::span<const Scalar> point);

/// q with f = d*q when d divides f in the ring (Laurent-aware); otherwise nullopt.
std::optional<Poly> poly_divides(const Poly& d, const Poly& f);

}  // namespace gwa
