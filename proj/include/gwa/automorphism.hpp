#pragma once

#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "gwa/lattice.hpp"
#include "gwa/rational_function.hpp"

namespace gwa {

/// Ring automorphism of D given by the images of the variables together with the
/// images under the inverse. Both compositions are checked to be the identity on
/// the variables at construction.
class Automorphism {
public:
  Automorphism(RingPtr ring, std::vector<Poly> forward, std::vector<Poly> inverse, std::string name = "");

  static Automorphism identity(const RingPtr& ring);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Poly>& forward() const { return fwd_; }
  const std::vector<Poly>& backward() const { return inv_; }
  const std::string& name() const { return name_; }

  Poly apply(const Poly& f) const;
  RationalFunction apply(const RationalFunction& f) const;
  Automorphism inverse() const;
  Automorphism pow(long k) const;
  bool is_identity() const;

  /// (phi * psi)(f) = phi(psi(f)).
  friend Automorphism operator*(const Automorphism& phi, const Automorphism& psi);
  friend bool operator==(const Automorphism& a, const Automorphism& b);

  /// `h1 -> h1 - 1, h2 -> h2`.
  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const Automorphism& x) { return os << x.str(); }

private:
  RingPtr ring_;
  std::vector<Poly> fwd_;
  std::vector<Poly> inv_;
  std::string name_;
};

RationalFunction auto_apply(const Automorphism& phi, const RationalFunction& f);

bool commute(const Automorphism& a, const Automorphism& b);

/// prod_i sigma_i^{alpha_i}; throws when two generators do not commute.
Automorphism lattice_to_auto(const LatticeElement& alpha, std::span<const Automorphism> generators);

/// Point of phi(n) given the point p of n: coordinate j is phi^{-1}(h_j) evaluated at p.
std::vector<Scalar> act_on_point(const Automorphism& phi, std::span<const Scalar> p);

/// h_i -> h_i - step.
Automorphism shift_auto(const RingPtr& ring, std::size_t i, const Scalar& step);
Automorphism shift_auto(const RingPtr& ring, std::size_t i);
/// h_i -> q h_i.
Automorphism q_scale_auto(const RingPtr& ring, std::size_t i, const Scalar& q);
/// h_i -> q^{-1}(h_i - 1), inverse h_i -> q h_i + 1.
Automorphism q_weyl_auto(const RingPtr& ring, std::size_t i, const Scalar& q);
/// Nagata automorphism on (x, y, z) = (h_{first}, h_{first+1}, h_{first+2}):
/// x -> x - 2y D - z D^2, y -> y + z D, z -> z with D = xz + y^2.
Automorphism nagata_auto(const RingPtr& ring, std::size_t first);

}  // namespace gwa
