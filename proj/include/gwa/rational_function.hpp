#pragma once

#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gwa/poly.hpp"

namespace gwa {

/// Element of Frac(D). The denominator is kept as a product of powers of monic factors;
/// sums use the lcm of the factor lists and factors dividing the numerator are cancelled.
/// Equality is decided by cross-multiplication so unreduced forms compare correctly.
class RationalFunction {
public:
  explicit RationalFunction(RingPtr ring);
  RationalFunction(Poly num);  // NOLINT(google-explicit-constructor): D embeds in Frac(D)
  RationalFunction(Poly num, Poly den);

  const RingPtr& ring() const { return num_.ring(); }
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  /// Monic denominator factors with multiplicities; their product is den().
  const std::vector<std::pair<Poly, int>>& den_factors() const { return factors_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_ == den_; }
  /// The polynomial (Laurent polynomial) this equals, if any.
  std::optional<Poly> as_poly() const;

  RationalFunction zero_like() const { return RationalFunction(ring()); }
  RationalFunction one_like() const { return RationalFunction(num_.one_like()); }

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);
  RationalFunction inverse() const;
  RationalFunction pow(int e) const;

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b);

  RationalFunction scaled(const Scalar& c) const;
  RationalFunction substitute(std::span<const Poly> images) const;
  RationalFunction permute_variables(std::span<const std::size_t> perm) const;

  /// `num` alone when the denominator is 1, else `(num)/(den)`.
  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const RationalFunction& x) { return os << x.str(); }

private:
  using Factors = std::vector<std::pair<Poly, int>>;

  void add_den_factor(const Poly& f, int e);
  void cancel();
  void rebuild_den();
  Poly cofactor(const Factors& lcm) const;

  Poly num_;
  Factors factors_;
  Poly den_;
};

enum class ArithOp { add, mul, div };

/// Exact field arithmetic on Frac(D); div by zero throws std::domain_error.
RationalFunction ratfun_arith(const RationalFunction& a, const RationalFunction& b, ArithOp op);

}  // namespace gwa
