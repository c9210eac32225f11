#pragma once

#include <gmpxx.h>

#include <memory>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace gwa {

using Rational = mpq_class;

std::string to_string(const Rational& r);

/// Q(zeta) for zeta a primitive m-th root of unity, presented as Q[x]/Phi_m(x).
class CyclotomicField {
public:
  explicit CyclotomicField(int order);

  int order() const { return order_; }
  int degree() const { return static_cast<int>(modulus_.size()) - 1; }
  /// Coefficients of Phi_m, lowest degree first; monic.
  const std::vector<Rational>& modulus() const { return modulus_; }

private:
  int order_;
  std::vector<Rational> modulus_;
};

/// Integer coefficients of the m-th cyclotomic polynomial, lowest degree first.
std::vector<Rational> cyclotomic_polynomial(int order);

/// Element of a cyclotomic field: residue of degree < phi(m), hence canonical.
class Cyclotomic {
public:
  using FieldPtr = std::shared_ptr<const CyclotomicField>;

  Cyclotomic(FieldPtr field, const Rational& value);
  Cyclotomic(FieldPtr field, std::vector<Rational> coeffs);

  static Cyclotomic zeta(FieldPtr field);

  const FieldPtr& field() const { return field_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  /// True when the element lies in Q.
  bool is_rational() const;
  const Rational& rational_part() const { return c_[0]; }
  const Rational& rational_value() const { return c_[0]; }

  Cyclotomic zero_like() const { return Cyclotomic(field_, Rational(0)); }
  Cyclotomic one_like() const { return Cyclotomic(field_, Rational(1)); }

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic inverse() const;
  Cyclotomic pow(long e) const;

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) {
    return a * b.inverse();
  }
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) { return a.c_ == b.c_; }

  /// Lexicographic order on the coefficient vector; only used for canonical sorting.
  friend bool operator<(const Cyclotomic& a, const Cyclotomic& b) { return a.c_ < b.c_; }

  /// Canonical text: `zeta^2 + 2*zeta - 1/3`; plain rationals print as `-1/3`.
  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const Cyclotomic& x) { return os << x.str(); }

private:
  void check_field(const Cyclotomic& o) const;

  FieldPtr field_;
  std::vector<Rational> c_;
};

}  // namespace gwa
