#pragma once

#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include "gwa/cyclotomic.hpp"
#include "gwa/sparse_poly.hpp"

namespace gwa {

/// Q(zeta_m) extended by transcendental parameters (q, z1, ...).
class ScalarField {
public:
  ScalarField(int cyclotomic_order, std::vector<std::string> parameters);

  int cyclotomic_order() const { return cyclo_->order(); }
  const std::shared_ptr<const CyclotomicField>& cyclotomic() const { return cyclo_; }
  const std::vector<std::string>& parameters() const { return params_; }
  std::size_t nparams() const { return params_.size(); }
  /// Index of a parameter name, or -1.
  int parameter_index(const std::string& name) const;

  bool compatible(const ScalarField& o) const {
    return cyclotomic_order() == o.cyclotomic_order() && params_ == o.params_;
  }

private:
  std::shared_ptr<const CyclotomicField> cyclo_;
  std::vector<std::string> params_;
};

using FieldPtr = std::shared_ptr<const ScalarField>;

/// Builds a field descriptor. Throws std::invalid_argument on duplicate or reserved names.
FieldPtr field_make(int cyclotomic_order, std::vector<std::string> parameters = {});

using ParamPoly = SparsePoly<Cyclotomic>;

/// Element of the scalar field: a fraction of polynomials in the parameters with
/// cyclotomic coefficients. With at most one parameter the fraction is kept gcd-reduced
/// with monic denominator, so the representation is canonical.
class Scalar {
public:
  Scalar(FieldPtr field, long value);
  Scalar(FieldPtr field, const Rational& value);
  Scalar(FieldPtr field, const Cyclotomic& value);
  Scalar(FieldPtr field, ParamPoly num, ParamPoly den);

  static Scalar zeta(const FieldPtr& field);
  static Scalar parameter(const FieldPtr& field, const std::string& name);

  const FieldPtr& field() const { return field_; }
  const ParamPoly& num() const { return num_; }
  const ParamPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  bool is_rational() const;
  Rational rational_value() const;
  bool canonical() const { return field_->nparams() <= 1; }

  Scalar zero_like() const { return Scalar(field_, 0L); }
  Scalar one_like() const { return Scalar(field_, 1L); }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar inverse() const;
  Scalar pow(long e) const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Deterministic structural order (meaningful as a total order only when canonical()).
  friend bool structural_less(const Scalar& a, const Scalar& b);

  /// Canonical text, e.g. `(q^2 + 1)/(q - 1)` or `zeta - 1/2`.
  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const Scalar& x) { return os << x.str(); }

private:
  void normalize();
  void normalize_with(bool full_gcd);

  FieldPtr field_;
  ParamPoly num_;
  ParamPoly den_;
};

}  // namespace gwa
