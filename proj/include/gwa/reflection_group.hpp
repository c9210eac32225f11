#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "gwa/lattice.hpp"
#include "gwa/scalar.hpp"

namespace gwa {

/// Element (c, pi) of the wreath product C_m wr S_n acting on C^n by
/// g e_i = xi^{c_{pi(i)}} e_{pi(i)} with xi a primitive m-th root of unity.
class ReflectionGroupElement {
public:
  ReflectionGroupElement(int m, std::vector<int> diag, std::vector<std::size_t> perm);

  static ReflectionGroupElement identity(int m, std::size_t n);
  static ReflectionGroupElement transposition(int m, std::size_t n, std::size_t i, std::size_t j);
  static ReflectionGroupElement diagonal(int m, std::vector<int> diag);

  int m() const { return m_; }
  std::size_t n() const { return perm_.size(); }
  /// Exponents c_i, reduced into [0, m).
  const std::vector<int>& diag() const { return diag_; }
  const std::vector<std::size_t>& perm() const { return perm_; }

  bool is_identity() const;
  bool is_permutation() const;
  int diag_sum() const;
  /// Sign of the permutation part.
  int sign() const;

  ReflectionGroupElement inverse() const;
  /// (g*h) acts as g after h.
  friend ReflectionGroupElement operator*(const ReflectionGroupElement& g, const ReflectionGroupElement& h);
  friend bool operator==(const ReflectionGroupElement& a, const ReflectionGroupElement& b) = default;
  friend bool operator<(const ReflectionGroupElement& a, const ReflectionGroupElement& b);

  /// Lattice coordinates permuted: (g.v)_{pi(i)} = v_i. Diagonal part acts trivially.
  LatticeElement act_on_lattice(const LatticeElement& v) const;
  /// h_{b*i + j} -> h_{b*pi(i) + j} for blocks of size nvars / n.
  std::vector<std::size_t> variable_permutation(std::size_t nvars) const;

  /// `diag(0,1) perm(2,1)`.
  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const ReflectionGroupElement& x) { return os << x.str(); }

private:
  int m_;
  std::vector<int> diag_;
  std::vector<std::size_t> perm_;
};

/// True when (c, pi) lies in G(m,p,n), i.e. sum c_i = 0 mod p.
bool in_gmpn(const ReflectionGroupElement& g, int p);

/// All elements of G(m,p,n) in a fixed order; throws when p does not divide m or the
/// group has more than `max_size` elements.
std::vector<ReflectionGroupElement> group_elements(int m, int p, std::size_t n, std::size_t max_size = 200000);

/// Generators of G(m,p,n): adjacent transpositions, diag(1,-1,0,...) when n >= 2, and
/// diag(p,0,...,0).
std::vector<ReflectionGroupElement> group_generators(int m, int p, std::size_t n);

/// xi = zeta^{m0/m} in a field with cyclotomic order m0; requires m | m0 unless m <= 2.
Scalar root_of_unity(const FieldPtr& field, int m);

}  // namespace gwa
