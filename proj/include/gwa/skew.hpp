#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <string>
#include <vector>

#include "gwa/automorphism.hpp"
#include "gwa/reflection_group.hpp"

namespace gwa {

/// L = Frac(D) together with pairwise commuting automorphisms sigma_1..sigma_n; the
/// lattice Z^n acts on L by alpha -> prod sigma_i^{alpha_i}.
class SkewContext {
public:
  /// Throws std::invalid_argument when two generators do not commute.
  SkewContext(RingPtr ring, std::vector<Automorphism> sigma);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Automorphism>& sigma() const { return sigma_; }
  std::size_t rank() const { return sigma_.size(); }

  /// sigma^alpha; results are memoized.
  const Automorphism& automorphism(const LatticeElement& alpha) const;

private:
  RingPtr ring_;
  std::vector<Automorphism> sigma_;
  mutable std::mutex mu_;
  mutable std::map<LatticeElement, std::unique_ptr<Automorphism>> cache_;
};

using SkewContextPtr = std::shared_ptr<const SkewContext>;

SkewContextPtr make_skew_context(RingPtr ring, std::vector<Automorphism> sigma);

struct GrlexLess {
  bool operator()(const LatticeElement& a, const LatticeElement& b) const { return grlex_less(a, b); }
};

/// Finitely supported sum of alpha_m * m in L * Z^n.
class SkewElement {
public:
  using Terms = std::map<LatticeElement, RationalFunction, GrlexLess>;

  explicit SkewElement(SkewContextPtr ctx);
  SkewElement(SkewContextPtr ctx, const RationalFunction& coeff, const LatticeElement& m);

  static SkewElement one(const SkewContextPtr& ctx);
  /// e^m with coefficient 1.
  static SkewElement unit(const SkewContextPtr& ctx, const LatticeElement& m);

  const SkewContextPtr& context() const { return ctx_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Coefficient of m (zero when absent).
  RationalFunction coefficient(const LatticeElement& m) const;

  SkewElement operator-() const;
  SkewElement& operator+=(const SkewElement& o);
  SkewElement& operator-=(const SkewElement& o);
  friend SkewElement operator+(SkewElement a, const SkewElement& b) { return a += b; }
  friend SkewElement operator-(SkewElement a, const SkewElement& b) { return a -= b; }
  friend SkewElement operator*(const SkewElement& a, const SkewElement& b);
  friend bool operator==(const SkewElement& a, const SkewElement& b);

  /// Left multiplication by a coefficient.
  SkewElement scaled(const RationalFunction& c) const;

  /// `(h1 - 1) * e(1,0) + h2 * e(0,1)`, terms in graded-lex order of the keys.
  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const SkewElement& x) { return os << x.str(); }

private:
  void check_context(const SkewElement& o) const;
  void add_term(const LatticeElement& m, const RationalFunction& c);

  SkewContextPtr ctx_;
  Terms terms_;
};

SkewElement skew_mul(const SkewElement& u, const SkewElement& v);

/// Keys with nonzero coefficient, graded-lex ordered.
std::vector<LatticeElement> support(const SkewElement& u);

/// u(f) = sum alpha_m * m(f).
RationalFunction evaluate(const SkewElement& u, const RationalFunction& f);

/// Coefficients transformed by the permutation part of g on the variables, keys by
/// conjugation (coordinates permuted, diagonal part trivial).
SkewElement group_act(const ReflectionGroupElement& g, const SkewElement& u);

SkewElement reynolds(const std::vector<ReflectionGroupElement>& group, const SkewElement& u);

/// Checks g(u) == u for every listed element (generators suffice).
bool is_invariant(const std::vector<ReflectionGroupElement>& gens, const SkewElement& u);

struct GenerationResult {
  Membership status = Membership::yes;
  /// First failing membership question, e.g. "e(1,0) not in <supports>".
  std::string witness;
};

/// Whether the union of the supports generates the same subgroup/submonoid as the
/// spec: every spec generator lies in the span of the supports and every support
/// vector lies in the spec.
GenerationResult generates(const std::vector<SkewElement>& elements, const LatticeSubmonoidSpec& spec);

}  // namespace gwa
