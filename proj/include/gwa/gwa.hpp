#pragma once

#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "gwa/automorphism.hpp"
#include "gwa/lattice.hpp"
#include "gwa/skew.hpp"

namespace gwa {

/// Outcome of checking the presentation conditions. `i`, `j` are 1-based.
struct GWAValidation {
  enum class Kind { ok, not_commuting, moves_a, zero_a, bad_shape };
  Kind kind = Kind::ok;
  std::size_t i = 0;
  std::size_t j = 0;
  std::string witness;

  bool ok() const { return kind == Kind::ok; }
};

/// D(a, sigma) over D = k[h] or k[h^+-1].
class GWAPresentation {
public:
  /// Throws std::invalid_argument carrying the validation witness.
  /// `assume_independent` records a caller assertion that sigma_1..sigma_n are
  /// Z-linearly independent when this cannot be decided from the data.
  GWAPresentation(RingPtr ring, std::vector<Poly> a, std::vector<Automorphism> sigma, std::string name = "",
                  bool assume_independent = false);

  const RingPtr& ring() const { return ring_; }
  std::size_t rank() const { return a_.size(); }
  const std::vector<Poly>& a() const { return a_; }
  const std::vector<Automorphism>& sigma() const { return sigma_; }
  const std::string& name() const { return name_; }
  const SkewContextPtr& skew_context() const { return ctx_; }

  /// sigma^alpha on D.
  const Automorphism& twist(const LatticeElement& alpha) const { return ctx_->automorphism(alpha); }

  /// Z-linear independence of the sigma_i decided from shift/scaling data.
  Membership independence() const { return independence_; }
  bool embeddable() const { return independence_ == Membership::yes || assumed_independent_; }

  /// Coefficient c with w_s w_t = c w_{s+t} in the rank-one algebra of generator i,
  /// where w_k = X_i^k (k >= 0) or Y_i^{-k}.
  Poly rank_one_coefficient(std::size_t i, int s, int t) const;

  /// a sigma^{-1}(a) ... sigma^{-(m-1)}(a) for generator i.
  Poly twisted_product(std::size_t i, int m) const;

  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const GWAPresentation& p) { return os << p.str(); }

private:
  RingPtr ring_;
  std::vector<Poly> a_;
  std::vector<Automorphism> sigma_;
  std::string name_;
  SkewContextPtr ctx_;
  Membership independence_ = Membership::inconclusive;
  bool assumed_independent_ = false;
};

using GWAPtr = std::shared_ptr<const GWAPresentation>;

GWAValidation gwa_validate(const RingPtr& ring, const std::vector<Poly>& a, const std::vector<Automorphism>& sigma);

GWAPtr make_gwa(RingPtr ring, std::vector<Poly> a, std::vector<Automorphism> sigma, std::string name = "",
                bool assume_independent = false);

/// Sufficient test for Z-independence of diagonal affine automorphisms
/// h_j -> lambda_ij h_j + c_ij: rank of the parameter exponents of lambda together with
/// the translations of the pure-shift coordinates. `no` only for pure shifts.
Membership sigma_independence(const std::vector<Automorphism>& sigma);

/// Sum of d_alpha v_alpha with v_alpha = prod_i X_i^{alpha_i} or Y_i^{-alpha_i}.
class GWAElement {
public:
  using Terms = std::map<LatticeElement, Poly, GrlexLess>;

  explicit GWAElement(GWAPtr p);
  GWAElement(GWAPtr p, const Poly& coeff, const LatticeElement& alpha);

  static GWAElement one(const GWAPtr& p);
  static GWAElement scalar(const GWAPtr& p, const Poly& d);
  static GWAElement X(const GWAPtr& p, std::size_t i, int power = 1);
  static GWAElement Y(const GWAPtr& p, std::size_t i, int power = 1);
  /// v_alpha.
  static GWAElement word(const GWAPtr& p, const LatticeElement& alpha);

  const GWAPtr& presentation() const { return p_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Poly coefficient(const LatticeElement& alpha) const;

  GWAElement operator-() const;
  GWAElement& operator+=(const GWAElement& o);
  GWAElement& operator-=(const GWAElement& o);
  friend GWAElement operator+(GWAElement a, const GWAElement& b) { return a += b; }
  friend GWAElement operator-(GWAElement a, const GWAElement& b) { return a -= b; }
  friend GWAElement operator*(const GWAElement& a, const GWAElement& b);
  friend bool operator==(const GWAElement& a, const GWAElement& b);

  GWAElement scaled(const Scalar& c) const;
  /// d * this.
  GWAElement left_mul(const Poly& d) const;
  GWAElement pow(int e) const;

  /// `(h1 - 1)*X1^2*Y2 + h1`.
  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const GWAElement& x) { return os << x.str(); }

private:
  void check(const GWAElement& o) const;
  void add_term(const LatticeElement& alpha, const Poly& c);

  GWAPtr p_;
  Terms terms_;
};

GWAElement gwa_mul(const GWAElement& u, const GWAElement& v);

/// `X1^2*Y2`; `1` for the empty word.
std::string word_str(const LatticeElement& alpha);

/// Token stream for the rewriting engine: a letter X_i / Y_i or a coefficient in D.
struct WordToken {
  enum class Kind { X, Y, coeff };
  Kind kind = Kind::coeff;
  std::size_t index = 0;
  std::optional<Poly> coeff;

  static WordToken x(std::size_t i) { return {Kind::X, i, std::nullopt}; }
  static WordToken y(std::size_t i) { return {Kind::Y, i, std::nullopt}; }
  static WordToken c(Poly d) { return {Kind::coeff, 0, std::move(d)}; }
};

using Word = std::vector<WordToken>;

/// Rewrites a word to normal form with the rules
///   letter * d -> sigma^{+-1}(d) * letter,  d * d' -> dd',
///   Y_i X_i -> a_i,  X_i Y_i -> sigma_i(a_i),  L_j L_i -> L_i L_j (i < j).
/// With `rng` the redex is chosen uniformly at random, otherwise leftmost first.
GWAElement rewrite_word(const GWAPtr& p, const Word& w, std::mt19937_64* rng = nullptr);

/// Word of a term: coefficient followed by the letters of v_alpha.
Word term_word(const GWAPtr& p, const Poly& coeff, const LatticeElement& alpha);

/// Ranks add; variables of q come after those of p (renamed h1..hN on a clash) and
/// every automorphism is extended by the identity.
GWAPtr gwa_tensor(const GWAPtr& p, const GWAPtr& q);

/// Rank-zero presentation on zero variables.
GWAPtr gwa_trivial(const FieldPtr& field, bool laurent = false);

/// X_i -> e_i, Y_i -> a_i e_i^{-1}. Throws std::invalid_argument when the sigma_i are not
/// known to be independent.
SkewElement gwa_embed(const GWAElement& u);

struct CatalogParams {
  int cyclotomic_order = 1;
  std::string q = "q";
};

struct CatalogEntry {
  std::string name;
  /// Empty for torus_diffops, which is a pure skew ring.
  GWAPtr gwa;
  SkewContextPtr skew;
};

/// weyl, quantum_plane, quantum_weyl, torus_diffops; throws std::invalid_argument otherwise.
CatalogEntry catalog(const std::string& name, std::size_t n, const CatalogParams& params = {});
std::vector<std::string> catalog_names();

}  // namespace gwa
