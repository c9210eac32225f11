#pragma once

#include <random>

#include "gwa/gwa.hpp"
#include "gwa/rational_function.hpp"
#include "gwa/skew.hpp"

namespace gwa {

using Rng = std::mt19937_64;

struct RandomPolyOptions {
  int max_degree = 3;
  int max_terms = 4;
  int coeff_bound = 5;
  /// Mix zeta and field parameters into coefficients when the field has them.
  bool rich_coefficients = true;
  /// Allow negative exponents down to -max_degree in Laurent rings.
  bool laurent_exponents = true;
};

Scalar random_scalar(const FieldPtr& field, Rng& rng, const RandomPolyOptions& opt = {});
Poly random_poly(const RingPtr& ring, Rng& rng, const RandomPolyOptions& opt = {});
/// Nonzero numerator and denominator drawn independently.
RationalFunction random_rational(const RingPtr& ring, Rng& rng, const RandomPolyOptions& opt = {});

/// Entries uniform in [-bound, bound].
LatticeElement random_lattice(std::size_t n, Rng& rng, int bound);
/// Up to `max_support` terms with keys in [-key_bound, key_bound]^n; coefficients are
/// polynomials unless `fractions` is set.
SkewElement random_skew(const SkewContextPtr& ctx, Rng& rng, const RandomPolyOptions& opt, int max_support,
                        int key_bound, bool fractions = false);

/// Up to `max_support` terms d_alpha v_alpha with alpha in [-key_bound, key_bound]^n.
GWAElement random_gwa(const GWAPtr& p, Rng& rng, const RandomPolyOptions& opt, int max_support, int key_bound);

}  // namespace gwa
