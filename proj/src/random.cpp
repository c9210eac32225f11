#include "gwa/random.hpp"

namespace gwa {

Scalar random_scalar(const FieldPtr& field, Rng& rng, const RandomPolyOptions& opt) {
  std::uniform_int_distribution<int> coeff(-opt.coeff_bound, opt.coeff_bound);
  std::uniform_int_distribution<int> small(1, 3);
  Scalar c(field, static_cast<long>(coeff(rng)));
  if (!opt.rich_coefficients) return c;
  std::uniform_int_distribution<int> pick(0, 3);
  if (field->cyclotomic_order() > 2 && pick(rng) == 0)
    c += Scalar::zeta(field) * Scalar(field, static_cast<long>(coeff(rng)));
  for (const auto& p : field->parameters()) {
    const int k = pick(rng);
    if (k == 0) c += Scalar::parameter(field, p);
    if (k == 1) c *= Scalar::parameter(field, p).pow(small(rng) == 1 ? -1 : 1);
  }
  return c;
}

Poly random_poly(const RingPtr& ring, Rng& rng, const RandomPolyOptions& opt) {
  const std::size_t n = ring->nvars();
  std::uniform_int_distribution<int> nterms(1, opt.max_terms);
  std::uniform_int_distribution<int> deg(0, opt.max_degree);
  const bool laurent = ring->laurent() && opt.laurent_exponents;
  Poly out(ring);
  const int k = nterms(rng);
  for (int t = 0; t < k; ++t) {
    const int d = deg(rng);
    Exponents e(n, 0);
    // Spread the total degree d over random variables.
    if (n > 0) {
      std::uniform_int_distribution<std::size_t> var(0, n - 1);
      for (int s = 0; s < d; ++s) e[var(rng)] += 1;
      if (laurent) {
        std::uniform_int_distribution<int> neg(0, 3);
        for (auto& x : e)
          if (neg(rng) == 0) x = -x - 1;
      }
    }
    out += Poly::monomial(ring, std::move(e), random_scalar(ring->field(), rng, opt));
  }
  return out;
}

RationalFunction random_rational(const RingPtr& ring, Rng& rng, const RandomPolyOptions& opt) {
  Poly num = random_poly(ring, rng, opt);
  Poly den = random_poly(ring, rng, opt);
  while (den.is_zero()) den = random_poly(ring, rng, opt);
  return RationalFunction(std::move(num), std::move(den));
}

LatticeElement random_lattice(std::size_t n, Rng& rng, int bound) {
  std::uniform_int_distribution<int> c(-bound, bound);
  LatticeElement v(n);
  for (auto& x : v) x = c(rng);
  return v;
}

SkewElement random_skew(const SkewContextPtr& ctx, Rng& rng, const RandomPolyOptions& opt, int max_support,
                        int key_bound, bool fractions) {
  std::uniform_int_distribution<int> k(1, max_support);
  SkewElement u(ctx);
  const int terms = k(rng);
  for (int t = 0; t < terms; ++t) {
    const RationalFunction c = fractions ? random_rational(ctx->ring(), rng, opt)
                                         : RationalFunction(random_poly(ctx->ring(), rng, opt));
    u += SkewElement(ctx, c, random_lattice(ctx->rank(), rng, key_bound));
  }
  return u;
}

GWAElement random_gwa(const GWAPtr& p, Rng& rng, const RandomPolyOptions& opt, int max_support, int key_bound) {
  std::uniform_int_distribution<int> k(1, max_support);
  GWAElement u(p);
  const int terms = k(rng);
  for (int t = 0; t < terms; ++t) u += GWAElement(p, random_poly(p->ring(), rng, opt), random_lattice(p->rank(), rng, key_bound));
  return u;
}

}  // namespace gwa
