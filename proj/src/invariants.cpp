#include "gwa/invariants.hpp"

#include <stdexcept>

namespace gwa {

namespace {

// Powers xi^0 .. xi^{m-1}; only built when the element has a diagonal part.
std::vector<Scalar> root_powers(const FieldPtr& field, const ReflectionGroupElement& g) {
  std::vector<Scalar> pw{Scalar(field, 1L)};
  if (g.is_permutation()) return pw;
  const Scalar xi = root_of_unity(field, g.m());
  for (int k = 1; k < g.m(); ++k) pw.push_back(pw.back() * xi);
  return pw;
}

std::vector<std::size_t> block_heads(const RingPtr& ring, std::size_t n) {
  if (n == 0 || ring->nvars() % n != 0) throw std::invalid_argument("variables do not split into n blocks");
  std::vector<std::size_t> heads;
  for (std::size_t i = 0; i < n; ++i) heads.push_back(i * (ring->nvars() / n));
  return heads;
}

Poly permuted(const Poly& f, const ReflectionGroupElement& g) {
  return f.permute_variables(g.variable_permutation(f.ring()->nvars()));
}

}  // namespace

GWAElement gwa_act(const ReflectionGroupElement& g, const GWAElement& u) {
  const GWAPresentation& p = *u.presentation();
  if (g.n() != p.rank()) throw std::invalid_argument("group rank does not match the GWA rank");
  const auto perm = g.variable_permutation(p.ring()->nvars());
  const auto pw = root_powers(p.ring()->field(), g);
  const int m = g.m();
  GWAElement r(u.presentation());
  for (const auto& [alpha, d] : u.terms()) {
    long e = 0;
    for (std::size_t i = 0; i < alpha.size(); ++i) e += static_cast<long>(g.diag()[g.perm()[i]]) * alpha[i];
    e = ((e % m) + m) % m;
    Poly c = d.permute_variables(perm);
    if (e != 0) c = c.scaled(pw[static_cast<std::size_t>(e)]);
    r += GWAElement(u.presentation(), c, g.act_on_lattice(alpha));
  }
  return r;
}

bool gwa_action_compatible(const GWAPresentation& p, const ReflectionGroupElement& g) {
  if (g.n() != p.rank()) return false;
  const RingPtr& ring = p.ring();
  const auto perm = g.variable_permutation(ring->nvars());
  std::vector<std::size_t> inv(perm.size());
  for (std::size_t k = 0; k < perm.size(); ++k) inv[perm[k]] = k;
  for (std::size_t i = 0; i < p.rank(); ++i) {
    const std::size_t j = g.perm()[i];
    if (!(p.a()[i].permute_variables(perm) == p.a()[j])) return false;
    // sigma_j == pi sigma_i pi^{-1} on every variable.
    for (std::size_t k = 0; k < ring->nvars(); ++k) {
      const Poly lhs = p.sigma()[j].forward()[k];
      const Poly rhs = p.sigma()[i].forward()[inv[k]].permute_variables(perm);
      if (!(lhs == rhs)) return false;
    }
  }
  return true;
}

GWAElement gwa_reynolds(const std::vector<ReflectionGroupElement>& group, const GWAElement& u) {
  if (group.empty()) throw std::invalid_argument("reynolds over an empty group");
  GWAElement sum(u.presentation());
  for (const auto& g : group) sum += gwa_act(g, u);
  return sum.scaled(Scalar(u.presentation()->ring()->field(), Rational(1, static_cast<long>(group.size()))));
}

bool gwa_is_invariant(const std::vector<ReflectionGroupElement>& gens, const GWAElement& u) {
  for (const auto& g : gens)
    if (!(gwa_act(g, u) == u)) return false;
  return true;
}

CyclicInvariant cyclic_invariant_gwa(const GWAPtr& p, int m) {
  if (p->rank() != 1) throw std::invalid_argument("cyclic invariants need a rank-one presentation");
  if (m < 1) throw std::invalid_argument("cyclic order must be at least 1");
  const Automorphism sm = p->sigma()[0].pow(m);
  const Poly am = p->twisted_product(0, m);
  CyclicInvariant out{make_gwa(p->ring(), {am}, {sm}, m == 1 ? p->name() : p->name() + "^(" + std::to_string(m) + ")",
                               p->embeddable()),
                      GWAElement::X(p, 0, m), GWAElement::Y(p, 0, m), false, ""};
  auto scalar = [&](const Poly& d) { return GWAElement::scalar(p, d); };
  if (!(out.y_image * out.x_image == scalar(am))) {
    out.witness = "Y^m X^m != a_m = " + am.str();
    return out;
  }
  if (!(out.x_image * out.y_image == scalar(sm.apply(am)))) {
    out.witness = "X^m Y^m != sigma^m(a_m)";
    return out;
  }
  const Automorphism sminv = sm.inverse();
  for (std::size_t k = 0; k < p->ring()->nvars(); ++k) {
    const Poly h = Poly::variable(p->ring(), k);
    if (!(out.x_image * scalar(h) == scalar(sm.apply(h)) * out.x_image)) {
      out.witness = "X^m " + h.str() + " != sigma^m(" + h.str() + ") X^m";
      return out;
    }
    if (!(out.y_image * scalar(h) == scalar(sminv.apply(h)) * out.y_image)) {
      out.witness = "Y^m " + h.str() + " != sigma^-m(" + h.str() + ") Y^m";
      return out;
    }
  }
  out.verified = true;
  return out;
}

GWAElement cyclic_map(const CyclicInvariant& c, const GWAElement& w) {
  if (w.presentation() != c.child) throw std::invalid_argument("element does not belong to the cyclic invariant GWA");
  const GWAPtr& parent = c.x_image.presentation();
  GWAElement r(parent);
  for (const auto& [alpha, d] : w.terms()) {
    const GWAElement word = alpha[0] >= 0 ? c.x_image.pow(alpha[0]) : c.y_image.pow(-alpha[0]);
    r += GWAElement::scalar(parent, d) * word;
  }
  return r;
}

std::vector<Poly> elementary_symmetric(const RingPtr& ring, std::size_t n) {
  const auto heads = block_heads(ring, n);
  std::vector<Poly> e(n + 1, Poly(ring));
  e[0] = Poly(ring, 1L);
  for (std::size_t h : heads) {
    const Poly x = Poly::variable(ring, h);
    for (std::size_t k = n; k >= 1; --k) e[k] += x * e[k - 1];
  }
  return {e.begin() + 1, e.end()};
}

InvariantGeneratorSet invariant_generators(const GWAPtr& p, int m, int p_div, LatticeSubmonoidSpec::Mode mode) {
  if (m < 1 || p_div < 1 || m % p_div != 0)
    throw std::invalid_argument("p = " + std::to_string(p_div) + " does not divide m = " + std::to_string(m));
  const std::size_t n = p->rank();
  const auto& ctx = p->skew_context();
  const std::string ms = m == 1 ? "" : "^" + std::to_string(m);
  InvariantGeneratorSet out;

  GWAElement xs(p), ys(p);
  SkewElement ex(ctx), ey(ctx);
  for (std::size_t i = 0; i < n; ++i) {
    xs += GWAElement::X(p, i, m);
    ys += GWAElement::Y(p, i, m);
    ex += SkewElement::unit(ctx, lattice_unit(n, i, m));
    // a_im = a_i sigma_i^{-1}(a_i) ... sigma_i^{-(m-1)}(a_i).
    const Automorphism inv = p->sigma()[i].inverse();
    Poly aim = p->a()[i], step = p->a()[i];
    for (int k = 1; k < m; ++k) {
      step = inv.apply(step);
      aim *= step;
    }
    ey += SkewElement(ctx, RationalFunction(aim), lattice_unit(n, i, -m));
  }
  out.labels.push_back("sum X_i" + ms);
  out.gwa_side.push_back(xs);
  out.expected_images.push_back(ex);
  out.labels.push_back("sum Y_i" + ms);
  out.gwa_side.push_back(ys);
  out.expected_images.push_back(ey);

  const int step = m / p_div;
  const LatticeElement diag(n, step);
  if (p_div > 1) {
    out.labels.push_back("(X_1...X_n)^" + std::to_string(step));
    out.gwa_side.push_back(GWAElement::word(p, diag));
    out.expected_images.push_back(SkewElement::unit(ctx, diag));
  }
  out.gamma = elementary_symmetric(p->ring(), n);
  for (std::size_t k = 0; k < out.gamma.size(); ++k) {
    out.labels.push_back("e_" + std::to_string(k + 1) + "(h)");
    out.gwa_side.push_back(GWAElement::scalar(p, out.gamma[k]));
    out.expected_images.push_back(SkewElement(ctx, RationalFunction(out.gamma[k]), lattice_zero(n)));
  }
  out.lattice.dim = n;
  out.lattice.mode = mode;
  out.lattice.bound = 16;
  for (std::size_t i = 0; i < n; ++i) out.lattice.generators.push_back(lattice_unit(n, i, m));
  if (p_div > 1) out.lattice.generators.push_back(diag);
  return out;
}

std::vector<SkewElement> skew_invariant_generators(const SkewContextPtr& ctx) {
  const std::size_t n = ctx->rank();
  SkewElement plus(ctx), minus(ctx);
  for (std::size_t i = 0; i < n; ++i) {
    plus += SkewElement::unit(ctx, lattice_unit(n, i));
    minus += SkewElement::unit(ctx, lattice_unit(n, i, -1));
  }
  std::vector<SkewElement> out{plus, minus};
  for (const auto& e : elementary_symmetric(ctx->ring(), n))
    out.emplace_back(ctx, RationalFunction(e), lattice_zero(n));
  return out;
}

DecompositionResult decomposition_check(const GWAElement& u, int m, int p_div) {
  if (m < 1 || p_div < 1 || m % p_div != 0)
    throw std::invalid_argument("p = " + std::to_string(p_div) + " does not divide m = " + std::to_string(m));
  const GWAPtr& p = u.presentation();
  const std::size_t n = p->rank();
  if (!gwa_is_invariant(group_generators(m, p_div, n), u)) throw std::invalid_argument("element is not G(m,p,n)-invariant");
  DecompositionResult out;
  const int step = m / p_div;
  std::vector<GWAElement> comp(static_cast<std::size_t>(p_div), GWAElement(p));
  for (const auto& [alpha, d] : u.terms()) {
    const int r = ((alpha[0] % m) + m) % m;
    comp[static_cast<std::size_t>(r / step)] += GWAElement(p, d, alpha);
  }
  GWAElement sum(p);
  for (const auto& c : comp) sum += c;
  out.reassembles = sum == u;

  const FieldPtr& field = p->ring()->field();
  const auto xi_op = ReflectionGroupElement::diagonal(m, [&] {
    std::vector<int> d(n, 0);
    d[0] = 1;
    return d;
  }());
  const Scalar omega = m > 1 ? root_of_unity(field, m).pow(step) : Scalar(field, 1L);
  out.eigen_ok = true;
  const auto g1 = group_generators(m, 1, n);
  for (int k = 0; k < p_div; ++k) {
    const GWAElement& c = comp[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    if (!(gwa_act(xi_op, c) == c.scaled(omega.pow(k)))) {
      out.eigen_ok = false;
      if (out.witness.empty()) out.witness = "component " + std::to_string(k) + " is not an eigenvector of Xi";
    }
    DecompositionComponent dc{k, c, std::nullopt, false};
    // Solve (X_1...X_n)^{k step} w = c term by term.
    const LatticeElement z(n, k * step);
    const Automorphism& back = p->twist(lattice_neg(z));
    GWAElement cof(p);
    bool exact = true;
    for (const auto& [alpha, d] : c.terms()) {
      LatticeElement beta = alpha;
      Poly coeff(p->ring(), 1L);
      for (std::size_t i = 0; i < n; ++i) {
        beta[i] -= k * step;
        coeff *= p->rank_one_coefficient(i, k * step, beta[i]);
      }
      auto q = poly_divides(coeff, d);
      if (!q) {
        exact = false;
        break;
      }
      cof += GWAElement(p, back.apply(*q), beta);
    }
    if (exact && GWAElement::word(p, z) * cof == c) {
      dc.cofactor_invariant = gwa_is_invariant(g1, cof);
      dc.cofactor = std::move(cof);
    }
    out.components.push_back(std::move(dc));
  }
  if (!out.reassembles) out.witness = "components do not sum to the input";
  return out;
}

PrincipalReport principal_check(const std::vector<SkewElement>& gens, const std::vector<Poly>& gamma_samples,
                                const std::vector<ReflectionGroupElement>& group) {
  PrincipalReport rep;
  for (std::size_t gi = 0; gi < gens.size(); ++gi) {
    for (std::size_t si = 0; si < gamma_samples.size(); ++si) {
      ++rep.evaluations;
      const RationalFunction v = evaluate(gens[gi], RationalFunction(gamma_samples[si]));
      const auto poly = v.as_poly();
      if (!poly) {
        rep.counterexamples.push_back({gi, si, "u(gamma) = " + v.str() + " is not a polynomial"});
        continue;
      }
      for (const auto& g : group) {
        if (!(permuted(*poly, g) == *poly)) {
          rep.counterexamples.push_back({gi, si, "u(gamma) = " + poly->str() + " is not fixed by " + g.str()});
          break;
        }
      }
    }
  }
  return rep;
}

std::vector<Poly> default_gamma_samples(const RingPtr& ring, std::size_t n, Rng& rng, int extra) {
  std::vector<Poly> out = elementary_symmetric(ring, n);
  const auto sn = group_elements(1, 1, n);
  RandomPolyOptions opt;
  opt.max_degree = 3;
  opt.max_terms = 3;
  opt.laurent_exponents = false;
  for (int made = 0; made < extra;) {
    const Poly f = random_poly(ring, rng, opt);
    Poly s(ring);
    for (const auto& g : sn) s += permuted(f, g);
    if (s.is_constant()) continue;
    out.push_back(s);
    ++made;
  }
  return out;
}

bool rational_witness_check(const SkewElement& x, const Poly& d_chi, const std::vector<ReflectionGroupElement>& group) {
  if (d_chi.is_zero()) throw std::invalid_argument("d_chi must be nonzero");
  if (!is_invariant(group, x)) return false;
  const RationalFunction d(d_chi);
  for (const auto& [m, c] : x.terms())
    if (!(d * c).as_poly()) return false;
  return true;
}

Poly dchi_sign_sn(const RingPtr& ring, std::size_t n) {
  if (n < 2) throw std::invalid_argument("sign character needs n >= 2");
  const auto heads = block_heads(ring, n);
  Poly d(ring, 1L);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) d *= Poly::variable(ring, heads[i]) - Poly::variable(ring, heads[j]);
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (!(permuted(d, ReflectionGroupElement::transposition(1, n, i, i + 1)) == -d))
      throw std::logic_error("discriminant is not skew-invariant");
  return d;
}

}  // namespace gwa
