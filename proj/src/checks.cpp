#include "gwa/checks.hpp"

#include <set>
#include <stdexcept>

namespace gwa {

const char* to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    default: return "inconclusive";
  }
}

void SuiteResult::fail(std::string w) {
  if (status == Status::fail) return;
  status = Status::fail;
  witness = std::move(w);
}

void SuiteResult::inconclusive(std::string w) {
  if (status != Status::pass) return;
  status = Status::inconclusive;
  witness = std::move(w);
}

namespace {

RandomPolyOptions small_options(int degree = 2, int terms = 2) {
  RandomPolyOptions opt;
  opt.max_degree = degree;
  opt.max_terms = terms;
  return opt;
}

}  // namespace

SuiteResult gwa_relation_suite(const GWAPtr& p, Rng& rng, int samples, int max_degree) {
  SuiteResult out;
  const std::size_t n = p->rank();
  RandomPolyOptions opt;
  opt.max_degree = max_degree;
  std::vector<Automorphism> inv;
  for (const auto& s : p->sigma()) inv.push_back(s.inverse());
  const auto expect = [&](const GWAElement& l, const GWAElement& r, const std::string& what) {
    ++out.cases;
    if (!(l == r)) out.fail(what + ": " + l.str() + " != " + r.str());
  };
  for (int s = 0; s < samples; ++s) {
    const Poly d = random_poly(p->ring(), rng, opt);
    const GWAElement D = GWAElement::scalar(p, d);
    for (std::size_t i = 0; i < n; ++i) {
      const std::string si = std::to_string(i + 1);
      const GWAElement X = GWAElement::X(p, i), Y = GWAElement::Y(p, i);
      expect(X * D, GWAElement::scalar(p, p->sigma()[i].apply(d)) * X, "X" + si + " d = sigma(d) X" + si + " at d = " + d.str());
      expect(Y * D, GWAElement::scalar(p, inv[i].apply(d)) * Y, "Y" + si + " d = sigma^-1(d) Y" + si + " at d = " + d.str());
      expect(Y * X, GWAElement::scalar(p, p->a()[i]), "Y" + si + " X" + si + " = a" + si);
      expect(X * Y, GWAElement::scalar(p, p->sigma()[i].apply(p->a()[i])), "X" + si + " Y" + si + " = sigma(a" + si + ")");
      for (std::size_t j = i + 1; j < n; ++j) {
        const std::string sj = std::to_string(j + 1);
        const GWAElement Xj = GWAElement::X(p, j), Yj = GWAElement::Y(p, j);
        expect(X * Xj, Xj * X, "[X" + si + ", X" + sj + "]");
        expect(Y * Yj, Yj * Y, "[Y" + si + ", Y" + sj + "]");
        expect(X * Yj, Yj * X, "[X" + si + ", Y" + sj + "]");
        expect(Y * Xj, Xj * Y, "[Y" + si + ", X" + sj + "]");
      }
    }
  }
  return out;
}

SuiteResult confluence_suite(const GWAPtr& p, Rng& rng, int words, int length) {
  SuiteResult out;
  const auto opt = small_options(1, 2);
  std::uniform_int_distribution<int> kind(0, 2);
  std::uniform_int_distribution<std::size_t> var(0, p->rank() - 1);
  for (int w = 0; w < words; ++w) {
    Word word;
    GWAElement product = GWAElement::one(p);
    for (int k = 0; k < length; ++k) {
      const std::size_t i = var(rng);
      switch (kind(rng)) {
        case 0:
          word.push_back(WordToken::x(i));
          product = product * GWAElement::X(p, i);
          break;
        case 1:
          word.push_back(WordToken::y(i));
          product = product * GWAElement::Y(p, i);
          break;
        default: {
          Poly d = random_poly(p->ring(), rng, opt);
          product = product * GWAElement::scalar(p, d);
          word.push_back(WordToken::c(std::move(d)));
        }
      }
    }
    ++out.cases;
    const GWAElement left = rewrite_word(p, word), random = rewrite_word(p, word, &rng);
    if (!(left == product) || !(random == product))
      out.fail("rewriting gives " + left.str() + " / " + random.str() + ", product " + product.str());
  }
  return out;
}

SuiteResult embedding_suite(const GWAPtr& p, Rng& rng, int pairs) {
  SuiteResult out;
  if (!p->embeddable()) {
    out.inconclusive(std::string("independence of sigma is ") + to_string(p->independence()));
    return out;
  }
  const auto opt = small_options();
  for (int k = 0; k < pairs; ++k) {
    const auto u = random_gwa(p, rng, opt, 3, 2), v = random_gwa(p, rng, opt, 3, 2);
    ++out.cases;
    const SkewElement l = gwa_embed(u * v), r = gwa_embed(u) * gwa_embed(v);
    if (!(l == r)) out.fail("u = " + u.str() + ", v = " + v.str() + ": " + l.str() + " != " + r.str());
  }
  return out;
}

SuiteResult cyclic_suite(const GWAPtr& p, const std::vector<int>& ms) {
  if (p->rank() != 1) throw std::invalid_argument("cyclic invariants need a rank-one presentation");
  SuiteResult out;
  const Automorphism back = p->sigma()[0].inverse();
  for (int m : ms) {
    Poly prod(p->ring(), 1L), cur = p->a()[0];
    for (int k = 0; k < m; ++k) {
      prod *= cur;
      cur = back.apply(cur);
    }
    ++out.cases;
    const GWAElement ym_xm = GWAElement::Y(p, 0, m) * GWAElement::X(p, 0, m);
    if (!(ym_xm == GWAElement::scalar(p, prod))) {
      out.fail("m = " + std::to_string(m) + ": Y^m X^m = " + ym_xm.str() + ", expected " + prod.str());
      continue;
    }
    const auto c = cyclic_invariant_gwa(p, m);
    if (!c.verified) out.fail("m = " + std::to_string(m) + ": " + c.witness);
    else if (!(c.child->a()[0] == prod)) out.fail("m = " + std::to_string(m) + ": a_m = " + c.child->a()[0].str());
  }
  return out;
}

SuiteResult associativity_suite(const SkewContextPtr& ctx, Rng& rng, int triples) {
  SuiteResult out;
  const auto opt = small_options(2, 2);
  for (int k = 0; k < triples; ++k) {
    const auto u = random_skew(ctx, rng, opt, 2, 2, k % 3 == 0);
    const auto v = random_skew(ctx, rng, opt, 2, 2);
    const auto w = random_skew(ctx, rng, opt, 2, 2);
    ++out.cases;
    if (!(skew_mul(skew_mul(u, v), w) == skew_mul(u, skew_mul(v, w))))
      out.fail("(uv)w != u(vw) for u = " + u.str() + ", v = " + v.str() + ", w = " + w.str());
  }
  return out;
}

SuiteResult evaluate_law_suite(const SkewContextPtr& ctx, Rng& rng, int triples) {
  SuiteResult out;
  const auto opt = small_options(2, 2);
  for (int k = 0; k < triples; ++k) {
    const auto u = random_skew(ctx, rng, opt, 2, 2);
    const auto v = random_skew(ctx, rng, opt, 2, 2, k % 3 == 0);
    const auto f = random_rational(ctx->ring(), rng, opt);
    ++out.cases;
    if (!(evaluate(skew_mul(u, v), f) == evaluate(u, evaluate(v, f))))
      out.fail("evaluate law fails for u = " + u.str() + ", v = " + v.str() + ", f = " + f.str());
  }
  return out;
}

SuiteResult membership_suite(Rng& rng, int lattices, int bound, std::size_t dim) {
  SuiteResult out;
  std::uniform_int_distribution<int> entry(-3, 3), count(1, 3), coin(0, 1), box(-6, 6);
  for (int t = 0; t < lattices; ++t) {
    const int k = count(rng);
    std::vector<LatticeElement> gens;
    for (int i = 0; i < k; ++i) {
      LatticeElement g(dim);
      for (auto& x : g) x = entry(rng);
      gens.push_back(std::move(g));
    }
    const auto combine = [&](const auto& c) {
      LatticeElement v(dim, 0);
      for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = 0; j < dim; ++j) v[j] += static_cast<int>(c[i]) * gens[i][j];
      return v;
    };
    std::set<LatticeElement> monoid, group;
    std::vector<int> c(static_cast<std::size_t>(k), -bound);
    for (;;) {
      group.insert(combine(c));
      int total = 0;
      bool nonneg = true;
      for (int x : c) {
        total += x;
        nonneg = nonneg && x >= 0;
      }
      if (nonneg && total <= bound) monoid.insert(combine(c));
      std::size_t i = 0;
      while (i < c.size() && c[i] == bound) c[i++] = -bound;
      if (i == c.size()) break;
      ++c[i];
    }
    const LatticeSubmonoidSpec mspec{dim, gens, LatticeSubmonoidSpec::Mode::monoid, bound};
    const LatticeSubmonoidSpec gspec{dim, gens, LatticeSubmonoidSpec::Mode::group, bound};
    const std::vector<LatticeElement> reachable(monoid.begin(), monoid.end());
    std::uniform_int_distribution<std::size_t> pick(0, reachable.size() - 1);
    for (int s = 0; s < 20; ++s) {
      LatticeElement v(dim);
      if (coin(rng)) v = reachable[pick(rng)];
      else
        for (auto& x : v) x = box(rng);
      ++out.cases;
      const auto mr = membership(mspec, v);
      const bool found = monoid.count(v) > 0;
      const std::string where = "lattice " + std::to_string(t) + ", v = " + lattice_str(v);
      if (found != (mr.status == Membership::yes)) {
        out.fail(where + ": monoid membership " + to_string(mr.status) + ", enumeration " + (found ? "yes" : "no"));
        continue;
      }
      if (mr.status == Membership::yes) {
        long total = 0;
        bool nonneg = true;
        for (long x : mr.certificate) {
          total += x;
          nonneg = nonneg && x >= 0;
        }
        if (!nonneg || total > bound || combine(mr.certificate) != v) out.fail(where + ": bad monoid certificate");
      }
      const auto gr = membership(gspec, v);
      if (group.count(v) && gr.status != Membership::yes) out.fail(where + ": group membership missed an enumerated vector");
      if (gr.status == Membership::yes && combine(gr.certificate) != v) out.fail(where + ": bad group certificate");
      if (gr.status == Membership::inconclusive) out.fail(where + ": group membership must be decided");
    }
  }
  return out;
}

SuiteResult invariance_suite(const InvariantGeneratorSet& s, const std::vector<ReflectionGroupElement>& gens) {
  SuiteResult out;
  for (std::size_t k = 0; k < s.gwa_side.size(); ++k) {
    ++out.cases;
    if (!gwa_is_invariant(gens, s.gwa_side[k])) out.fail(s.labels[k] + " is not fixed");
  }
  return out;
}

SuiteResult embedding_images_suite(const InvariantGeneratorSet& s) {
  SuiteResult out;
  for (std::size_t k = 0; k < s.gwa_side.size(); ++k) {
    ++out.cases;
    if (!s.gwa_side[k].presentation()->embeddable()) {
      out.inconclusive("sigma is not known to be independent");
      return out;
    }
    const SkewElement img = gwa_embed(s.gwa_side[k]);
    if (!(img == s.expected_images[k]))
      out.fail(s.labels[k] + " maps to " + img.str() + ", expected " + s.expected_images[k].str());
  }
  return out;
}

SuiteResult generation_suite(const InvariantGeneratorSet& s) {
  SuiteResult out;
  out.cases = s.lattice.generators.size();
  const auto r = generates(s.expected_images, s.lattice);
  if (r.status == Membership::no) out.fail(r.witness);
  else if (r.status == Membership::inconclusive) out.inconclusive(r.witness);
  return out;
}

SuiteResult decomposition_suite(const GWAPtr& p, int m, int p_div, Rng& rng, int count) {
  SuiteResult out;
  const auto group = group_elements(m, p_div, p->rank());
  auto opt = small_options(2, 2);
  opt.rich_coefficients = false;
  const int step = m / p_div;
  std::uniform_int_distribution<int> shift(0, p_div - 1);
  for (int t = 0; t < count; ++t) {
    // Redraw until the average is nonzero; the second summand reaches the k > 0 components.
    GWAElement u(p);
    for (int tries = 0; tries < 100 && u.is_zero(); ++tries) {
      const LatticeElement z(p->rank(), shift(rng) * step);
      u = gwa_reynolds(group, random_gwa(p, rng, opt, 3, 2 * m) + GWAElement::word(p, z) * random_gwa(p, rng, opt, 2, m));
    }
    if (u.is_zero()) {
      out.inconclusive("no nonzero invariant drawn");
      continue;
    }
    ++out.cases;
    const auto r = decomposition_check(u, m, p_div);
    if (!r.reassembles || !r.eigen_ok || r.components.size() > static_cast<std::size_t>(p_div))
      out.fail("u = " + u.str() + ": " + (r.witness.empty() ? "too many components" : r.witness));
  }
  return out;
}

SuiteResult principal_suite(const std::vector<SkewElement>& gens, const std::vector<Poly>& samples,
                            const std::vector<ReflectionGroupElement>& group) {
  SuiteResult out;
  const auto rep = principal_check(gens, samples, group);
  out.cases = rep.evaluations;
  if (!rep.pass()) {
    const auto& c = rep.counterexamples.front();
    out.fail("generator " + std::to_string(c.generator) + ", sample " + samples[c.sample].str() + ": " + c.reason);
  }
  return out;
}

SuiteResult rational_witness_suite(const SkewContextPtr& ctx) {
  const std::size_t n = ctx->rank();
  if (n < 2) throw std::invalid_argument("rational witness needs rank at least 2");
  const RingPtr& ring = ctx->ring();
  SuiteResult out;
  const auto group = group_elements(1, 1, n);
  const Poly d = dchi_sign_sn(ring, n);
  SkewElement x(ctx);
  for (std::size_t i = 0; i < n; ++i) {
    Poly den(ring, 1L);
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) den *= Poly::variable(ring, i) - Poly::variable(ring, j);
    LatticeElement e(n, 0);
    e[i] = 1;
    x += SkewElement(ctx, RationalFunction(den).inverse(), e);
  }
  LatticeElement e1(n, 0);
  e1[0] = 1;
  const SkewElement probe(ctx, RationalFunction(Poly::variable(ring, 0) - Poly::variable(ring, 1)).inverse(), e1);
  out.cases = 2;
  if (!rational_witness_check(x, d, group)) out.fail("witness " + x.str() + " rejected with d = " + d.str());
  else if (rational_witness_check(probe, d, group)) out.fail("non-invariant probe " + probe.str() + " accepted");
  return out;
}

SuiteResult dagger_suite(const OrbitTruncation& orbit, Rng& rng, int pairs) {
  SuiteResult out;
  const GWAPtr& p = orbit.gwa;
  const long s = orbit.find(orbit.seed);
  const WeightVector v = WeightVector::basis(static_cast<std::size_t>(s), p->ring()->field());
  const auto opt = small_options(2, 3);
  for (int k = 0; k < pairs; ++k) {
    const Poly z = random_poly(p->ring(), rng, opt);
    const LatticeElement theta = random_lattice(p->rank(), rng, orbit.radius);
    ++out.cases;
    const auto lhs = act(TableauxGenerator::coefficient(z), move(theta, v, orbit), orbit);
    const auto rhs =
        move(theta, act(TableauxGenerator::coefficient(p->twist(lattice_neg(theta)).apply(z)), v, orbit), orbit);
    if (!(lhs == rhs))
      out.fail("z = " + z.str() + ", theta = " + lattice_str(theta) + ": " + lhs.str(orbit) + " != " + rhs.str(orbit));
  }
  return out;
}

}  // namespace gwa
