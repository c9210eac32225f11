#include <gtest/gtest.h>

#include "gwa/expr.hpp"
#include "gwa/invariants.hpp"

using namespace gwa;

namespace {

GWAPtr weyl(std::size_t n, int order = 1) {
  return catalog("weyl", n, {order}).gwa;
}

Poly P(const GWAPtr& p, const std::string& s) {
  return parse_poly(s, p->ring());
}

GWAElement D(const GWAPtr& p, const std::string& s) {
  return GWAElement::scalar(p, P(p, s));
}

SkewElement S(const SkewContextPtr& c, const std::string& coeff, LatticeElement m) {
  return SkewElement(c, parse_rational(coeff, c->ring()), m);
}

struct GroupCase {
  int m, p;
  std::size_t n;
};

const std::vector<GroupCase> kGroupCases{{2, 1, 2}, {2, 2, 2}, {3, 3, 2}, {4, 2, 2}, {2, 2, 3}};

}  // namespace

TEST(GwaAct, Examples) {
  auto w = weyl(2, 2);
  const auto swap = ReflectionGroupElement::transposition(2, 2, 0, 1);
  EXPECT_EQ(gwa_act(swap, GWAElement::X(w, 0)), GWAElement::X(w, 1));
  EXPECT_EQ(gwa_act(swap, GWAElement(w, P(w, "h1^2"), {1, -1})), GWAElement(w, P(w, "h2^2"), {-1, 1}));
  const auto d = ReflectionGroupElement::diagonal(2, {1, 0});
  EXPECT_EQ(gwa_act(d, GWAElement::X(w, 0)), -GWAElement::X(w, 0));
  EXPECT_EQ(gwa_act(d, GWAElement::Y(w, 0)), -GWAElement::Y(w, 0));
  EXPECT_EQ(gwa_act(d, D(w, "h1")), D(w, "h1"));
  const GWAElement u = GWAElement(w, P(w, "h1 + 3"), {2, -1}) + GWAElement::Y(w, 1);
  EXPECT_EQ(gwa_act(ReflectionGroupElement::identity(2, 2), u), u);
}

TEST(GwaAct, CubeRootScaling) {
  auto w = weyl(1, 3);
  const auto g = ReflectionGroupElement::diagonal(3, {1});
  const Scalar xi = root_of_unity(w->ring()->field(), 3);
  EXPECT_EQ(gwa_act(g, GWAElement::X(w, 0)), GWAElement::X(w, 0).scaled(xi));
  EXPECT_EQ(gwa_act(g, GWAElement::Y(w, 0)), GWAElement::Y(w, 0).scaled(xi.inverse()));
  EXPECT_EQ(gwa_act(g, GWAElement::X(w, 0, 3)), GWAElement::X(w, 0, 3));
}

TEST(GwaAct, AutomorphismAndCompositionLaw) {
  Rng rng(3);
  RandomPolyOptions opt;
  opt.max_degree = 2;
  opt.max_terms = 2;
  for (const auto& gc : kGroupCases) {
    for (const std::string name : {"weyl", "quantum_plane"}) {
      const auto p = catalog(name, gc.n, {gc.m}).gwa;
      const auto group = group_elements(gc.m, gc.p, gc.n);
      for (const auto& g : group_generators(gc.m, gc.p, gc.n)) EXPECT_TRUE(gwa_action_compatible(*p, g));
      std::uniform_int_distribution<std::size_t> pick(0, group.size() - 1);
      for (int t = 0; t < 3; ++t) {
        const auto u = random_gwa(p, rng, opt, 2, 2), v = random_gwa(p, rng, opt, 2, 2);
        const auto& g = group[pick(rng)];
        const auto& h = group[pick(rng)];
        EXPECT_EQ(gwa_act(g, u * v), gwa_act(g, u) * gwa_act(g, v)) << name << " " << g;
        EXPECT_EQ(gwa_act(g * h, u), gwa_act(g, gwa_act(h, u)));
      }
    }
  }
}

TEST(GwaAct, IncompatiblePresentationDetected) {
  auto r = make_ring(field_make(1), 2);
  // sigma_1 shifts by 1, sigma_2 by 2: swapping the variables is not an automorphism.
  const auto p = make_gwa(r, {parse_poly("h1", r), parse_poly("h2", r)},
                          {shift_auto(r, 0), shift_auto(r, 1, Scalar(r->field(), 2L))});
  EXPECT_FALSE(gwa_action_compatible(*p, ReflectionGroupElement::transposition(1, 2, 0, 1)));
  EXPECT_TRUE(gwa_action_compatible(*p, ReflectionGroupElement::identity(1, 2)));
}

TEST(CyclicInvariant, Examples) {
  auto w = weyl(1);
  const auto c2 = cyclic_invariant_gwa(w, 2);
  EXPECT_TRUE(c2.verified) << c2.witness;
  EXPECT_EQ(c2.child->a()[0], P(w, "h1*(h1 + 1)"));
  EXPECT_EQ(c2.child->sigma()[0].forward()[0], P(w, "h1 - 2"));
  const auto c1 = cyclic_invariant_gwa(w, 1);
  EXPECT_EQ(c1.child->a(), w->a());
  EXPECT_EQ(c1.child->sigma(), w->sigma());
  auto qp = catalog("quantum_plane", 1).gwa;
  const auto q2 = cyclic_invariant_gwa(qp, 2);
  EXPECT_TRUE(q2.verified);
  EXPECT_EQ(q2.child->a()[0], P(qp, "h1^2/q"));
  EXPECT_EQ(q2.child->sigma()[0].forward()[0], P(qp, "q^2*h1"));
  EXPECT_THROW(cyclic_invariant_gwa(weyl(2), 2), std::invalid_argument);
}

TEST(CyclicInvariant, OracleAndHomomorphism) {
  Rng rng(13);
  RandomPolyOptions opt;
  opt.max_degree = 2;
  opt.max_terms = 2;
  for (const std::string name : {"weyl", "quantum_plane", "quantum_weyl"}) {
    const auto p = catalog(name, 1).gwa;
    for (int m = 1; m <= 4; ++m) {
      const auto c = cyclic_invariant_gwa(p, m);
      EXPECT_TRUE(c.verified) << name << " m=" << m << ": " << c.witness;
      EXPECT_EQ(GWAElement::Y(p, 0, m) * GWAElement::X(p, 0, m), GWAElement::scalar(p, c.child->a()[0]));
      for (int t = 0; t < 3; ++t) {
        const auto u = random_gwa(c.child, rng, opt, 2, 2), v = random_gwa(c.child, rng, opt, 2, 2);
        EXPECT_EQ(cyclic_map(c, u * v), cyclic_map(c, u) * cyclic_map(c, v)) << name << " m=" << m;
      }
    }
  }
}

TEST(InvariantGenerators, Examples) {
  auto w = weyl(2);
  const auto& ctx = w->skew_context();
  const auto s = invariant_generators(w, 1, 1);
  ASSERT_EQ(s.gwa_side.size(), 4u);
  EXPECT_EQ(s.gwa_side[0], GWAElement::X(w, 0) + GWAElement::X(w, 1));
  EXPECT_EQ(s.gwa_side[1], GWAElement::Y(w, 0) + GWAElement::Y(w, 1));
  EXPECT_EQ(s.expected_images[0], SkewElement::unit(ctx, {1, 0}) + SkewElement::unit(ctx, {0, 1}));
  EXPECT_EQ(s.expected_images[1], S(ctx, "h1", {-1, 0}) + S(ctx, "h2", {0, -1}));
  EXPECT_EQ(s.gamma[0], P(w, "h1 + h2"));
  EXPECT_EQ(s.gamma[1], P(w, "h1*h2"));

  auto w22 = weyl(2, 2);
  const auto& c22 = w22->skew_context();
  const auto s2 = invariant_generators(w22, 2, 2);
  ASSERT_EQ(s2.labels[2], "(X_1...X_n)^1");
  EXPECT_EQ(s2.gwa_side[2], GWAElement::X(w22, 0) * GWAElement::X(w22, 1));
  EXPECT_EQ(s2.expected_images[2], SkewElement::unit(c22, {1, 1}));
  EXPECT_EQ(s2.expected_images[1], S(c22, "h1*(h1 + 1)", {-2, 0}) + S(c22, "h2*(h2 + 1)", {0, -2}));
  EXPECT_THROW(invariant_generators(w22, 2, 3), std::invalid_argument);
}

TEST(InvariantGenerators, FixedEmbeddedAndGenerating) {
  for (const auto& gc : kGroupCases) {
    for (const std::string name : {"weyl", "quantum_plane"}) {
      const auto p = catalog(name, gc.n, {gc.m}).gwa;
      const auto s = invariant_generators(p, gc.m, gc.p);
      const auto gens = group_generators(gc.m, gc.p, gc.n);
      for (std::size_t k = 0; k < s.gwa_side.size(); ++k) {
        EXPECT_TRUE(gwa_is_invariant(gens, s.gwa_side[k])) << name << " " << s.labels[k];
        EXPECT_EQ(gwa_embed(s.gwa_side[k]), s.expected_images[k]) << name << " " << s.labels[k];
      }
      EXPECT_EQ(generates(s.expected_images, s.lattice).status, Membership::yes);
    }
  }
}

TEST(Decomposition, Examples) {
  auto w = weyl(2, 2);
  const auto x1x2 = GWAElement::X(w, 0) * GWAElement::X(w, 1);
  auto r = decomposition_check(x1x2, 2, 2);
  ASSERT_EQ(r.components.size(), 1u);
  EXPECT_EQ(r.components[0].k, 1);
  ASSERT_TRUE(r.components[0].cofactor);
  EXPECT_EQ(*r.components[0].cofactor, GWAElement::one(w));
  EXPECT_TRUE(r.reassembles);
  EXPECT_TRUE(r.eigen_ok);

  r = decomposition_check(GWAElement::X(w, 0, 2) + GWAElement::X(w, 1, 2), 2, 2);
  ASSERT_EQ(r.components.size(), 1u);
  EXPECT_EQ(r.components[0].k, 0);
  EXPECT_TRUE(r.components[0].cofactor_invariant);

  r = decomposition_check(GWAElement(w), 2, 2);
  EXPECT_TRUE(r.components.empty());
  EXPECT_THROW(decomposition_check(GWAElement::X(w, 0), 2, 2), std::invalid_argument);
}

TEST(Decomposition, YComponentHasNoPolynomialCofactor) {
  auto w = weyl(2, 2);
  const auto y1y2 = GWAElement::Y(w, 0) * GWAElement::Y(w, 1);
  const auto r = decomposition_check(y1y2, 2, 2);
  ASSERT_EQ(r.components.size(), 1u);
  EXPECT_EQ(r.components[0].k, 1);
  EXPECT_FALSE(r.components[0].cofactor);
  EXPECT_TRUE(r.eigen_ok);
}

TEST(Decomposition, RandomInvariants) {
  Rng rng(19);
  RandomPolyOptions opt;
  opt.max_degree = 2;
  opt.max_terms = 2;
  opt.rich_coefficients = false;
  for (const auto& gc : kGroupCases) {
    const auto p = weyl(gc.n, gc.m);
    const auto group = group_elements(gc.m, gc.p, gc.n);
    for (int t = 0; t < 4; ++t) {
      const auto u = gwa_reynolds(group, random_gwa(p, rng, opt, 4, 2 * gc.m));
      const auto r = decomposition_check(u, gc.m, gc.p);
      EXPECT_TRUE(r.reassembles);
      EXPECT_TRUE(r.eigen_ok) << r.witness;
      EXPECT_LE(r.components.size(), static_cast<std::size_t>(gc.p));
      for (const auto& c : r.components)
        if (c.cofactor) EXPECT_TRUE(c.cofactor_invariant);
    }
  }
}

TEST(PrincipalCheck, Examples) {
  auto w = weyl(2);
  const auto& ctx = w->skew_context();
  const auto s2 = group_elements(1, 1, 2);
  const SkewElement d = SkewElement::unit(ctx, {1, 0}) + SkewElement::unit(ctx, {0, 1});
  EXPECT_EQ(evaluate(d, RationalFunction(P(w, "h1 + h2"))), parse_rational("2*(h1 + h2) - 2", w->ring()));
  EXPECT_TRUE(principal_check({d}, {P(w, "h1 + h2")}, s2).pass());
  EXPECT_TRUE(principal_check({SkewElement::one(ctx)}, {P(w, "h1*h2 + 7")}, s2).pass());
  const auto bad = principal_check({S(ctx, "1/(h1 - h2)", {0, 0})}, {P(w, "1")}, s2);
  ASSERT_FALSE(bad.pass());
  EXPECT_NE(bad.counterexamples[0].reason.find("not a polynomial"), std::string::npos);
  const auto skew = principal_check({S(ctx, "h1", {0, 0})}, {P(w, "1")}, s2);
  ASSERT_FALSE(skew.pass());
  EXPECT_NE(skew.counterexamples[0].reason.find("not fixed"), std::string::npos);
}

TEST(PrincipalCheck, CatalogGenerators) {
  Rng rng(29);
  for (std::size_t n = 1; n <= 3; ++n) {
    auto w = weyl(n);
    const auto s = invariant_generators(w, 1, 1);
    const auto samples = default_gamma_samples(w->ring(), n, rng);
    EXPECT_TRUE(principal_check(s.expected_images, samples, group_generators(1, 1, n)).pass());
    const auto torus = catalog("torus_diffops", n).skew;
    EXPECT_TRUE(
        principal_check(skew_invariant_generators(torus), default_gamma_samples(torus->ring(), n, rng), group_generators(1, 1, n))
            .pass());
  }
  for (const auto& gc : kGroupCases) {
    auto w = weyl(gc.n, gc.m);
    const auto s = invariant_generators(w, gc.m, gc.p);
    const auto rep =
        principal_check(s.expected_images, default_gamma_samples(w->ring(), gc.n, rng), group_generators(gc.m, gc.p, gc.n));
    EXPECT_TRUE(rep.pass());
  }
}

TEST(DefaultGammaSamples, AreSymmetric) {
  Rng rng(2);
  auto w = weyl(3);
  const auto samples = default_gamma_samples(w->ring(), 3, rng);
  EXPECT_EQ(samples.size(), 6u);
  for (const auto& g : group_elements(1, 1, 3))
    for (const auto& f : samples) EXPECT_EQ(f.permute_variables(g.variable_permutation(3)), f);
}

TEST(RationalWitness, Examples) {
  auto w = weyl(2);
  const auto& ctx = w->skew_context();
  const auto s2 = group_elements(1, 1, 2);
  const SkewElement x = S(ctx, "1/(h1 - h2)", {1, 0}) - S(ctx, "1/(h1 - h2)", {0, 1});
  EXPECT_TRUE(rational_witness_check(x, dchi_sign_sn(w->ring(), 2), s2));
  EXPECT_FALSE(rational_witness_check(x, P(w, "1"), s2));
  EXPECT_TRUE(rational_witness_check(SkewElement::unit(ctx, {1, 0}) + SkewElement::unit(ctx, {0, 1}), P(w, "1"), s2));
  EXPECT_FALSE(rational_witness_check(S(ctx, "h1", {1, 0}), dchi_sign_sn(w->ring(), 2), s2));
}

TEST(DchiSign, Examples) {
  auto r2 = weyl(2)->ring();
  EXPECT_EQ(dchi_sign_sn(r2, 2), parse_poly("h1 - h2", r2));
  auto r3 = weyl(3)->ring();
  const Poly d3 = dchi_sign_sn(r3, 3);
  EXPECT_EQ(d3, parse_poly("(h1 - h2)*(h1 - h3)*(h2 - h3)", r3));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j)
      EXPECT_EQ(d3.permute_variables(ReflectionGroupElement::transposition(1, 3, i, j).variable_permutation(3)), -d3);
  EXPECT_THROW(dchi_sign_sn(r2, 1), std::invalid_argument);
}
