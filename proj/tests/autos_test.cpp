#include <gtest/gtest.h>

#include <functional>
#include <set>

#include "gwa/automorphism.hpp"
#include "gwa/expr.hpp"
#include "gwa/random.hpp"
#include "gwa/reflection_group.hpp"

using namespace gwa;

namespace {

Poly P(const std::string& s, const RingPtr& r) { return parse_poly(s, r); }

std::vector<Scalar> point(const FieldPtr& f, std::initializer_list<long> xs) {
  std::vector<Scalar> p;
  for (long x : xs) p.emplace_back(f, x);
  return p;
}

std::vector<Automorphism> shifts(const RingPtr& r) {
  std::vector<Automorphism> v;
  for (std::size_t i = 0; i < r->nvars(); ++i) v.push_back(shift_auto(r, i));
  return v;
}

Automorphism random_word(const std::vector<Automorphism>& gens, Rng& rng, int len) {
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  std::uniform_int_distribution<int> sign(0, 1);
  Automorphism out = Automorphism::identity(gens[0].ring());
  for (int i = 0; i < len; ++i) out = out * (sign(rng) ? gens[pick(rng)] : gens[pick(rng)].inverse());
  return out;
}

}  // namespace

TEST(AutoApply, Examples) {
  auto f = field_make(1, {"q"});
  auto r1 = make_ring(f, 1);
  auto s = shift_auto(r1, 0);
  EXPECT_EQ(s.apply(P("h1^2", r1)), P("(h1 - 1)^2", r1));
  EXPECT_EQ(Automorphism::identity(r1).apply(P("h1^3 + q", r1)), P("h1^3 + q", r1));
  const Scalar q = Scalar::parameter(f, "q");
  auto qw = q_weyl_auto(r1, 0, q);
  EXPECT_EQ(auto_apply(qw, RationalFunction(P("h1", r1))), parse_rational("(h1 - 1)/q", r1));
  EXPECT_EQ(q_scale_auto(r1, 0, q).apply(P("h1^2", r1)), P("q^2*h1^2", r1));
}

TEST(AutoApply, RoundTripAndHomomorphism) {
  auto f = field_make(3, {"q"});
  Rng rng(11);
  RandomPolyOptions opt;
  opt.max_degree = 2;
  opt.max_terms = 3;
  for (std::size_t n : {1u, 2u, 3u}) {
    auto r = make_ring(f, n);
    std::vector<Automorphism> gens;
    for (std::size_t i = 0; i < n; ++i) gens.push_back(i % 2 ? q_weyl_auto(r, i, Scalar::parameter(f, "q")) : shift_auto(r, i));
    for (int t = 0; t < 20; ++t) {
      const Automorphism phi = random_word(gens, rng, 2);
      const auto a = random_rational(r, rng, opt), b = random_rational(r, rng, opt);
      EXPECT_EQ(phi.apply(phi.inverse().apply(a)), a);
      EXPECT_EQ(phi.apply(a * b), phi.apply(a) * phi.apply(b));
      EXPECT_EQ(phi.apply(a + b), phi.apply(a) + phi.apply(b));
    }
  }
}

TEST(AutoApply, LaurentViolation) {
  auto f = field_make(1, {"q"});
  auto lr = make_ring(f, 1, true);
  EXPECT_THROW(shift_auto(lr, 0), std::domain_error);
  EXPECT_THROW(q_weyl_auto(lr, 0, Scalar::parameter(f, "q")), std::domain_error);
  auto sc = q_scale_auto(lr, 0, Scalar::parameter(f, "q"));
  EXPECT_EQ(sc.apply(P("h1^-2", lr)), P("q^-2*h1^-2", lr));
}

TEST(AutoApply, RejectsWrongInverse) {
  auto r = make_ring(field_make(1, {}), 2);
  std::vector<Poly> fwd{P("h1 - 1", r), P("h2", r)}, bad{P("h1 - 1", r), P("h2", r)};
  EXPECT_THROW(Automorphism(r, fwd, bad), std::invalid_argument);
  std::vector<Poly> nonlinear{P("h1 + h2^2", r), P("h2", r)}, inv{P("h1 - h2^2", r), P("h2", r)};
  EXPECT_NO_THROW(Automorphism(r, nonlinear, inv));
}

TEST(AutoApply, NagataPassesConstructorCheck) {
  auto r = make_ring(field_make(1, {}), 3);
  const Automorphism nag = nagata_auto(r, 0);
  const Poly delta = P("h1*h3 + h2^2", r);
  EXPECT_EQ(nag.apply(delta), delta);
  EXPECT_EQ(nag.apply(nag.inverse().apply(P("h1*h2 + h3^2", r))), P("h1*h2 + h3^2", r));
  EXPECT_FALSE(nag.pow(2).is_identity());
  // Nagata on the second of two variable blocks.
  auto r6 = make_ring(field_make(1, {}), 6);
  EXPECT_EQ(nagata_auto(r6, 3).apply(P("h1 + h6", r6)), P("h1 + h6", r6));
}

TEST(LatticeToAuto, Examples) {
  auto f = field_make(1, {"q"});
  auto r2 = make_ring(f, 2);
  auto g = shifts(r2);
  const Automorphism s = lattice_to_auto({1, 0}, g);
  EXPECT_EQ(s.forward()[0], P("h1 - 1", r2));
  EXPECT_EQ(s.forward()[1], P("h2", r2));
  EXPECT_TRUE(lattice_to_auto({0, 0}, g).is_identity());
  auto r1 = make_ring(f, 1);
  std::vector<Automorphism> qs{q_scale_auto(r1, 0, Scalar::parameter(f, "q"))};
  EXPECT_EQ(lattice_to_auto({2}, qs).forward()[0], P("q^2*h1", r1));
  EXPECT_EQ(lattice_to_auto({-1}, qs).forward()[0], P("h1/q", r1));
}

TEST(LatticeToAuto, HomomorphismAndNonCommuting) {
  auto f = field_make(1, {"q"});
  auto r = make_ring(f, 2);
  std::vector<Automorphism> g{shift_auto(r, 0), q_weyl_auto(r, 1, Scalar::parameter(f, "q"))};
  Rng rng(3);
  std::uniform_int_distribution<int> c(-3, 3);
  for (int t = 0; t < 20; ++t) {
    LatticeElement a{c(rng), c(rng)}, b{c(rng), c(rng)};
    EXPECT_EQ(lattice_to_auto(lattice_add(a, b), g), lattice_to_auto(a, g) * lattice_to_auto(b, g));
  }
  std::vector<Automorphism> bad{shift_auto(r, 0), q_scale_auto(r, 0, Scalar::parameter(f, "q"))};
  EXPECT_THROW(lattice_to_auto({1, 1}, bad), std::invalid_argument);
}

TEST(ActOnPoint, Examples) {
  auto f = field_make(1, {"q"});
  auto r2 = make_ring(f, 2);
  auto p = point(f, {3, 5});
  EXPECT_EQ(act_on_point(shift_auto(r2, 0), p), point(f, {4, 5}));
  EXPECT_EQ(act_on_point(Automorphism::identity(r2), p), p);
  auto r1 = make_ring(f, 1);
  const Scalar q = Scalar::parameter(f, "q");
  const Scalar p1(f, Rational(2, 7));
  std::vector<Scalar> pt{p1};
  EXPECT_EQ(act_on_point(q_weyl_auto(r1, 0, q), pt), std::vector<Scalar>{Scalar(f, 1L) + q * p1});
  EXPECT_EQ(act_on_point(q_scale_auto(r1, 0, q), pt), std::vector<Scalar>{p1 / q});
}

TEST(ActOnPoint, GroupActionAndDaggerIdentity) {
  auto f = field_make(3, {"q"});
  Rng rng(5);
  std::uniform_int_distribution<long> c(-6, 6);
  for (std::size_t n : {1u, 2u, 3u}) {
    auto r = make_ring(f, n);
    std::vector<Automorphism> gens;
    const Scalar q = Scalar::parameter(f, "q");
    for (std::size_t i = 0; i < n; ++i) gens.push_back(i == 1 ? q_weyl_auto(r, i, q) : shift_auto(r, i));
    if (n == 3) gens.push_back(nagata_auto(r, 0));
    for (int t = 0; t < 15; ++t) {
      const Automorphism phi = random_word(gens, rng, 2), psi = random_word(gens, rng, 2);
      std::vector<Scalar> p;
      for (std::size_t i = 0; i < n; ++i) p.emplace_back(f, Rational(c(rng), 3));
      EXPECT_EQ(act_on_point(phi * psi, p), act_on_point(phi, act_on_point(psi, p)));
      const Poly a = random_poly(r, rng);
      EXPECT_EQ(poly_eval(phi.apply(a), p), poly_eval(a, act_on_point(phi.inverse(), p)));
    }
  }
}

TEST(ReflectionGroup, Examples) {
  EXPECT_EQ(group_elements(1, 1, 3).size(), 6u);
  const auto g222 = group_elements(2, 2, 2);
  ASSERT_EQ(g222.size(), 4u);
  std::set<std::vector<int>> diags;
  for (const auto& g : g222) diags.insert(g.diag());
  EXPECT_EQ(diags, (std::set<std::vector<int>>{{0, 0}, {1, 1}}));
  EXPECT_EQ(group_elements(2, 1, 2).size(), 8u);
  EXPECT_THROW(group_elements(4, 3, 2), std::invalid_argument);
  EXPECT_THROW(group_elements(6, 1, 6, 1000), std::length_error);
}

TEST(ReflectionGroup, OrderFormulaAndGeneratorClosure) {
  for (int m = 1; m <= 4; ++m)
    for (int p = 1; p <= m; ++p) {
      if (m % p) continue;
      for (std::size_t n = 1; n <= 3; ++n) {
        const auto all = group_elements(m, p, n);
        std::size_t expect = 1;
        for (std::size_t i = 1; i <= n; ++i) expect *= m * i;
        EXPECT_EQ(all.size(), expect / p) << m << "," << p << "," << n;
        for (const auto& g : all) EXPECT_TRUE(in_gmpn(g, p));
        // The generators produce exactly the enumerated group.
        const auto gens = group_generators(m, p, n);
        std::set<ReflectionGroupElement> closure{ReflectionGroupElement::identity(m, n)};
        std::vector<ReflectionGroupElement> frontier(closure.begin(), closure.end());
        while (!frontier.empty()) {
          std::vector<ReflectionGroupElement> next;
          for (const auto& x : frontier)
            for (const auto& s : gens)
              if (closure.insert(s * x).second) next.push_back(s * x);
          frontier = std::move(next);
        }
        EXPECT_EQ(closure, std::set<ReflectionGroupElement>(all.begin(), all.end())) << m << "," << p << "," << n;
      }
    }
}

TEST(ReflectionGroup, CompositionMatchesMatrixAction) {
  // Oracle: act on the standard basis with xi-exponent bookkeeping.
  auto apply = [](const ReflectionGroupElement& g, std::pair<int, std::size_t> v) {
    const std::size_t j = g.perm()[v.second];
    return std::make_pair((v.first + g.diag()[j]) % g.m(), j);
  };
  const auto all = group_elements(3, 1, 3);
  Rng rng(9);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  for (int t = 0; t < 200; ++t) {
    const auto& g = all[pick(rng)];
    const auto& h = all[pick(rng)];
    for (std::size_t i = 0; i < 3; ++i) {
      EXPECT_EQ(apply(g * h, {0, i}), apply(g, apply(h, {0, i})));
      EXPECT_EQ(apply(g.inverse(), apply(g, {0, i})), std::make_pair(0, i));
    }
  }
}

TEST(ReflectionGroup, SignAndVariablePermutation) {
  EXPECT_EQ(ReflectionGroupElement::transposition(1, 3, 0, 2).sign(), -1);
  EXPECT_EQ(ReflectionGroupElement::identity(1, 3).sign(), 1);
  const auto t = ReflectionGroupElement::transposition(1, 2, 0, 1);
  EXPECT_EQ(t.variable_permutation(6), (std::vector<std::size_t>{3, 4, 5, 0, 1, 2}));
  EXPECT_EQ(t.act_on_lattice({1, 0}), (LatticeElement{0, 1}));
}

TEST(RootOfUnity, Primitive) {
  auto f = field_make(12, {});
  for (int m : {1, 2, 3, 4, 6, 12}) {
    const Scalar xi = root_of_unity(f, m);
    EXPECT_TRUE(xi.pow(m).is_one());
    for (int k = 1; k < m; ++k) EXPECT_FALSE(xi.pow(k).is_one());
  }
  EXPECT_THROW(root_of_unity(f, 5), std::invalid_argument);
  EXPECT_EQ(root_of_unity(field_make(1, {}), 2), Scalar(field_make(1, {}), -1L));
}

TEST(Membership, Examples) {
  LatticeSubmonoidSpec g{2, {{2, 0}, {0, 2}, {1, 1}}, LatticeSubmonoidSpec::Mode::group, 16};
  EXPECT_EQ(membership(g, {1, 0}).status, Membership::no);
  for (const auto& gen : g.generators) EXPECT_EQ(membership(g, gen).status, Membership::yes);
  auto m = g;
  m.mode = LatticeSubmonoidSpec::Mode::monoid;
  const auto r = membership(m, {3, 1});
  ASSERT_EQ(r.status, Membership::yes);
  EXPECT_EQ(r.certificate, (std::vector<long>{1, 0, 1}));
  EXPECT_EQ(membership(m, {-1, -1}).status, Membership::no);
  EXPECT_EQ(membership(m, {1, 0}).status, Membership::no);
  EXPECT_EQ(membership(m, {0, 0}).status, Membership::yes);
}

TEST(Membership, MonoidInconclusiveOnBoundExhaustion) {
  LatticeSubmonoidSpec m{1, {{1}, {-1}}, LatticeSubmonoidSpec::Mode::monoid, 3};
  EXPECT_EQ(membership(m, {3}).status, Membership::yes);
  EXPECT_EQ(membership(m, {5}).status, Membership::inconclusive);
  LatticeSubmonoidSpec pos{2, {{1, 0}, {0, 1}}, LatticeSubmonoidSpec::Mode::monoid, 3};
  EXPECT_EQ(membership(pos, {2, 2}).status, Membership::inconclusive);
  pos.bound = 4;
  EXPECT_EQ(membership(pos, {2, 2}).status, Membership::yes);
  EXPECT_EQ(membership(pos, {5, -1}).status, Membership::no);
}

TEST(Membership, GroupModeAgreesWithBruteForce) {
  Rng rng(21);
  std::uniform_int_distribution<int> c(-3, 3);
  std::uniform_int_distribution<int> ng(1, 3);
  for (std::size_t dim : {2u, 3u}) {
    for (int t = 0; t < 30; ++t) {
      LatticeSubmonoidSpec spec{dim, {}, LatticeSubmonoidSpec::Mode::group, 16};
      const int k = ng(rng);
      for (int i = 0; i < k; ++i) {
        LatticeElement v(dim);
        for (auto& x : v) x = c(rng);
        spec.generators.push_back(v);
      }
      // Brute force: all combinations with coefficients in [-4, 4].
      std::set<LatticeElement> reach;
      std::vector<int> coef(k, -4);
      for (;;) {
        LatticeElement v(dim, 0);
        for (int i = 0; i < k; ++i)
          for (std::size_t j = 0; j < dim; ++j) v[j] += coef[i] * spec.generators[i][j];
        reach.insert(v);
        int i = 0;
        while (i < k && coef[i] == 4) coef[i++] = -4;
        if (i == k) break;
        ++coef[i];
      }
      for (int s = 0; s < 20; ++s) {
        LatticeElement v(dim);
        for (auto& x : v) x = c(rng);
        const auto r = membership(spec, v);
        if (reach.count(v)) EXPECT_EQ(r.status, Membership::yes);
        if (r.status == Membership::yes) {
          LatticeElement back(dim, 0);
          for (int i = 0; i < k; ++i)
            for (std::size_t j = 0; j < dim; ++j) back[j] += r.certificate[i] * spec.generators[i][j];
          EXPECT_EQ(back, v);
        }
      }
    }
  }
}

TEST(Membership, Rank) {
  EXPECT_EQ(lattice_rank({{1, 2}, {2, 4}}, 2), 1u);
  EXPECT_EQ(lattice_rank({{1, 0}, {0, 1}, {1, 1}}, 2), 2u);
  EXPECT_EQ(lattice_rank({}, 3), 0u);
}
