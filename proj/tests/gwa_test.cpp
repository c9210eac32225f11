#include <gtest/gtest.h>

#include "gwa/expr.hpp"
#include "gwa/gwa.hpp"
#include "gwa/random.hpp"

using namespace gwa;

namespace {

GWAPtr weyl(std::size_t n) {
  return catalog("weyl", n).gwa;
}

Poly P(const GWAPtr& p, const std::string& s) {
  return parse_poly(s, p->ring());
}

GWAElement D(const GWAPtr& p, const std::string& s) {
  return GWAElement::scalar(p, P(p, s));
}

GWAElement X(const GWAPtr& p, std::size_t i, int k = 1) {
  return GWAElement::X(p, i, k);
}

GWAElement Y(const GWAPtr& p, std::size_t i, int k = 1) {
  return GWAElement::Y(p, i, k);
}

// Catalog algebras used by the property tests, with the sizes the tests can afford.
std::vector<GWAPtr> property_algebras() {
  return {weyl(1), weyl(2), weyl(3), catalog("quantum_plane", 1).gwa, catalog("quantum_plane", 2).gwa,
          catalog("quantum_weyl", 1).gwa, catalog("quantum_weyl", 2).gwa};
}

}  // namespace

TEST(GwaValidate, Examples) {
  EXPECT_TRUE(weyl(1));
  EXPECT_EQ(catalog("quantum_plane", 1).gwa->sigma()[0].forward()[0].str(), "q*h1");

  auto r = make_ring(field_make(1), 2);
  Automorphism s1(r, {parse_poly("h1 - 1", r), parse_poly("h2 + 1", r)},
                  {parse_poly("h1 + 1", r), parse_poly("h2 - 1", r)});
  const std::vector<Poly> a{parse_poly("h1", r), parse_poly("h2", r)};
  const auto v = gwa_validate(r, a, {s1, shift_auto(r, 1)});
  EXPECT_EQ(v.kind, GWAValidation::Kind::moves_a);
  EXPECT_EQ(v.i, 1u);
  EXPECT_EQ(v.j, 2u);
  EXPECT_NE(v.witness.find("(i,j)=(1,2)"), std::string::npos);
  EXPECT_THROW(make_gwa(r, a, {s1, shift_auto(r, 1)}), std::invalid_argument);
}

TEST(GwaValidate, Rejections) {
  auto f = field_make(1, {"q"});
  auto r = make_ring(f, 1);
  const Scalar q = Scalar::parameter(f, "q");
  auto v = gwa_validate(r, {parse_poly("0", r)}, {shift_auto(r, 0)});
  EXPECT_EQ(v.kind, GWAValidation::Kind::zero_a);
  auto r2 = make_ring(f, 2);
  v = gwa_validate(r2, {parse_poly("h1", r2), parse_poly("h1", r2)}, {shift_auto(r2, 0), q_scale_auto(r2, 0, q)});
  EXPECT_EQ(v.kind, GWAValidation::Kind::not_commuting);
  EXPECT_EQ(v.i, 1u);
  EXPECT_EQ(v.j, 2u);
  v = gwa_validate(r, {parse_poly("h1", r)}, {});
  EXPECT_EQ(v.kind, GWAValidation::Kind::bad_shape);
}

TEST(GwaMul, Examples) {
  auto w = weyl(1);
  EXPECT_EQ(Y(w, 0) * X(w, 0), D(w, "h1"));
  EXPECT_EQ(X(w, 0) * Y(w, 0), D(w, "h1 - 1"));
  EXPECT_EQ(Y(w, 0, 2) * X(w, 0, 2), D(w, "h1*(h1 + 1)"));
  EXPECT_EQ(X(w, 0, 2) * Y(w, 0), GWAElement(w, P(w, "h1 - 2"), {1}));
  EXPECT_EQ(X(w, 0) * D(w, "h1"), GWAElement(w, P(w, "h1 - 1"), {1}));
  EXPECT_EQ(Y(w, 0) * D(w, "h1"), GWAElement(w, P(w, "h1 + 1"), {-1}));
  EXPECT_THROW(X(w, 0) * X(weyl(1), 0), std::invalid_argument);
}

TEST(GwaMul, QuantumExamples) {
  auto qp = catalog("quantum_plane", 1).gwa;
  EXPECT_EQ(Y(qp, 0, 2) * X(qp, 0, 2), D(qp, "h1^2/q"));
  auto qw = catalog("quantum_weyl", 1).gwa;
  // X Y = sigma(h) = (h - 1)/q.
  EXPECT_EQ(X(qw, 0) * Y(qw, 0), D(qw, "(h1 - 1)/q"));
  EXPECT_EQ(Y(qw, 0) * X(qw, 0), D(qw, "h1"));
}

TEST(GwaMul, DefiningRelationsOnRandomCoefficients) {
  Rng rng(5);
  RandomPolyOptions opt;
  opt.max_degree = 3;
  for (const auto& p : property_algebras()) {
    const std::size_t n = p->rank();
    for (int t = 0; t < 6; ++t) {
      const Poly d = random_poly(p->ring(), rng, opt);
      for (std::size_t i = 0; i < n; ++i) {
        const GWAElement dd = GWAElement::scalar(p, d);
        EXPECT_EQ(X(p, i) * dd, GWAElement::scalar(p, p->sigma()[i].apply(d)) * X(p, i));
        EXPECT_EQ(Y(p, i) * dd, GWAElement::scalar(p, p->sigma()[i].inverse().apply(d)) * Y(p, i));
        EXPECT_EQ(Y(p, i) * X(p, i), GWAElement::scalar(p, p->a()[i]));
        EXPECT_EQ(X(p, i) * Y(p, i), GWAElement::scalar(p, p->sigma()[i].apply(p->a()[i])));
        for (std::size_t j = 0; j < n; ++j) {
          if (i == j) continue;
          EXPECT_EQ(X(p, i) * X(p, j), X(p, j) * X(p, i));
          EXPECT_EQ(Y(p, i) * Y(p, j), Y(p, j) * Y(p, i));
          EXPECT_EQ(X(p, i) * Y(p, j), Y(p, j) * X(p, i));
        }
      }
    }
  }
}

TEST(GwaMul, RingAxioms) {
  Rng rng(9);
  RandomPolyOptions opt;
  opt.max_degree = 2;
  opt.max_terms = 2;
  for (const auto& p : property_algebras()) {
    for (int t = 0; t < 4; ++t) {
      const auto u = random_gwa(p, rng, opt, 3, 2);
      const auto v = random_gwa(p, rng, opt, 3, 2);
      const auto w = random_gwa(p, rng, opt, 3, 2);
      EXPECT_EQ((u * v) * w, u * (v * w));
      EXPECT_EQ(u * (v + w), u * v + u * w);
      EXPECT_EQ((u + v) * w, u * w + v * w);
      EXPECT_EQ(GWAElement::one(p) * u, u);
      EXPECT_EQ(u * GWAElement::one(p), u);
    }
  }
}

TEST(GwaMul, YmXmIsTwistedProduct) {
  for (const auto& p : property_algebras()) {
    for (std::size_t i = 0; i < p->rank(); ++i) {
      const Automorphism inv = p->sigma()[i].inverse();
      Poly expected = p->a()[i];
      Poly shifted = p->a()[i];
      for (int m = 1; m <= 4; ++m) {
        EXPECT_EQ(Y(p, i, m) * X(p, i, m), GWAElement::scalar(p, expected)) << p->name() << " m=" << m;
        EXPECT_EQ(p->twisted_product(i, m), expected);
        shifted = inv.apply(shifted);
        expected *= shifted;
      }
    }
  }
}

TEST(Rewriting, Examples) {
  auto w = weyl(1);
  const Word yx{WordToken::y(0), WordToken::x(0)};
  EXPECT_EQ(rewrite_word(w, yx), D(w, "h1"));
  const Word xhy{WordToken::x(0), WordToken::c(P(w, "h1")), WordToken::y(0)};
  EXPECT_EQ(rewrite_word(w, xhy), D(w, "(h1 - 1)^2"));
  auto w2 = weyl(2);
  const Word mixed{WordToken::x(1), WordToken::y(0), WordToken::c(P(w2, "h2"))};
  EXPECT_EQ(rewrite_word(w2, mixed), GWAElement(w2, P(w2, "h2 - 1"), {-1, 1}));
}

TEST(Rewriting, RandomStrategiesAgreeWithProduct) {
  Rng gen(31);
  RandomPolyOptions opt;
  opt.max_degree = 2;
  opt.max_terms = 2;
  for (const auto& p : property_algebras()) {
    const std::size_t n = p->rank();
    std::uniform_int_distribution<int> kind(0, 4), len(2, 7);
    std::uniform_int_distribution<std::size_t> which(0, n - 1);
    for (int t = 0; t < 6; ++t) {
      Word w;
      GWAElement product = GWAElement::one(p);
      const int L = len(gen);
      for (int k = 0; k < L; ++k) {
        const int c = kind(gen);
        const std::size_t i = which(gen);
        if (c < 2) {
          w.push_back(WordToken::x(i));
          product = product * X(p, i);
        } else if (c < 4) {
          w.push_back(WordToken::y(i));
          product = product * Y(p, i);
        } else {
          const Poly d = random_poly(p->ring(), gen, opt);
          w.push_back(WordToken::c(d));
          product = product * GWAElement::scalar(p, d);
        }
      }
      const GWAElement left = rewrite_word(p, w);
      std::mt19937_64 s1(t), s2(1000 + t);
      EXPECT_EQ(rewrite_word(p, w, &s1), left);
      EXPECT_EQ(rewrite_word(p, w, &s2), left);
      EXPECT_EQ(product, left);
    }
  }
}

TEST(GwaTensor, Examples) {
  const auto ww = gwa_tensor(weyl(1), weyl(1));
  const auto w2 = weyl(2);
  ASSERT_EQ(ww->rank(), 2u);
  EXPECT_EQ(ww->ring()->variables(), w2->ring()->variables());
  for (std::size_t i = 0; i < 2; ++i) {
    EXPECT_EQ(ww->a()[i], w2->a()[i]);
    EXPECT_EQ(ww->sigma()[i], w2->sigma()[i]);
  }
  const auto triv = gwa_tensor(w2, gwa_trivial(w2->ring()->field()));
  EXPECT_EQ(triv->rank(), 2u);
  EXPECT_EQ(triv->a(), w2->a());
  EXPECT_EQ(triv->sigma(), w2->sigma());
  EXPECT_EQ(triv->ring()->variables(), w2->ring()->variables());

  const auto qw = catalog("quantum_weyl", 1).gwa;
  const auto qw2 = gwa_tensor(qw, qw);
  const auto An = catalog("quantum_weyl", 2).gwa;
  EXPECT_EQ(qw2->a(), An->a());
  EXPECT_EQ(qw2->sigma(), An->sigma());
  EXPECT_THROW(gwa_tensor(weyl(1), qw), std::invalid_argument);
}

TEST(GwaTensor, FactorsCommute) {
  const auto ww = gwa_tensor(weyl(1), weyl(1));
  EXPECT_EQ(X(ww, 0) * Y(ww, 1), Y(ww, 1) * X(ww, 0));
  EXPECT_EQ(Y(ww, 1) * X(ww, 1), D(ww, "h2"));
}

TEST(GwaEmbed, Examples) {
  auto w = weyl(1);
  const auto& ctx = w->skew_context();
  EXPECT_EQ(gwa_embed(X(w, 0)), SkewElement::unit(ctx, {1}));
  EXPECT_EQ(gwa_embed(Y(w, 0)), SkewElement(ctx, parse_rational("h1", w->ring()), {-1}));
  EXPECT_EQ(gwa_embed(D(w, "h1^2 + 1")), SkewElement(ctx, parse_rational("h1^2 + 1", w->ring()), {0}));
  EXPECT_EQ(gwa_embed(Y(w, 0, 2)), SkewElement(ctx, parse_rational("h1*(h1 + 1)", w->ring()), {-2}));
}

TEST(GwaEmbed, HomomorphismOnRandomPairs) {
  Rng rng(41);
  RandomPolyOptions opt;
  opt.max_degree = 3;
  opt.max_terms = 2;
  for (const auto& p : property_algebras()) {
    for (int t = 0; t < 10; ++t) {
      const auto u = random_gwa(p, rng, opt, 2, 2);
      const auto v = random_gwa(p, rng, opt, 2, 2);
      EXPECT_EQ(gwa_embed(u * v), gwa_embed(u) * gwa_embed(v)) << p->name();
      if (!u.is_zero()) EXPECT_EQ(support(gwa_embed(u)).size(), u.terms().size());
    }
  }
}

TEST(GwaEmbed, NeedsIndependence) {
  auto r = make_ring(field_make(1), 3);
  const auto nag = make_gwa(r, {parse_poly("h3", r)}, {nagata_auto(r, 0)}, "nagata");
  EXPECT_EQ(nag->independence(), Membership::inconclusive);
  EXPECT_THROW(gwa_embed(GWAElement::X(nag, 0)), std::invalid_argument);
  const auto asserted = make_gwa(r, {parse_poly("h3", r)}, {nagata_auto(r, 0)}, "nagata", true);
  EXPECT_EQ(gwa_embed(GWAElement::Y(asserted, 0)),
            SkewElement(asserted->skew_context(), parse_rational("h3", r), {-1}));
}

TEST(SigmaIndependence, Examples) {
  EXPECT_EQ(weyl(3)->independence(), Membership::yes);
  EXPECT_EQ(catalog("quantum_plane", 2).gwa->independence(), Membership::yes);
  EXPECT_EQ(catalog("quantum_weyl", 2).gwa->independence(), Membership::yes);
  auto r = make_ring(field_make(1), 1);
  EXPECT_EQ(sigma_independence({shift_auto(r, 0), shift_auto(r, 0, Scalar(r->field(), 2L))}), Membership::no);
  EXPECT_EQ(sigma_independence({}), Membership::yes);
}

TEST(Catalog, Examples) {
  EXPECT_EQ(catalog_names(), (std::vector<std::string>{"weyl", "quantum_plane", "quantum_weyl", "torus_diffops"}));
  const auto w2 = weyl(2);
  EXPECT_EQ(w2->rank(), 2u);
  EXPECT_EQ(w2->sigma()[0].str(), "h1 -> h1 - 1, h2 -> h2");
  const auto qw = catalog("quantum_weyl", 1).gwa;
  EXPECT_EQ(qw->sigma()[0].forward()[0], parse_poly("(h1 - 1)/q", qw->ring()));
  const auto torus = catalog("torus_diffops", 2);
  EXPECT_FALSE(torus.gwa);
  EXPECT_EQ(torus.skew->ring()->variables(), (std::vector<std::string>{"t1", "t2"}));
  EXPECT_EQ(torus.skew->sigma()[1].str(), "t1 -> t1, t2 -> t2 - 1");
  EXPECT_THROW(catalog("sl2", 1), std::invalid_argument);
  EXPECT_THROW(catalog("weyl", 0), std::invalid_argument);
}

TEST(GwaText, Format) {
  auto w = weyl(2);
  const GWAElement u = GWAElement(w, P(w, "h1 - 1"), {2, -1}) + X(w, 1) + D(w, "h1");
  EXPECT_EQ(u.str(), "(h1 - 1)*X1^2*Y2 + X2 + h1");
  EXPECT_EQ(GWAElement(w).str(), "0");
  EXPECT_EQ(word_str({0, -3}), "Y2^3");
}
