#include <gtest/gtest.h>

#include <functional>
#include <map>

#include "gwa/expr.hpp"
#include "gwa/random.hpp"

using namespace gwa;

namespace {

RationalFunction rf(const std::string& s, const RingPtr& r) { return parse_rational(s, r); }
Poly P(const std::string& s, const RingPtr& r) { return parse_poly(s, r); }

// Independent divisibility oracle: solve d*q = f for the coefficients of q by Gaussian
// elimination over Q, q ranging over all monomials of degree <= deg f - deg d.
bool divisible_by_linear_solve(const Poly& d, const Poly& f) {
  const std::size_t n = f.ring()->nvars();
  const int qdeg = f.total_degree() - d.total_degree();
  if (f.is_zero()) return true;
  if (qdeg < 0) return false;
  std::vector<Exponents> qmons;
  std::function<void(std::size_t, int, Exponents&)> gen = [&](std::size_t i, int left, Exponents& e) {
    if (i == n) {
      qmons.push_back(e);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      e[i] = k;
      gen(i + 1, left - k, e);
    }
    e[i] = 0;
  };
  Exponents e(n, 0);
  gen(0, qdeg, e);
  std::map<Exponents, std::size_t> rows;
  auto row_of = [&](const Exponents& m) {
    auto [it, inserted] = rows.emplace(m, rows.size());
    return it->second;
  };
  std::vector<std::map<std::size_t, Rational>> eqs;
  auto ensure = [&](std::size_t r) {
    if (eqs.size() <= r) eqs.resize(r + 1);
  };
  for (std::size_t j = 0; j < qmons.size(); ++j) {
    for (const auto& [de, dc] : d.terms().terms()) {
      Exponents m(n);
      for (std::size_t i = 0; i < n; ++i) m[i] = de[i] + qmons[j][i];
      const std::size_t r = row_of(m);
      ensure(r);
      eqs[r][j] += dc.rational_value();
    }
  }
  std::vector<Rational> rhs;
  for (const auto& [fe, fc] : f.terms().terms()) {
    const std::size_t r = row_of(fe);
    ensure(r);
  }
  rhs.assign(eqs.size(), Rational(0));
  for (const auto& [fe, fc] : f.terms().terms()) rhs[rows[fe]] = fc.rational_value();
  // Dense elimination.
  const std::size_t cols = qmons.size();
  std::vector<std::vector<Rational>> a(eqs.size(), std::vector<Rational>(cols + 1, Rational(0)));
  for (std::size_t r = 0; r < eqs.size(); ++r) {
    for (const auto& [c, v] : eqs[r]) a[r][c] = v;
    a[r][cols] = rhs[r];
  }
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < cols && pivot_row < a.size(); ++c) {
    std::size_t p = pivot_row;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[pivot_row]);
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == pivot_row || a[r][c] == 0) continue;
      Rational factor = a[r][c] / a[pivot_row][c];
      for (std::size_t k = c; k <= cols; ++k) a[r][k] -= factor * a[pivot_row][k];
    }
    ++pivot_row;
  }
  for (std::size_t r = pivot_row; r < a.size(); ++r)
    if (a[r][cols] != 0) return false;
  return true;
}

}  // namespace

TEST(FieldMake, RationalBaseCase) {
  auto f = field_make(1, {});
  EXPECT_EQ(f->cyclotomic_order(), 1);
  EXPECT_EQ(f->nparams(), 0u);
  EXPECT_TRUE(Scalar::zeta(f).is_one());
}

TEST(FieldMake, FourthRootsOfUnity) {
  auto f = field_make(4, {});
  Scalar z = Scalar::zeta(f);
  EXPECT_EQ(z.pow(2), Scalar(f, -1L));
  EXPECT_TRUE(z.pow(4).is_one());
  EXPECT_FALSE(z.pow(2).is_one());
}

TEST(FieldMake, SignRootWithParameter) {
  auto f = field_make(2, {"q"});
  EXPECT_EQ(Scalar::zeta(f), Scalar(f, -1L));
  Scalar q = Scalar::parameter(f, "q");
  EXPECT_FALSE(q.is_rational());
  EXPECT_EQ((q * q.inverse()), Scalar(f, 1L));
}

TEST(FieldMake, RejectsDuplicateAndReservedNames) {
  EXPECT_THROW(field_make(1, {"q", "q"}), std::invalid_argument);
  EXPECT_THROW(field_make(1, {"zeta"}), std::invalid_argument);
  EXPECT_THROW(field_make(1, {"h1"}), std::invalid_argument);
  EXPECT_THROW(field_make(0, {}), std::invalid_argument);
}

TEST(Cyclotomic, PrimitiveRootProperty) {
  for (int m = 1; m <= 12; ++m) {
    auto f = field_make(m, {});
    Scalar z = Scalar::zeta(f);
    EXPECT_TRUE(z.pow(m).is_one()) << m;
    for (int k = 1; k < m; ++k) EXPECT_FALSE(z.pow(k).is_one()) << m << " " << k;
  }
}

TEST(Cyclotomic, InverseAndPolynomials) {
  EXPECT_EQ(cyclotomic_polynomial(6), (std::vector<Rational>{1, -1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(12), (std::vector<Rational>{1, 0, -1, 0, 1}));
  auto f = field_make(5, {});
  Scalar x = Scalar::zeta(f) + Scalar(f, 2L);
  EXPECT_TRUE((x * x.inverse()).is_one());
}

TEST(RatfunArith, Examples) {
  auto r = make_ring(field_make(1), 2);
  EXPECT_EQ(ratfun_arith(rf("h1", r), rf("1/h1", r), ArithOp::mul), rf("1", r));
  RationalFunction prod = ratfun_arith(rf("h1 - 1", r), rf("h1 + 1", r), ArithOp::mul);
  EXPECT_EQ(prod.num(), P("h1^2 - 1", r));
  EXPECT_TRUE(prod.den().constant_value().is_one());
  EXPECT_TRUE(ratfun_arith(rf("1/(h1 - h2)", r), rf("1/(h2 - h1)", r), ArithOp::add).is_zero());
  EXPECT_THROW(ratfun_arith(rf("h1", r), rf("0", r), ArithOp::div), std::domain_error);
}

TEST(RatfunArith, CrossMultiplicationEquality) {
  auto r = make_ring(field_make(1), 2);
  RationalFunction a(P("h1^2 - h2^2", r), P("h1 - h2", r));
  EXPECT_EQ(a, rf("h1 + h2", r));
  RationalFunction b(P("(h1 + 1)*(h2 + 2)", r), P("(h2 + 2)*(h1 - h2 + 3)", r));
  EXPECT_EQ(b, rf("(h1 + 1)/(h1 - h2 + 3)", r));
}

TEST(RatfunArith, FieldAxiomsOnRandomTriples) {
  Rng rng(7);
  RandomPolyOptions opt;
  opt.max_degree = 4;
  opt.max_terms = 3;
  for (std::size_t n : {1u, 2u, 3u}) {
    auto r = make_ring(field_make(3, {"q"}), n);
    for (int i = 0; i < 12; ++i) {
      auto a = random_rational(r, rng, opt), b = random_rational(r, rng, opt), c = random_rational(r, rng, opt);
      EXPECT_EQ((a + b) + c, a + (b + c));
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ(a + b, b + a);
      EXPECT_EQ(a * b, b * a);
      if (!a.is_zero()) EXPECT_TRUE((a * a.inverse()).is_one());
      EXPECT_TRUE((a - a).is_zero());
    }
  }
}

TEST(PolyEval, Examples) {
  auto f = field_make(1);
  auto r = make_ring(f, 2);
  std::vector<Scalar> pt{Scalar(f, 2L), Scalar(f, 3L)};
  EXPECT_EQ(poly_eval(P("h1*h2", r), pt), Scalar(f, 6L));
  EXPECT_EQ(poly_eval(P("1", r), pt), Scalar(f, 1L));
  EXPECT_TRUE(poly_eval(P("h1 - 2", r), pt).is_zero());
}

TEST(PolyEval, LaurentZeroCoordinate) {
  auto f = field_make(1);
  auto r = make_ring(f, 1, true);
  std::vector<Scalar> zero{Scalar(f, 0L)};
  EXPECT_THROW(poly_eval(P("h1^-1 + 1", r), zero), std::domain_error);
  std::vector<Scalar> two{Scalar(f, 2L)};
  EXPECT_EQ(poly_eval(P("h1^-1 + 1", r), two), parse_scalar("3/2", f));
}

TEST(PolyEval, HomomorphismOnRandomPairs) {
  Rng rng(11);
  auto f = field_make(4, {"q"});
  auto r = make_ring(f, 3);
  for (int i = 0; i < 40; ++i) {
    Poly a = random_poly(r, rng), b = random_poly(r, rng);
    std::vector<Scalar> pt{random_scalar(f, rng), random_scalar(f, rng), random_scalar(f, rng)};
    EXPECT_EQ(poly_eval(a * b, pt), poly_eval(a, pt) * poly_eval(b, pt));
    EXPECT_EQ(poly_eval(a + b, pt), poly_eval(a, pt) + poly_eval(b, pt));
  }
}

TEST(PolyDivides, Examples) {
  auto r = make_ring(field_make(1), 2);
  auto q = poly_divides(P("h1 - h2", r), P("h1^2 - h2^2", r));
  ASSERT_TRUE(q.has_value());
  EXPECT_EQ(*q, P("h1 + h2", r));
  EXPECT_FALSE(poly_divides(P("h1", r), P("h2", r)).has_value());
  Poly f = P("3*h1^2*h2 - h2 + 7", r);
  EXPECT_EQ(*poly_divides(P("1", r), f), f);
  EXPECT_THROW(poly_divides(P("0", r), f), std::domain_error);
}

TEST(PolyDivides, LaurentUnitsDivideEverything) {
  auto r = make_ring(field_make(1), 2, true);
  auto q = poly_divides(P("h1^2*h2", r), P("h1 + h2", r));
  ASSERT_TRUE(q.has_value());
  EXPECT_EQ(*q, P("h1^-1*h2^-1 + h1^-2", r));
  EXPECT_FALSE(poly_divides(P("h1 + 1", r), P("h1^-1", r)).has_value());
}

TEST(PolyDivides, AgreesWithLinearSolveOracle) {
  Rng rng(3);
  auto r = make_ring(field_make(1), 2);
  RandomPolyOptions opt;
  opt.max_degree = 2;
  opt.max_terms = 3;
  opt.coeff_bound = 3;
  int divisible = 0;
  for (int i = 0; i < 150; ++i) {
    Poly d = random_poly(r, rng, opt);
    if (d.is_zero()) continue;
    // Half the cases are constructed multiples.
    Poly f = (i % 2 == 0) ? d * random_poly(r, rng, opt) : random_poly(r, rng, opt);
    auto q = poly_divides(d, f);
    EXPECT_EQ(q.has_value(), divisible_by_linear_solve(d, f)) << d.str() << " | " << f.str();
    if (q) {
      EXPECT_EQ(d * *q, f);
      ++divisible;
    }
  }
  EXPECT_GT(divisible, 50);
}

TEST(CanonicalText, Examples) {
  auto f = field_make(3, {"q"});
  auto r = make_ring(f, 2);
  EXPECT_EQ(rf("(h1^2 - h2)/(h1 - 1)", r).str(), "(h1^2 - h2)/(h1 - 1)");
  EXPECT_EQ(rf("h2 + h1^2 + 1 - h1", r).str(), "h1^2 - h1 + h2 + 1");
  EXPECT_EQ(rf("q^-1*(h1 - 1)", r).str(), "(1/q)*h1 + (-1/q)");
  EXPECT_EQ(rf("zeta^3", r).str(), "1");
  EXPECT_EQ(rf("(zeta + 1)*h1", r).str(), "(zeta + 1)*h1");
  EXPECT_EQ(parse_scalar("(q^2 - 1)/(q + 1)", f).str(), "q - 1");
}

TEST(CanonicalText, ParseErrorsCarryColumn) {
  auto r = make_ring(field_make(1), 2);
  try {
    parse_rational("h1 + h9", r);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.column(), 5u);
  }
  EXPECT_THROW(parse_rational("h1 +", r), ParseError);
  EXPECT_THROW(parse_rational("(h1", r), ParseError);
  EXPECT_THROW(parse_rational("h1/0", r), ParseError);
  EXPECT_THROW(parse_rational("zeta", r), ParseError);
  EXPECT_THROW(parse_poly("1/h1", r), ParseError);
}

TEST(CanonicalText, RoundTripOnRandomElements) {
  Rng rng(5);
  for (bool laurent : {false, true}) {
    auto r = make_ring(field_make(5, {"q"}), 3, laurent);
    for (int i = 0; i < 60; ++i) {
      RationalFunction x = random_rational(r, rng);
      const std::string s = x.str();
      RationalFunction y = parse_rational(s, r);
      EXPECT_EQ(x, y) << s;
      EXPECT_EQ(y.str(), s);
    }
  }
}
