#include <gtest/gtest.h>

#include <random>

#include "gridnull/grids.hpp"
#include "gridnull/poly.hpp"

using namespace gridnull;

namespace {

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return Errc::SyntaxError;
}

UniPoly uni(const FieldCtx& f, std::vector<long long> c) {
  std::vector<FieldElement> v;
  for (auto x : c) v.push_back(f.from_int(x));
  return UniPoly(f, v);
}

Point pt(const FieldCtx& f, std::vector<long long> xs) {
  Point a;
  for (auto x : xs) a.push_back(f.from_int(x));
  return a;
}

MultiPoly random_multi(std::mt19937_64& rng, const FieldCtx& f, std::size_t n, unsigned max_exp) {
  MultiPoly out(f, n);
  std::uniform_int_distribution<unsigned> e(0, max_exp);
  std::uniform_int_distribution<std::uint64_t> c(0, f.cardinality() - 1);
  for (int t = 0; t < 4; ++t) {
    Monomial m(n);
    for (std::size_t i = 0; i < n; ++i) m[i] = e(rng);
    out.add_term(m, f.from_index(c(rng)));
  }
  return out;
}

}  // namespace

TEST(Degree, ZeroPolynomialSentinel) {
  const UniPoly zero(FieldCtx::prime(5));
  EXPECT_TRUE(zero.degree().is_minus_infinity());
  EXPECT_LT(zero.degree(), Degree(0));
  EXPECT_EQ(zero.degree() + Degree(3), Degree::minus_infinity());
  EXPECT_EQ(MultiPoly(FieldCtx::prime(5), 2).total_degree(), Degree::minus_infinity());
}

TEST(UniPoly, CharPolyExamples) {
  const FieldCtx f5 = FieldCtx::prime(5);
  EXPECT_EQ(UniPoly::from_roots(f5, f5.elements()), uni(f5, {0, -1, 0, 0, 0, 1}));
  const FieldCtx f7 = FieldCtx::prime(7);
  const std::vector<FieldElement> mu3{f7.from_int(1), f7.from_int(2), f7.from_int(4)};
  EXPECT_EQ(UniPoly::from_roots(f7, mu3), uni(f7, {-1, 0, 0, 1}));
  const FieldCtx q = FieldCtx::rationals();
  const std::vector<FieldElement> zero{q.zero()};
  EXPECT_EQ(UniPoly::from_roots(q, zero), uni(q, {0, 1}));
}

TEST(UniPoly, Derivative) {
  const FieldCtx f5 = FieldCtx::prime(5);
  EXPECT_EQ(uni(f5, {0, -1, 0, 0, 0, 1}).derivative(), uni(f5, {4}));
  const FieldCtx f7 = FieldCtx::prime(7);
  EXPECT_EQ(uni(f7, {-1, 0, 0, 1}).derivative(), uni(f7, {0, 0, 3}));
  EXPECT_TRUE(uni(f7, {5}).derivative().is_zero());
}

TEST(UniPoly, ToString) {
  const FieldCtx q = FieldCtx::rationals();
  EXPECT_EQ(uni(q, {0, -1, 0, 1}).to_string(), "X^3 - X");
  EXPECT_EQ(uni(FieldCtx::prime(7), {6, 0, 0, 1}).to_string(), "X^3 + 6");
}

TEST(UniPolyProperties, RootsAndDerivativeRules) {
  std::mt19937_64 rng(5);
  const FieldCtx f = FieldCtx::prime(11);
  for (int trial = 0; trial < 30; ++trial) {
    auto elems = f.elements();
    std::shuffle(elems.begin(), elems.end(), rng);
    const std::size_t m = 1 + trial % 8;
    const std::vector<FieldElement> roots(elems.begin(), elems.begin() + static_cast<std::ptrdiff_t>(m));
    const UniPoly pi = UniPoly::from_roots(f, roots);
    for (std::size_t i = 0; i < elems.size(); ++i) EXPECT_EQ(pi(elems[i]).is_zero(), i < m);

    std::vector<FieldElement> ca, cb;
    for (int k = 0; k < 5; ++k) {
      ca.push_back(f.from_index(rng() % 11));
      cb.push_back(f.from_index(rng() % 11));
    }
    const UniPoly a(f, ca), b(f, cb);
    EXPECT_EQ((a + b).derivative(), a.derivative() + b.derivative());
    EXPECT_EQ((a * b).derivative(), a.derivative() * b + a * b.derivative());
    if (!a.is_zero() && !b.is_zero()) { EXPECT_EQ((a * b).degree(), a.degree() + b.degree()); }
  }
}

TEST(MultiPoly, Evaluation) {
  const FieldCtx q = FieldCtx::rationals();
  const MultiPoly f = parse_poly("x1*x2 - x1^3", 2, q);
  EXPECT_EQ(f(pt(q, {1, -1})), q.from_int(-2));
  EXPECT_EQ(parse_poly("x1*x2 + 7", 2, q)(pt(q, {0, 0})), q.from_int(7));
  const FieldCtx f7 = FieldCtx::prime(7);
  EXPECT_TRUE(parse_poly("1 - (x1+x2)^6", 2, f7)(pt(f7, {1, 6})).is_one());
  EXPECT_EQ(code_of([&] { f(pt(q, {1})); }), Errc::DimensionMismatch);
  EXPECT_EQ(code_of([&] { f(pt(f7, {1, 1})); }), Errc::MixedFields);
}

TEST(MultiPoly, Coefficients) {
  const FieldCtx q = FieldCtx::rationals();
  const MultiPoly f = parse_poly("2*x1*x2 + 3", 2, q);
  EXPECT_EQ(f.coefficient(Monomial{1, 1}), q.from_int(2));
  EXPECT_TRUE(f.coefficient(Monomial{2, 0}).is_zero());
  EXPECT_EQ(parse_poly("(x1+x2)^2", 2, q).coefficient(Monomial{1, 1}), q.from_int(2));
  EXPECT_EQ(code_of([&] { f.coefficient(Monomial{1}); }), Errc::DimensionMismatch);
}

TEST(MultiPoly, RaiseDegree) {
  const FieldCtx q = FieldCtx::rationals();
  const std::vector<std::size_t> s33{3, 3}, s22{2, 2};
  EXPECT_EQ(raise_degree(parse_poly("1", 2, q), s33, Monomial{0, 0}), parse_poly("x1^2*x2^2", 2, q));
  EXPECT_EQ(raise_degree(parse_poly("x1*x2", 2, q), s33, Monomial{2, 2}), parse_poly("x1*x2", 2, q));
  EXPECT_EQ(raise_degree(parse_poly("2*x1 + 3", 2, q), s22, Monomial{1, 0}), parse_poly("2*x1*x2 + 3*x2", 2, q));
  EXPECT_EQ(code_of([&] { raise_degree(parse_poly("1", 2, q), s22, Monomial{2, 0}); }), Errc::ExponentOutOfRange);
}

TEST(MultiPoly, ParseAndFormat) {
  const FieldCtx q = FieldCtx::rationals();
  const MultiPoly f = parse_poly("x1*x2 - x1^3", 2, q);
  EXPECT_EQ(f.terms().size(), 2u);
  EXPECT_EQ(f.coefficient(Monomial{1, 1}), q.one());
  EXPECT_EQ(f.coefficient(Monomial{3, 0}), q.from_int(-1));
  EXPECT_EQ(format_poly(f), "-x1^3 + x1*x2");

  // 1 - (x1+x2)^6 over F7: all binomials C(6,k) are nonzero mod 7.
  const FieldCtx f7 = FieldCtx::prime(7);
  const MultiPoly g = parse_poly("1 - (x1+x2)^6", 2, f7);
  EXPECT_EQ(g.terms().size(), 8u);
  EXPECT_EQ(g.coefficient(Monomial{3, 3}), f7.from_int(-20));
  EXPECT_EQ(format_poly(g), "6*x1^6 + x1^5*x2 + 6*x1^4*x2^2 + x1^3*x2^3 + 6*x1^2*x2^4 + x1*x2^5 + 6*x2^6 + 1");

  const FieldCtx f9 = FieldCtx::of_order(9);
  const MultiPoly h = parse_poly("(t+1)*x1 + t*x2^2 - 1", 2, f9);
  EXPECT_EQ(format_poly(h), "t*x2^2 + (t+1)*x1 + 2");

  EXPECT_EQ(parse_poly("x1/2 + 1/3", 1, q).coefficient(Monomial{1}), q.parse_element("1/2"));
  EXPECT_EQ(format_poly(MultiPoly(q, 2)), "0");
}

TEST(MultiPoly, ParseErrors) {
  const FieldCtx q = FieldCtx::rationals();
  EXPECT_EQ(code_of([&] { parse_poly("x3", 2, q); }), Errc::UnknownVariable);
  EXPECT_EQ(code_of([&] { parse_poly("x1 +", 2, q); }), Errc::SyntaxError);
  EXPECT_EQ(code_of([&] { parse_poly("(x1", 2, q); }), Errc::SyntaxError);
  EXPECT_EQ(code_of([&] { parse_poly("x1 / x2", 2, q); }), Errc::SyntaxError);
  EXPECT_EQ(code_of([&] { parse_poly("t*x1", 1, q); }), Errc::UnknownVariable);
  try {
    parse_poly("x1 + * x2", 2, q);
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("position"), std::string::npos);
  }
}

TEST(MultiPolyProperties, FormatParseRoundTrip) {
  std::mt19937_64 rng(21);
  for (const FieldCtx& f : {FieldCtx::prime(7), FieldCtx::of_order(9), FieldCtx::of_order(8)})
    for (int i = 0; i < 40; ++i) {
      const MultiPoly p = random_multi(rng, f, 3, 4);
      EXPECT_EQ(parse_poly(format_poly(p), 3, f), p) << format_poly(p);
    }
  const FieldCtx q = FieldCtx::rationals();
  const MultiPoly r = parse_poly("-3/4*x1^2 + 5/2*x1*x2 - 7", 2, q);
  EXPECT_EQ(parse_poly(format_poly(r), 2, q), r);
}

TEST(MultiPolyProperties, EvaluationIsRingHomomorphism) {
  std::mt19937_64 rng(22);
  const FieldCtx f = FieldCtx::of_order(9);
  std::uniform_int_distribution<std::uint64_t> c(0, 8);
  for (int i = 0; i < 60; ++i) {
    const MultiPoly a = random_multi(rng, f, 2, 3), b = random_multi(rng, f, 2, 3);
    const Point x{f.from_index(c(rng)), f.from_index(c(rng))};
    EXPECT_EQ((a + b)(x), a(x) + b(x));
    EXPECT_EQ((a * b)(x), a(x) * b(x));
    if (!a.is_zero() && !b.is_zero()) { EXPECT_EQ((a * b).total_degree(), a.total_degree() + b.total_degree()); }
  }
}
