#include <gtest/gtest.h>

#include <random>
#include <set>

#include "gridnull/field.hpp"

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

std::vector<FieldCtx> finite_fields() {
  return {FieldCtx::prime(2),  FieldCtx::prime(5),       FieldCtx::prime(7),       FieldCtx::prime(13),
          FieldCtx::of_order(4), FieldCtx::of_order(8), FieldCtx::of_order(9), FieldCtx::of_order(25),
          FieldCtx::of_order(27), FieldCtx::of_order(16), FieldCtx::of_order(81)};
}

}  // namespace

TEST(Field, PrimeContext) {
  const FieldCtx f = FieldCtx::prime(7);
  EXPECT_EQ(f.characteristic(), 7u);
  EXPECT_EQ(f.cardinality(), 7u);
  EXPECT_EQ(f.to_string(), "F7");
}

TEST(Field, ExtensionWithExplicitModulus) {
  const FieldCtx f = FieldCtx::extension(3, 2, {1, 0, 1});
  EXPECT_EQ(f.cardinality(), 9u);
  EXPECT_EQ(f.characteristic(), 3u);
  // t^2 + 1 is also the default modulus for F9.
  EXPECT_EQ(f, FieldCtx::of_order(9));
  EXPECT_EQ(f.to_string(), "F3^2");
}

TEST(Field, RejectsBadSpecs) {
  EXPECT_EQ(code_of([] { FieldCtx::prime(9); }), Errc::NonPrimeModulus);
  EXPECT_EQ(code_of([] { FieldCtx::extension(3, 2, {2, 0, 1}); }), Errc::ReducibleModulus);
  EXPECT_EQ(code_of([] { FieldCtx::extension(2, 2, {1, 0, 1}); }), Errc::ReducibleModulus);  // (t+1)^2
  EXPECT_EQ(code_of([] { FieldCtx::extension(3, 2, {1, 0, 2}); }), Errc::ReducibleModulus);  // not monic
  EXPECT_EQ(code_of([] { FieldCtx::extension(2, 5); }), Errc::UnsupportedDegree);
}

TEST(Field, LargerDegreeWithSuppliedModulus) {
  // t^5 + t^2 + 1 is irreducible over F2.
  const FieldCtx f = FieldCtx::extension(2, 5, {1, 0, 1, 0, 0, 1});
  EXPECT_EQ(f.cardinality(), 32u);
  const FieldElement t = f.generator();
  EXPECT_TRUE(t.pow(31).is_one());
  EXPECT_EQ(f.to_string(), "F2^5/1,0,1,0,0,1");
  // t^5 + t + 1 = (t^2 + t + 1)(t^3 + t^2 + 1) is rejected.
  EXPECT_EQ(code_of([] { FieldCtx::extension(2, 5, {1, 1, 0, 0, 0, 1}); }), Errc::ReducibleModulus);
}

TEST(Field, DefaultModuli) {
  EXPECT_EQ(FieldCtx::of_order(4).modulus(), (std::vector<std::uint64_t>{1, 1, 1}));
  EXPECT_EQ(FieldCtx::of_order(8).modulus(), (std::vector<std::uint64_t>{1, 0, 1, 1}));  // t^3 + t^2 + 1
  EXPECT_EQ(FieldCtx::of_order(9).modulus(), (std::vector<std::uint64_t>{1, 0, 1}));
}

TEST(Field, Arithmetic) {
  const FieldCtx f7 = FieldCtx::prime(7);
  EXPECT_EQ(f7.from_int(3).inv(), f7.from_int(5));
  const FieldCtx f9 = FieldCtx::of_order(9);
  const FieldElement t = f9.generator();
  EXPECT_EQ(t.pow(3), f9.parse_element("2*t"));
  EXPECT_EQ(t.pow(3).to_string(), "2*t");
  EXPECT_EQ((t * t).to_string(), "2");
  EXPECT_TRUE(f7.zero().pow(0).is_one());
  EXPECT_EQ(f7.from_int(3).pow(-1), f7.from_int(5));
  EXPECT_EQ(code_of([&] { f7.zero().inv(); }), Errc::DivisionByZero);
  EXPECT_EQ(code_of([&] { (void)(f7.one() + f9.one()); }), Errc::MixedFields);
}

TEST(Field, Rationals) {
  const FieldCtx q = FieldCtx::rationals();
  const FieldElement a = q.parse_element("-3/4");
  EXPECT_EQ(a.to_string(), "-3/4");
  EXPECT_EQ((a * q.from_int(-4)).to_string(), "3");
  EXPECT_EQ(q.parse_element("6/8"), q.from_rational(mpq_class(3, 4)));
  EXPECT_EQ(code_of([&] { q.cardinality(); }), Errc::InfiniteField);
  EXPECT_EQ(code_of([&] { q.elements(); }), Errc::InfiniteField);
}

TEST(Field, Enumeration) {
  const FieldCtx f5 = FieldCtx::prime(5);
  const auto e5 = f5.elements();
  ASSERT_EQ(e5.size(), 5u);
  for (std::uint64_t i = 0; i < 5; ++i) EXPECT_EQ(e5[i].to_string(), std::to_string(i));

  const auto e9 = FieldCtx::of_order(9).elements();
  ASSERT_EQ(e9.size(), 9u);
  EXPECT_EQ(e9[0].to_string(), "0");
  EXPECT_EQ(e9[1].to_string(), "1");
  EXPECT_EQ(e9[2].to_string(), "2");
  EXPECT_EQ(e9[3].to_string(), "t");
  EXPECT_EQ(e9[5].to_string(), "t+2");
}

TEST(Field, Trace) {
  const FieldCtx f9 = FieldCtx::of_order(9);
  EXPECT_TRUE(f9.trace(f9.generator()).is_zero());
  EXPECT_EQ(f9.trace(f9.one()), f9.from_int(2));
  EXPECT_TRUE(f9.trace(f9.zero()).is_zero());
  EXPECT_EQ(code_of([] { FieldCtx::prime(7).trace(FieldCtx::prime(7).one()); }), Errc::NotExtensionField);
}

TEST(Field, ParseSpec) {
  EXPECT_EQ(FieldCtx::parse("Q"), FieldCtx::rationals());
  EXPECT_EQ(FieldCtx::parse("F7"), FieldCtx::prime(7));
  EXPECT_EQ(FieldCtx::parse("F3^2"), FieldCtx::of_order(9));
  EXPECT_EQ(FieldCtx::parse("F3^2/1,0,1"), FieldCtx::of_order(9));
  const FieldCtx other = FieldCtx::parse("F3^2/2,2,1");
  EXPECT_FALSE(other == FieldCtx::of_order(9));
  EXPECT_EQ(FieldCtx::parse(other.to_string()), other);
  EXPECT_EQ(code_of([] { FieldCtx::parse("G7"); }), Errc::SyntaxError);
  EXPECT_EQ(code_of([] { FieldCtx::parse("F3^2/1,0"); }), Errc::ReducibleModulus);  // wrong length
}

TEST(Field, ElementRoundTrip) {
  for (const FieldCtx& f : finite_fields())
    for (const auto& x : f.elements()) EXPECT_EQ(f.parse_element(x.to_string()), x) << f.to_string();
}

// Properties over every small field.

TEST(FieldProperties, FermatLagrange) {
  for (const FieldCtx& f : finite_fields()) {
    const auto q = static_cast<std::int64_t>(f.cardinality());
    for (const auto& x : f.elements())
      if (!x.is_zero()) { EXPECT_TRUE(x.pow(q - 1).is_one()) << f.to_string() << " " << x; }
  }
}

TEST(FieldProperties, FrobeniusAdditive) {
  std::mt19937_64 rng(11);
  for (const FieldCtx& f : finite_fields()) {
    const auto p = static_cast<std::int64_t>(f.characteristic());
    std::uniform_int_distribution<std::uint64_t> pick(0, f.cardinality() - 1);
    for (int i = 0; i < 50; ++i) {
      const FieldElement x = f.from_index(pick(rng)), y = f.from_index(pick(rng));
      EXPECT_EQ((x + y).pow(p), x.pow(p) + y.pow(p));
    }
  }
}

TEST(FieldProperties, TraceLinearAndPrime) {
  std::mt19937_64 rng(12);
  for (const FieldCtx& f : finite_fields()) {
    if (f.kind() != FieldKind::Extension) continue;
    std::uniform_int_distribution<std::uint64_t> pick(0, f.cardinality() - 1), pick_p(0, f.characteristic() - 1);
    for (int i = 0; i < 50; ++i) {
      const FieldElement x = f.from_index(pick(rng)), y = f.from_index(pick(rng));
      const FieldElement a = f.from_int(static_cast<long long>(pick_p(rng)));
      EXPECT_EQ(f.trace(a * x + y), a * f.trace(x) + f.trace(y));
      const FieldElement tr = f.trace(x);
      EXPECT_EQ(tr.pow(static_cast<std::int64_t>(f.characteristic())), tr);
      EXPECT_TRUE(f.in_prime_subfield(tr));
    }
  }
}

TEST(FieldProperties, EnumerationDistinct) {
  for (const FieldCtx& f : finite_fields()) {
    std::set<std::string> seen;
    for (const auto& x : f.elements()) seen.insert(x.to_string());
    EXPECT_EQ(seen.size(), f.cardinality());
  }
}

TEST(FieldProperties, FieldAxioms) {
  std::mt19937_64 rng(13);
  for (const FieldCtx& f : finite_fields()) {
    std::uniform_int_distribution<std::uint64_t> pick(0, f.cardinality() - 1);
    for (int i = 0; i < 40; ++i) {
      const FieldElement x = f.from_index(pick(rng)), y = f.from_index(pick(rng)), z = f.from_index(pick(rng));
      EXPECT_TRUE((x + -x).is_zero());
      EXPECT_EQ(x * (y + z), x * y + x * z);
      EXPECT_EQ((x * y) * z, x * (y * z));
      if (!x.is_zero()) { EXPECT_TRUE((x * x.inv()).is_one()); }
    }
  }
}
