#include <gtest/gtest.h>

#include <random>
#include <thread>

#include "gridnull/grids.hpp"
#include "gridnull/nullity.hpp"
#include "gridnull/suites.hpp"

using namespace gridnull;

namespace {

FiniteSet ints(const FieldCtx& f, std::vector<long long> xs) {
  std::vector<FieldElement> v;
  for (auto x : xs) v.push_back(f.from_int(x));
  return FiniteSet(f, v);
}

std::vector<FieldElement> vals(const FieldCtx& f, std::vector<long long> xs) {
  std::vector<FieldElement> v;
  for (auto x : xs) v.push_back(f.from_int(x));
  return v;
}

}  // namespace

TEST(FiniteSet, RejectsEmptyAndDeduplicates) {
  const FieldCtx f = FieldCtx::prime(5);
  EXPECT_THROW(FiniteSet(f, {}), Error);
  const FiniteSet s = ints(f, {1, 6, 2, 1});
  EXPECT_EQ(s.size(), 2u);
  EXPECT_EQ(s.to_string(), "{1, 2}");
}

TEST(Moments, Elementary) {
  const FieldCtx f7 = FieldCtx::prime(7);
  EXPECT_EQ(ints(f7, {1, 2, 4}).elementary_moments(4), vals(f7, {1, 0, 0, 1, 0}));
  const FieldCtx q = FieldCtx::rationals();
  EXPECT_EQ(ints(q, {-1, 0, 1}).elementary_moments(3), vals(q, {1, 0, -1, 0}));
}

TEST(Moments, Complete) {
  const FieldCtx q = FieldCtx::rationals();
  EXPECT_EQ(ints(q, {-1, 0, 1}).complete_moments(2), vals(q, {1, 0, 1}));
  EXPECT_EQ(ints(q, {1, 2, 3}).complete_moments(2), vals(q, {1, 6, 25}));
}

TEST(Moments, PowerSums) {
  const FieldCtx q = FieldCtx::rationals();
  EXPECT_EQ(ints(q, {-1, 1}).power_sums(2), vals(q, {2, 0, 2}));
  const FieldCtx f9 = FieldCtx::of_order(9);
  const FieldElement t = f9.generator();
  const FiniteSet tz(f9, {f9.zero(), t, t + t});
  EXPECT_TRUE(tz.power_sums(1)[1].is_zero());
  EXPECT_EQ(tz.power_sums(0)[0], f9.zero());  // 3 = 0 in characteristic 3
}

TEST(Moments, CacheExtendsConsistently) {
  const FieldCtx q = FieldCtx::rationals();
  const FiniteSet s = ints(q, {1, 2, 3, 5});
  const auto short_h = s.complete_moments(3);
  const auto long_h = s.complete_moments(9);
  EXPECT_TRUE(std::equal(short_h.begin(), short_h.end(), long_h.begin()));
  EXPECT_EQ(s.moments(9).h, moments_bruteforce(s, 9).h);
}

TEST(Moments, ConcurrentReadersAgree) {
  const FieldCtx f = FieldCtx::prime(13);
  const FiniteSet s = ints(f, {1, 3, 4, 7, 9, 12});
  std::vector<std::vector<FieldElement>> results(4);
  std::vector<std::thread> threads;
  for (std::size_t i = 0; i < results.size(); ++i)
    threads.emplace_back([&, i] { results[i] = s.complete_moments(7 + 3 * i); });
  for (auto& th : threads) th.join();
  const auto reference = moments_bruteforce(s, 16).h;
  for (const auto& r : results)
    for (std::size_t k = 0; k < r.size(); ++k) EXPECT_EQ(r[k], reference[k]);
}

TEST(Nullity, WorkedExamples) {
  const FieldCtx f5 = FieldCtx::prime(5);
  EXPECT_EQ(nullity(full_field(f5)), 3u);
  EXPECT_EQ(nullity(ints(FieldCtx::prime(7), {1, 2, 4})), 2u);
  EXPECT_EQ(nullity(ints(f5, {0})), 1u);
  EXPECT_EQ(nullity(ints(f5, {3})), 0u);
}

TEST(Nullity, VandermondeDegree) {
  const FieldCtx f9 = FieldCtx::of_order(9);
  const FieldElement t = f9.generator();
  EXPECT_EQ(vandermonde_degree(FiniteSet(f9, {f9.zero(), t, t + t})), 1u);
  EXPECT_EQ(vandermonde_degree(ints(FieldCtx::rationals(), {-1, 1})), 1u);
  EXPECT_EQ(vandermonde_degree(units(FieldCtx::prime(7))), 5u);
}

TEST(Nullity, Weights) {
  const FieldCtx f5 = FieldCtx::prime(5);
  const FiniteSet all = full_field(f5);
  for (const auto& a : all.elements()) EXPECT_EQ(derivative_weight(all, a), f5.from_int(4));
  const FieldCtx f7 = FieldCtx::prime(7);
  const FiniteSet mu3 = ints(f7, {1, 2, 4});
  EXPECT_EQ(derivative_weight(mu3, f7.from_int(1)), f7.from_int(5));
  EXPECT_EQ(derivative_weight(mu3, f7.from_int(2)), f7.from_int(3));
  EXPECT_EQ(derivative_weight(mu3, f7.from_int(4)), f7.from_int(6));
  EXPECT_THROW(derivative_weight(mu3, f7.from_int(3)), Error);
}

TEST(Sylvester, EulerIdentities) {
  const FieldCtx q = FieldCtx::rationals();
  const FiniteSet s = ints(q, {1, 2, 3});
  EXPECT_TRUE(sylvester_sum(s, 0).is_zero());
  EXPECT_TRUE(sylvester_sum(s, 1).is_zero());
  EXPECT_TRUE(sylvester_sum(s, 2).is_one());
  EXPECT_EQ(sylvester_sum(s, 3), q.from_int(6));
  EXPECT_TRUE(sylvester_sum(ints(q, {7}), 0).is_one());
}

// Properties on seeded random sets.

class NullityProperties : public ::testing::TestWithParam<int> {};

TEST_P(NullityProperties, CalculusOfNullSets) {
  std::mt19937_64 rng(100 + GetParam());
  const std::vector<FieldCtx> fields{FieldCtx::prime(7), FieldCtx::prime(11), FieldCtx::of_order(9),
                                     FieldCtx::of_order(8)};
  for (const FieldCtx& f : fields) {
    for (int i = 0; i < 25; ++i) {
      const FiniteSet a = detail::random_structured_set(rng, f, 6);
      const FieldElement c = detail::random_nonzero(rng, f);
      std::vector<FieldElement> scaled;
      for (const auto& x : a.elements()) scaled.push_back(c * x);
      EXPECT_EQ(nullity(FiniteSet(f, scaled)), nullity(a)) << a.to_string();

      std::vector<FieldElement> without, with;
      for (const auto& x : a.elements())
        if (!x.is_zero()) without.push_back(x);
      with = without;
      with.push_back(f.zero());
      if (!without.empty()) { EXPECT_EQ(nullity(FiniteSet(f, with)), nullity(FiniteSet(f, without))); }

      const FiniteSet b = detail::random_structured_set(rng, f, 6);
      std::vector<FieldElement> uni = a.elements();
      bool disjoint = true;
      for (const auto& x : b.elements()) {
        disjoint = disjoint && !a.contains(x);
        uni.push_back(x);
      }
      if (disjoint) { EXPECT_GE(nullity(FiniteSet(f, uni)), std::min(nullity(a), nullity(b))); }
    }
  }
}

TEST_P(NullityProperties, NullImpliesVandermonde) {
  std::mt19937_64 rng(200 + GetParam());
  for (const FieldCtx& f : {FieldCtx::rationals(), FieldCtx::prime(5), FieldCtx::prime(13), FieldCtx::of_order(9)}) {
    for (int i = 0; i < 30; ++i) {
      const std::size_t size = 1 + rng() % 6;
      const FiniteSet a = f.is_finite() ? detail::random_structured_set(rng, f, 6) : detail::random_set(rng, f, size);
      const std::size_t lambda = nullity(a), vdm = vandermonde_degree(a);
      EXPECT_LE(lambda, vdm) << a.to_string();
      // Newton's identities make the two predicates agree below the characteristic.
      if (!f.is_finite() || (lambda < f.characteristic() && vdm < f.characteristic())) {
        EXPECT_EQ(lambda, vdm) << f.to_string() << " " << a.to_string();
      }
    }
  }
}

TEST_P(NullityProperties, FormallyRealBound) {
  std::mt19937_64 rng(300 + GetParam());
  const FieldCtx q = FieldCtx::rationals();
  for (int i = 0; i < 40; ++i) {
    const FiniteSet a = detail::random_set(rng, q, 1 + rng() % 6);
    if (a.size() == 1 && a.elements()[0].is_zero()) continue;
    EXPECT_LE(vandermonde_degree(a), 1u);
    const auto p = a.power_sums(2);
    EXPECT_FALSE(p[2].is_zero());
  }
}

TEST_P(NullityProperties, MomentIdentities) {
  std::mt19937_64 rng(400 + GetParam());
  for (const FieldCtx& f : {FieldCtx::rationals(), FieldCtx::prime(7), FieldCtx::of_order(9)}) {
    for (int i = 0; i < 20; ++i) {
      const std::size_t cap = f.is_finite() ? std::min<std::size_t>(8, f.cardinality()) : 8;
      const FiniteSet a = detail::random_set(rng, f, 1 + rng() % cap);
      const std::size_t m = a.size(), r_max = m + 4;
      const MomentTable t = a.moments(r_max);
      EXPECT_TRUE(t.e[0].is_one());
      EXPECT_TRUE(t.h[0].is_one());
      EXPECT_EQ(t.p[0], f.from_int(static_cast<long long>(m)));
      for (std::size_t r = m + 1; r <= r_max; ++r) EXPECT_TRUE(t.e[r].is_zero());
      for (std::size_t r = 1; r <= r_max; ++r) {
        FieldElement entwine = f.zero();
        for (std::size_t i2 = 0; i2 <= r; ++i2) {
          const FieldElement term = t.e[r - i2] * t.h[i2];
          entwine += i2 % 2 ? -term : term;
        }
        EXPECT_TRUE(entwine.is_zero());
      }
      for (std::size_t r = 1; r <= m; ++r) {
        FieldElement newton = f.from_int(static_cast<long long>(r)) * t.e[r];
        for (std::size_t i2 = 1; i2 <= r; ++i2) {
          const FieldElement term = t.e[r - i2] * t.p[i2];
          newton += i2 % 2 ? -term : term;
        }
        EXPECT_TRUE(newton.is_zero());
      }
    }
  }
}

TEST_P(NullityProperties, SylvesterMatchesComplete) {
  std::mt19937_64 rng(500 + GetParam());
  for (const FieldCtx& f : {FieldCtx::rationals(), FieldCtx::prime(11), FieldCtx::of_order(8)}) {
    for (int i = 0; i < 15; ++i) {
      const std::size_t cap = f.is_finite() ? std::min<std::size_t>(8, f.cardinality() - 1) : 8;
      const FiniteSet a = detail::random_set(rng, f, 1 + rng() % cap);
      const std::size_t m = a.size();
      const auto h = a.complete_moments(m + 1);
      for (std::size_t d = 0; d <= 2 * m; ++d) {
        const FieldElement s = sylvester_sum(a, d);
        if (d + 2 <= m)
          EXPECT_TRUE(s.is_zero());
        else
          EXPECT_EQ(s, h[d + 1 - m]);
        EXPECT_TRUE(sylvester_recurrence_holds(a, d));
      }
      FieldElement x = detail::random_element(rng, f);
      while (a.contains(x)) x = detail::random_element(rng, f);
      EXPECT_TRUE(partial_fraction_holds(a, x));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, NullityProperties, ::testing::Range(0, 3));
