#pragma once

// Seeded randomized batches for the theorem and identity checks. Each batch
// returns a ScanReport carrying the seed, instance count and any
// counterexamples, so a failure can be replayed from the report alone.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "gridnull/field.hpp"
#include "gridnull/grids.hpp"
#include "gridnull/nullity.hpp"
#include "gridnull/oracle.hpp"
#include "gridnull/poly.hpp"
#include "gridnull/report.hpp"
#include "gridnull/theorems.hpp"

namespace gridnull {

namespace detail {

using Rng = std::mt19937_64;

inline std::uint64_t uniform(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
}

template <class T>
const T& pick(Rng& rng, const std::vector<T>& v) {
  return v[uniform(rng, 0, v.size() - 1)];
}

inline FieldElement random_element(Rng& rng, const FieldCtx& field) {
  if (field.is_finite()) return field.from_index(uniform(rng, 0, field.cardinality() - 1));
  const auto num = static_cast<long>(uniform(rng, 0, 18)) - 9;
  const auto den = static_cast<long>(uniform(rng, 1, 4));
  return field.from_rational(mpq_class(num, den));
}

inline FieldElement random_nonzero(Rng& rng, const FieldCtx& field) {
  for (;;) {
    FieldElement x = random_element(rng, field);
    if (!x.is_zero()) return x;
  }
}

// `size` distinct elements; size must not exceed the field for finite fields.
inline FiniteSet random_set(Rng& rng, const FieldCtx& field, std::size_t size) {
  std::vector<FieldElement> out;
  if (field.is_finite()) {
    auto all = field.elements();
    std::shuffle(all.begin(), all.end(), rng);
    out.assign(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(size));
  } else {
    while (out.size() < size) {
      FieldElement x = random_element(rng, field);
      if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
    }
  }
  return FiniteSet(field, out);
}

inline std::vector<std::uint64_t> divisors(std::uint64_t m) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 1; d <= m; ++d)
    if (m % d == 0) out.push_back(d);
  return out;
}

// Random monomial of total degree exactly `degree` in n variables, respecting
// per-variable caps when given. Returns false when no such monomial exists.
inline bool random_monomial(Rng& rng, std::size_t n, long long degree, const std::vector<unsigned>& caps,
                            Monomial& out) {
  long long room = 0;
  for (std::size_t i = 0; i < n; ++i) room += caps.empty() ? degree : caps[i];
  if (degree < 0 || degree > room) return false;
  out = Monomial(n);
  long long left = degree;
  while (left > 0) {
    const std::size_t i = uniform(rng, 0, n - 1);
    if (!caps.empty() && out[i] >= caps[i]) continue;
    ++out[i];
    --left;
  }
  return true;
}

// Sum of `terms` random terms of total degree <= max_degree; with `exact`, one
// of them has degree exactly max_degree (so the result has that degree unless
// cancelled, which a nonzero coefficient on a fresh monomial prevents).
inline MultiPoly random_poly(Rng& rng, const FieldCtx& field, std::size_t n, long long max_degree,
                             std::size_t terms, bool exact = false, const std::vector<unsigned>& caps = {}) {
  MultiPoly f(field, n);
  if (max_degree < 0) return f;
  Monomial m(n);
  for (std::size_t t = 0; t < terms; ++t) {
    const long long d = static_cast<long long>(uniform(rng, 0, static_cast<std::uint64_t>(max_degree)));
    if (random_monomial(rng, n, d, caps, m)) f.add_term(m, random_element(rng, field));
  }
  if (exact && random_monomial(rng, n, max_degree, caps, m)) {
    const FieldElement current = f.coefficient(m);
    FieldElement c = random_nonzero(rng, field);
    if ((current + c).is_zero()) c = c + c.field().one();
    if ((current + c).is_zero() || c.is_zero()) c = random_nonzero(rng, field);
    f.add_term(m, c);
    if (f.coefficient(m).is_zero()) f.add_term(m, field.one());
  }
  return f;
}

inline std::string point_text(const Point& a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? ", " : "") + a[i].to_string();
  return s + ")";
}

inline std::string instance_text(const MultiPoly& f, const Grid& grid) {
  return "field " + grid.field().to_string() + ", grid " + grid.to_string() + ", f = " + format_poly(f);
}

inline ScanReport start_report(std::string name, std::uint64_t seed) {
  ScanReport r;
  r.name = std::move(name);
  r.seed = seed;
  return r;
}

inline void finish_report(ScanReport& r, const Stopwatch& clock) {
  r.sort_counterexamples();
  r.elapsed_seconds = clock.seconds();
}

// Factor families with nontrivial nullity over F_q, capped at max_size elements.
inline FiniteSet random_structured_set(Rng& rng, const FieldCtx& field, std::size_t max_size) {
  const std::uint64_t q = field.cardinality();
  for (;;) {
    switch (uniform(rng, 0, 4)) {
      case 0: {  // multiplicative coset
        std::vector<std::uint64_t> ds;
        for (auto d : divisors(q - 1))
          if (d <= max_size) ds.push_back(d);
        return multiplicative_coset(field, pick(rng, ds), random_nonzero(rng, field));
      }
      case 1:
        if (q <= max_size) return full_field(field);
        break;
      case 2:
        if (q - 1 <= max_size) return units(field);
        break;
      case 3: {  // additive coset of a small subspace
        std::vector<FieldElement> gens;
        std::size_t size = 1;
        while (size * field.characteristic() <= max_size && uniform(rng, 0, 2) != 0) {
          gens.push_back(random_nonzero(rng, field));
          size *= field.characteristic();
        }
        FiniteSet s = additive_coset(field, gens, random_element(rng, field));
        if (s.size() <= max_size) return s;
        break;
      }
      default:
        return random_set(rng, field, uniform(rng, 1, std::min<std::uint64_t>(max_size, q)));
    }
  }
}

inline const std::vector<std::uint64_t>& small_primes() {
  static const std::vector<std::uint64_t> ps{2, 3, 5, 7, 11, 13};
  return ps;
}

}  // namespace detail

/// Fast moments and the three nullity computations against the subset and
/// composition oracles, over Q, F5, F7 and F9.
inline ScanReport moments_suite(std::uint64_t seed, std::size_t count = 200) {
  detail::Stopwatch clock;
  detail::Rng rng(seed);
  ScanReport report = detail::start_report("moments", seed);
  const std::vector<FieldCtx> fields{FieldCtx::rationals(), FieldCtx::prime(5), FieldCtx::prime(7),
                                     FieldCtx::of_order(9)};
  for (std::size_t i = 0; i < count; ++i) {
    const FieldCtx& field = fields[i % fields.size()];
    const std::size_t cap = field.is_finite() ? std::min<std::size_t>(8, field.cardinality()) : 8;
    const FiniteSet set = detail::random_set(rng, field, detail::uniform(rng, 1, cap));
    ++report.instances;
    const std::size_t bound = set.size() + 2;
    const MomentTable fast = set.moments(bound);
    const MomentTable slow = moments_bruteforce(set, bound);
    const std::size_t a = nullity(set), b = nullity_from_elementary(set), c = nullity_from_complete(set);
    std::string problem;
    if (fast.e != slow.e) problem += " elementary";
    if (fast.h != slow.h) problem += " complete";
    if (fast.p != slow.p) problem += " power-sum";
    if (a != b || a != c)
      problem += " nullity " + std::to_string(a) + "/" + std::to_string(b) + "/" + std::to_string(c);
    if (!problem.empty()) report.counterexample(field.to_string() + " " + set.to_string() + ":" + problem);
  }
  report.set("fields", "Q,F5,F7,F3^2");
  detail::finish_report(report, clock);
  return report;
}

/// Sylvester's identity against h and the composition oracle, plus the
/// prefix recurrence and the partial-fraction identity on the same sets.
inline ScanReport sylvester_suite(std::uint64_t seed, std::size_t count = 200) {
  detail::Stopwatch clock;
  detail::Rng rng(seed);
  ScanReport report = detail::start_report("sylvester", seed);
  const std::vector<FieldCtx> fields{FieldCtx::rationals(), FieldCtx::prime(7), FieldCtx::prime(11),
                                     FieldCtx::prime(13), FieldCtx::of_order(9)};
  OracleConfig cfg;
  for (std::size_t i = 0; i < count; ++i) {
    const FieldCtx& field = fields[i % fields.size()];
    // Leave room in finite fields for a partial-fraction point outside the set.
    const std::size_t cap = field.is_finite() ? std::min<std::size_t>(6, field.cardinality() - 1) : 6;
    const FiniteSet set = detail::random_set(rng, field, detail::uniform(rng, 1, cap));
    const std::size_t m = set.size();
    ++report.instances;
    const auto h = set.complete_moments(m + 1);
    for (std::size_t d = 0; d <= 2 * m; ++d) {
      const FieldElement s = sylvester_sum(set, d);
      const FieldElement expected = d + 1 < m ? field.zero() : d + 1 == m ? field.one() : h[d + 1 - m];
      const std::string where = field.to_string() + " " + set.to_string() + " d=" + std::to_string(d);
      if (!(s == expected)) report.counterexample(where + ": sum " + s.to_string() + " vs " + expected.to_string());
      if (!(s == sylvester_rhs_bruteforce(set, d, cfg))) report.counterexample(where + ": composition oracle");
      if (!sylvester_recurrence_holds(set, d)) report.counterexample(where + ": recurrence");
    }
    FieldElement x = detail::random_element(rng, field);
    while (set.contains(x)) x = detail::random_element(rng, field);
    if (!partial_fraction_holds(set, x))
      report.counterexample(field.to_string() + " " + set.to_string() + ": partial fractions at " + x.to_string());
  }
  detail::finish_report(report, clock);
  return report;
}

/// Exponential generating-series restatement over Q.
inline ScanReport series_suite(std::uint64_t seed, std::size_t count = 20, std::size_t order = 12) {
  detail::Stopwatch clock;
  detail::Rng rng(seed);
  ScanReport report = detail::start_report("series", seed);
  report.set("order", std::to_string(order));
  const FieldCtx q = FieldCtx::rationals();
  for (std::size_t i = 0; i < count; ++i) {
    const FiniteSet set = detail::random_set(rng, q, detail::uniform(rng, 2, 6));
    ++report.instances;
    if (!exp_series_check(set, order)) report.counterexample(set.to_string());
  }
  detail::finish_report(report, clock);
  return report;
}

/// Qualifying instances f = c X^k + sum g_i Pi_{A_i}(X_i) + noise must have a
/// non-vanishing grid point; pure sum g_i Pi_{A_i}(X_i) (which vanishes on the
/// grid) must never qualify.
inline ScanReport cn_suite(std::uint64_t seed, std::size_t count = 500) {
  detail::Stopwatch clock;
  detail::Rng rng(seed);
  ScanReport report = detail::start_report("cn", seed);
  std::uint64_t attempts = 0, vanishing = 0;
  while (report.instances < count) {
    ++attempts;
    const FieldCtx field = FieldCtx::prime(detail::pick(rng, detail::small_primes()));
    const std::size_t n = detail::uniform(rng, 1, 3);
    std::vector<FiniteSet> factors;
    for (std::size_t i = 0; i < n; ++i) factors.push_back(detail::random_structured_set(rng, field, 6));
    const Grid grid(factors);
    const auto sizes = grid.sizes();

    Monomial k(n);
    long long ksum = 0;
    for (std::size_t i = 0; i < n; ++i) {
      k[i] = static_cast<unsigned>(detail::uniform(rng, 0, sizes[i] - 1));
      ksum += k[i];
    }
    const long long bound = ksum + static_cast<long long>(grid.joint_nullity());

    MultiPoly vanish(field, n);
    for (std::size_t i = 0; i < n; ++i) {
      const long long room = bound - static_cast<long long>(sizes[i]);
      if (room < 0 || detail::uniform(rng, 0, 3) == 0) continue;
      const MultiPoly g = detail::random_poly(rng, field, n, room, 3);
      vanish = vanish + g * MultiPoly::from_univariate(grid.factor(i).char_poly(), n, i);
    }
    MultiPoly f = vanish;
    f.add_term(k, detail::random_nonzero(rng, field));
    if (detail::uniform(rng, 0, 1)) f = f + detail::random_poly(rng, field, n, bound, 2);

    const WitnessReport r = gcn_check(f, grid);
    if (!r.hypothesis_ok) continue;  // noise cancelled the planted monomial or raised the degree
    ++report.instances;
    const bool counts_ok = r.zero_count + r.nonzero_count == grid.point_count();
    const bool witness_ok = r.witness && !f(*r.witness).is_zero();
    if (r.nonzero_count == 0 || !counts_ok || !witness_ok)
      report.counterexample(detail::instance_text(f, grid) + ": no witness");

    if (!vanish.is_zero()) {
      ++vanishing;
      const WitnessReport z = gcn_check(vanish, grid);
      if (z.nonzero_count != 0 || z.hypothesis_ok)
        report.counterexample(detail::instance_text(vanish, grid) + ": vanishing polynomial qualifies");
    }
  }
  report.set("attempts", std::to_string(attempts));
  report.set("vanishing_controls", std::to_string(vanishing));
  detail::finish_report(report, clock);
  return report;
}

namespace detail {

inline Grid random_grid(Rng& rng, const FieldCtx& field, std::size_t max_n, std::size_t max_size) {
  const std::size_t n = uniform(rng, 1, max_n);
  std::vector<FiniteSet> factors;
  for (std::size_t i = 0; i < n; ++i) factors.push_back(random_structured_set(rng, field, max_size));
  return Grid(factors);
}

inline FieldCtx random_small_field(Rng& rng) {
  static const std::vector<std::uint64_t> qs{2, 3, 4, 5, 7, 8, 9, 11, 13};
  return FieldCtx::of_order(pick(rng, qs));
}

}  // namespace detail

/// Weighted grid sums against the top coefficient. In-bound instances must
/// match; with `excess` = 1 the degree is one over the bound and the batch is
/// expected to contain mismatches.
inline ScanReport cct_suite(std::uint64_t seed, std::size_t count = 500, long long excess = 0) {
  detail::Stopwatch clock;
  detail::Rng rng(seed);
  ScanReport report = detail::start_report(excess == 0 ? "cct" : "cct-falsify", seed);
  report.set("excess", std::to_string(excess));
  std::uint64_t mismatches = 0;
  while (report.instances < count) {
    const FieldCtx field = detail::random_small_field(rng);
    const Grid grid = detail::random_grid(rng, field, 3, 6);
    const long long bound = grid.top_degree() + static_cast<long long>(grid.joint_nullity());
    MultiPoly f = detail::random_poly(rng, field, grid.dimension(), bound + excess, 5, true);
    f.add_term(grid.top_monomial(), detail::random_element(rng, field));
    const CoefficientReport r = cct_coefficient(f, grid);
    if (r.degree_bound_ok != (excess == 0)) continue;  // degree did not land where intended
    ++report.instances;
    const FieldElement oracle = coefficient_oracle(f, grid.top_monomial());
    if (!(oracle == r.direct_coefficient)) report.counterexample(detail::instance_text(f, grid) + ": coefficient lookup");
    if (!r.matches()) {
      ++mismatches;
      if (excess == 0)
        report.counterexample(detail::instance_text(f, grid) + ": weighted sum " + r.weighted_sum.to_string() +
                              " vs coefficient " + oracle.to_string());
    }
  }
  report.set("mismatches", std::to_string(mismatches));
  if (excess > 0) report.verdict("bound_is_sharp", mismatches > 0);
  detail::finish_report(report, clock);
  return report;
}

namespace detail {

// Multiplicative cosets in F7/F11 and additive cosets in F8/F9, |A| > 1.
inline Grid random_interpolation_grid(Rng& rng) {
  const std::size_t n = uniform(rng, 1, 3);
  const bool multiplicative = uniform(rng, 0, 1) == 0;
  const FieldCtx field = FieldCtx::of_order(multiplicative ? (uniform(rng, 0, 1) ? 7 : 11) : (uniform(rng, 0, 1) ? 8 : 9));
  const std::size_t max_size = n == 3 ? 6 : 11;
  std::vector<FiniteSet> factors;
  for (std::size_t i = 0; i < n; ++i) {
    if (multiplicative) {
      std::vector<std::uint64_t> ds;
      for (auto d : divisors(field.cardinality() - 1))
        if (d > 1 && d <= max_size) ds.push_back(d);
      factors.push_back(multiplicative_coset(field, pick(rng, ds), random_nonzero(rng, field)));
    } else {
      std::vector<FieldElement> gens{random_nonzero(rng, field)};
      if (n < 3 && uniform(rng, 0, 1)) gens.push_back(random_nonzero(rng, field));
      factors.push_back(additive_coset(field, gens, random_element(rng, field)));
    }
  }
  return Grid(factors);
}

}  // namespace detail

/// Round trip: values of a random f of degree <= lambda interpolate back to f.
inline ScanReport interpolation_suite(std::uint64_t seed, std::size_t count = 100) {
  detail::Stopwatch clock;
  detail::Rng rng(seed);
  ScanReport report = detail::start_report("interpolation", seed);
  for (std::size_t i = 0; i < count; ++i) {
    const Grid grid = detail::random_interpolation_grid(rng);
    const std::size_t lambda = detail::uniform(rng, 0, grid.joint_nullity());
    const MultiPoly f = detail::random_poly(rng, grid.field(), grid.dimension(), static_cast<long long>(lambda), 6, true);
    ++report.instances;
    const MultiPoly g = interpolate(grid, [&](const Point& a) { return f(a); }, lambda);
    bool same = g.terms().size() == f.terms().size();
    for (const auto& [m, c] : g.terms()) same = same && coefficient_oracle(f, m) == c;
    if (!same)
      report.counterexample(detail::instance_text(f, grid) + ", lambda " + std::to_string(lambda) + ": got " +
                            format_poly(g));
  }
  detail::finish_report(report, clock);
  return report;
}

namespace detail {

// Sets with positive Vandermonde degree: cosets of multiplicative subgroups,
// additive subgroups, and symmetric or zero-sum sets over Q.
inline FiniteSet random_vandermonde_set(Rng& rng, const FieldCtx& field) {
  if (!field.is_finite()) {
    const FieldElement a = random_nonzero(rng, field);
    if (uniform(rng, 0, 1)) return FiniteSet(field, {a, -a});
    for (;;) {
      const FieldElement b = random_nonzero(rng, field);
      const FieldElement c = -(a + b);
      if (!(a == b) && !(b == c) && !(a == c)) return FiniteSet(field, {a, b, c});
    }
  }
  if (uniform(rng, 0, 1)) {
    std::vector<std::uint64_t> ds;
    for (auto d : divisors(field.cardinality() - 1))
      if (d > 1 && d <= 8) ds.push_back(d);
    if (!ds.empty()) return multiplicative_coset(field, pick(rng, ds), random_nonzero(rng, field));
  }
  return additive_coset(field, {random_nonzero(rng, field)}, field.zero());
}

}  // namespace detail

/// sum_a f(a) = f(0) |A_1| ... |A_n| when each variable degree is at most the
/// joint Vandermonde degree.
inline ScanReport war1_suite(std::uint64_t seed, std::size_t count = 200) {
  detail::Stopwatch clock;
  detail::Rng rng(seed);
  ScanReport report = detail::start_report("war1", seed);
  static const std::vector<std::uint64_t> qs{0, 5, 7, 9, 11, 13};
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint64_t q = detail::pick(rng, qs);
    const FieldCtx field = q == 0 ? FieldCtx::rationals() : FieldCtx::of_order(q);
    const std::size_t n = detail::uniform(rng, 1, 3);
    std::vector<FiniteSet> factors;
    for (std::size_t j = 0; j < n; ++j) factors.push_back(detail::random_vandermonde_set(rng, field));
    const Grid grid(factors);
    const auto lambda = static_cast<unsigned>(grid.joint_vandermonde());
    const MultiPoly f = detail::random_poly(rng, field, n, static_cast<long long>(lambda) * static_cast<long long>(n), 6,
                                            false, std::vector<unsigned>(n, lambda));
    ++report.instances;
    const Point origin(n, field.zero());
    const FieldElement expected = f(origin) * field.from_int(static_cast<long long>(grid.point_count()));
    const FieldElement sum = grid_sum(f, grid, SumMode::Plain);
    if (!(sum == expected))
      report.counterexample(detail::instance_text(f, grid) + ": sum " + sum.to_string() + " vs " + expected.to_string());
  }
  detail::finish_report(report, clock);
  return report;
}

/// In characteristic p with p | |A_i| and deg f < n (lambda + 1), the plain sum
/// vanishes. Factors are additive cosets and random sets of size divisible by p;
/// lambda is their computed joint Vandermonde degree.
inline ScanReport war2_suite(std::uint64_t seed, std::size_t count = 200) {
  detail::Stopwatch clock;
  detail::Rng rng(seed);
  ScanReport report = detail::start_report("war2", seed);
  static const std::vector<std::uint64_t> qs{2, 3, 4, 5, 8, 9, 25, 27};
  for (std::size_t i = 0; i < count; ++i) {
    const FieldCtx field = FieldCtx::of_order(detail::pick(rng, qs));
    const std::uint64_t p = field.characteristic();
    const std::size_t n = detail::uniform(rng, 1, 3);
    std::vector<FiniteSet> factors;
    for (std::size_t j = 0; j < n; ++j) {
      if (detail::uniform(rng, 0, 2) == 0) {
        const std::uint64_t mult = detail::uniform(rng, 1, std::min<std::uint64_t>(field.cardinality() / p, 8 / p + 1));
        factors.push_back(detail::random_set(rng, field, p * mult));
      } else {
        std::vector<FieldElement> gens{detail::random_nonzero(rng, field)};
        if (field.cardinality() <= 9 && detail::uniform(rng, 0, 1)) gens.push_back(detail::random_nonzero(rng, field));
        factors.push_back(additive_coset(field, gens, detail::random_element(rng, field)));
      }
    }
    const Grid grid(factors);
    const long long top = static_cast<long long>(n) * static_cast<long long>(grid.joint_vandermonde() + 1) - 1;
    const MultiPoly f = detail::random_poly(rng, field, n, top, 6, true);
    ++report.instances;
    const FieldElement sum = grid_sum(f, grid, SumMode::Plain);
    if (!sum.is_zero()) report.counterexample(detail::instance_text(f, grid) + ": sum " + sum.to_string());
  }
  detail::finish_report(report, clock);
  return report;
}

namespace detail {

inline Grid random_subgroup_grid(Rng& rng, const FieldCtx& field, std::size_t n) {
  std::vector<FiniteSet> factors;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<FieldElement> gens{random_nonzero(rng, field)};
    while (gens.size() < field.degree() && field.cardinality() <= 16 && uniform(rng, 0, 2) == 0)
      gens.push_back(random_nonzero(rng, field));
    factors.push_back(additive_coset(field, gens, field.zero()));
  }
  return Grid(factors);
}

}  // namespace detail

/// Additive subgroups and deg f < n (min |A_i| - 1): the plain sum vanishes.
inline ScanReport war2add_suite(std::uint64_t seed, std::size_t count = 200) {
  detail::Stopwatch clock;
  detail::Rng rng(seed);
  ScanReport report = detail::start_report("war2add", seed);
  static const std::vector<std::uint64_t> qs{3, 4, 5, 7, 8, 9, 16, 25, 27};
  for (std::size_t i = 0; i < count; ++i) {
    const FieldCtx field = FieldCtx::of_order(detail::pick(rng, qs));
    const std::size_t n = detail::uniform(rng, 1, 3);
    const Grid grid = detail::random_subgroup_grid(rng, field, n);
    const auto sizes = grid.sizes();
    const auto min_size = static_cast<long long>(*std::min_element(sizes.begin(), sizes.end()));
    const long long top = static_cast<long long>(n) * (min_size - 1) - 1;
    const MultiPoly f = detail::random_poly(rng, field, n, top, 6, true);
    ++report.instances;
    const FieldElement sum = grid_sum(f, grid, SumMode::Plain);
    if (!sum.is_zero()) report.counterexample(detail::instance_text(f, grid) + ": sum " + sum.to_string());
  }
  detail::finish_report(report, clock);
  return report;
}

/// Additive subgroups, deg f <= sum(|A_i| - 1) + (1 - 1/p) min |A_i| - 1 and no
/// top grid monomial: the plain sum vanishes.
inline ScanReport mean0add_suite(std::uint64_t seed, std::size_t count = 200) {
  detail::Stopwatch clock;
  detail::Rng rng(seed);
  ScanReport report = detail::start_report("mean0add", seed);
  static const std::vector<std::uint64_t> qs{2, 3, 4, 5, 7, 8, 9, 16, 27};
  for (std::size_t i = 0; i < count; ++i) {
    const FieldCtx field = FieldCtx::of_order(detail::pick(rng, qs));
    const auto p = static_cast<long long>(field.characteristic());
    const std::size_t n = detail::uniform(rng, 1, 3);
    const Grid grid = detail::random_subgroup_grid(rng, field, n);
    const auto sizes = grid.sizes();
    const auto min_size = static_cast<long long>(*std::min_element(sizes.begin(), sizes.end()));
    const long long top = grid.top_degree() + min_size - min_size / p - 1;
    MultiPoly f = detail::random_poly(rng, field, n, top, 8, true);
    f.add_term(grid.top_monomial(), -f.coefficient(grid.top_monomial()));
    ++report.instances;
    const FieldElement sum = grid_sum(f, grid, SumMode::Plain);
    if (!sum.is_zero()) report.counterexample(detail::instance_text(f, grid) + ": sum " + sum.to_string());
  }
  detail::finish_report(report, clock);
  return report;
}

/// Multiplicative subgroups, deg f <= sum(|A_i| - 1) + min |A_i| - 1: the top
/// coefficient equals the average of a_1 ... a_n f(a) over the grid.
inline ScanReport multiplicative_suite(std::uint64_t seed, std::size_t count = 200) {
  detail::Stopwatch clock;
  detail::Rng rng(seed);
  ScanReport report = detail::start_report("multiplicative", seed);
  static const std::vector<std::uint64_t> qs{3, 4, 5, 7, 8, 9, 11, 13, 16};
  for (std::size_t i = 0; i < count; ++i) {
    const FieldCtx field = FieldCtx::of_order(detail::pick(rng, qs));
    const std::size_t n = detail::uniform(rng, 1, 3);
    std::vector<FiniteSet> factors;
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<std::uint64_t> ds;
      for (auto d : detail::divisors(field.cardinality() - 1))
        if (d <= 8) ds.push_back(d);
      factors.push_back(multiplicative_coset(field, detail::pick(rng, ds)));
    }
    const Grid grid(factors);
    const auto sizes = grid.sizes();
    const auto min_size = static_cast<long long>(*std::min_element(sizes.begin(), sizes.end()));
    const MultiPoly f = detail::random_poly(rng, field, n, grid.top_degree() + min_size - 1, 6, true);
    ++report.instances;
    FieldElement acc = field.zero();
    grid.for_each_point([&](const Point& a, const auto&) {
      FieldElement t = f(a);
      for (const auto& x : a) t *= x;
      acc += t;
    });
    const FieldElement average = acc / field.from_int(static_cast<long long>(grid.point_count()));
    const FieldElement expected = coefficient_oracle(f, grid.top_monomial());
    if (!(average == expected))
      report.counterexample(detail::instance_text(f, grid) + ": average " + average.to_string() + " vs " +
                            expected.to_string());
  }
  detail::finish_report(report, clock);
  return report;
}

/// Grids with entries in F3 inside F9. Values of an F3-polynomial interpolate
/// to coefficients in F3; a polynomial of degree <= lambda with a coefficient
/// outside F3 takes some value outside F3.
inline ScanReport subfield_suite(std::uint64_t seed, std::size_t count = 50) {
  detail::Stopwatch clock;
  detail::Rng rng(seed);
  ScanReport report = detail::start_report("subfield", seed);
  const FieldCtx big = FieldCtx::of_order(9);
  const std::vector<FiniteSet> bases{FiniteSet(big, {big.from_int(0), big.from_int(1), big.from_int(2)}),
                                     FiniteSet(big, {big.from_int(1), big.from_int(2)})};
  const FieldCtx small = FieldCtx::prime(3);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t n = detail::uniform(rng, 1, 3);
    std::vector<FiniteSet> factors;
    for (std::size_t j = 0; j < n; ++j) factors.push_back(detail::pick(rng, bases));
    const Grid grid(factors);
    const std::size_t lambda = grid.joint_nullity();
    ++report.instances;

    // F3 coefficients embedded in F9.
    const MultiPoly base = detail::random_poly(rng, small, n, static_cast<long long>(lambda), 4, true);
    MultiPoly f(big, n);
    for (const auto& [m, c] : base.terms())
      f.add_term(m, big.from_int(static_cast<long long>(c.index())));
    const MultiPoly g = interpolate(grid, [&](const Point& a) { return f(a); }, lambda);
    bool rational = g == f;
    for (const auto& [m, c] : g.terms()) rational = rational && big.in_prime_subfield(c);
    if (!rational) report.counterexample(detail::instance_text(f, grid) + ": interpolated " + format_poly(g));

    // Contrapositive: push one coefficient out of F3.
    MultiPoly h = f;
    Monomial m(n);
    detail::random_monomial(rng, n, static_cast<long long>(detail::uniform(rng, 0, lambda)), {}, m);
    h.add_term(m, big.generator() * big.from_int(static_cast<long long>(detail::uniform(rng, 1, 2))));
    bool leaves = false;
    grid.for_each_point([&](const Point& a, const auto&) { leaves = leaves || !big.in_prime_subfield(h(a)); });
    if (!leaves) report.counterexample(detail::instance_text(h, grid) + ": F3-valued with a coefficient outside F3");
  }
  detail::finish_report(report, clock);
  return report;
}

/// Names accepted by run_suite, in a stable order.
inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"moments", "sylvester",  "series",  "cn",       "cct",
                                              "cct-falsify", "interpolation", "war1", "war2", "war2add",
                                              "mean0add", "multiplicative", "subfield"};
  return names;
}

/// Runs a named randomized batch with its default instance count (or `count`
/// when nonzero).
inline ScanReport run_suite(const std::string& name, std::uint64_t seed, std::size_t count = 0) {
  auto n = [&](std::size_t dflt) { return count ? count : dflt; };
  if (name == "moments") return moments_suite(seed, n(200));
  if (name == "sylvester") return sylvester_suite(seed, n(200));
  if (name == "series") return series_suite(seed, n(20));
  if (name == "cn") return cn_suite(seed, n(500));
  if (name == "cct") return cct_suite(seed, n(500));
  if (name == "cct-falsify") return cct_suite(seed, n(200), 1);
  if (name == "interpolation") return interpolation_suite(seed, n(100));
  if (name == "war1") return war1_suite(seed, n(200));
  if (name == "war2") return war2_suite(seed, n(200));
  if (name == "war2add") return war2add_suite(seed, n(200));
  if (name == "mean0add") return mean0add_suite(seed, n(200));
  if (name == "multiplicative") return multiplicative_suite(seed, n(200));
  if (name == "subfield") return subfield_suite(seed, n(50));
  throw Error(Errc::SyntaxError, "unknown suite '" + name + "'");
}

}  // namespace gridnull
