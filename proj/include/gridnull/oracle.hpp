#pragma once

// Naive reference implementations. Nothing here calls the fast moment paths
// it is meant to check; inputs beyond the configured bounds are rejected.

#include <chrono>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "gridnull/field.hpp"
#include "gridnull/grids.hpp"
#include "gridnull/nullity.hpp"
#include "gridnull/poly.hpp"
#include "gridnull/report.hpp"
#include "gridnull/theorems.hpp"

namespace gridnull {

struct OracleConfig {
  std::size_t max_set_size = 8;
  std::size_t max_degree = 16;
  std::uint64_t max_subset_scan_q = 13;
  std::size_t series_truncation_order = 12;
  std::uint64_t rng_seed = 20240917;
};

/// Largest prime accepted by the all-pairs sumset scan.
inline constexpr std::uint64_t kMaxSumsetScanPrime = 7;

namespace detail {

inline void check_oracle_bounds(const FiniteSet& set, std::size_t degree, const OracleConfig& cfg) {
  if (set.size() > cfg.max_set_size)
    throw Error(Errc::SizeBoundExceeded, "|A| = " + std::to_string(set.size()) + " exceeds " +
                                             std::to_string(cfg.max_set_size));
  if (degree > cfg.max_degree)
    throw Error(Errc::SizeBoundExceeded, "degree " + std::to_string(degree) + " exceeds " +
                                             std::to_string(cfg.max_degree));
}

// Sum of a_1^{i_1} ... a_m^{i_m} over all i_1 + ... + i_m = r.
inline FieldElement complete_by_compositions(const std::vector<FieldElement>& a, std::size_t r,
                                             const FieldCtx& field) {
  FieldElement total = field.zero();
  std::function<void(std::size_t, std::size_t, FieldElement)> rec = [&](std::size_t i, std::size_t left,
                                                                        FieldElement acc) {
    if (i + 1 == a.size()) {
      total += acc * a[i].pow(static_cast<std::int64_t>(left));
      return;
    }
    FieldElement power = field.one();
    for (std::size_t k = 0; k <= left; ++k) {
      rec(i + 1, left - k, acc * power);
      power *= a[i];
    }
  };
  rec(0, r, field.one());
  return total;
}

inline std::string subset_text(const FieldCtx& field, std::uint64_t mask) {
  std::string out = "{";
  bool first = true;
  for (std::uint64_t i = 0; i < 64; ++i)
    if (mask >> i & 1) {
      out += (first ? "" : ", ") + field.from_index(i).to_string();
      first = false;
    }
  return out + "}";
}

inline FiniteSet subset_of(const FieldCtx& field, std::uint64_t mask) {
  std::vector<FieldElement> elems;
  for (std::uint64_t i = 0; i < field.cardinality(); ++i)
    if (mask >> i & 1) elems.push_back(field.from_index(i));
  return FiniteSet(field, elems);
}

inline std::uint64_t binomial_mod(std::uint64_t n, std::uint64_t k, std::uint64_t p) {
  // Lucas: product of digit binomials.
  std::uint64_t result = 1;
  while (n || k) {
    const std::uint64_t ni = n % p, ki = k % p;
    if (ki > ni) return 0;
    std::uint64_t c = 1;
    for (std::uint64_t j = 0; j < ki; ++j) c = c * (ni - j) / (j + 1);
    result = result * (c % p) % p;
    n /= p;
    k /= p;
  }
  return result;
}

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

}  // namespace detail

/// e_r by r-subset sums, h_r by weak compositions, p_r by direct powers.
inline MomentTable moments_bruteforce(const FiniteSet& set, std::size_t bound, const OracleConfig& cfg = {}) {
  detail::check_oracle_bounds(set, bound, cfg);
  const FieldCtx& field = set.field();
  const auto& a = set.elements();
  const std::size_t m = a.size();
  MomentTable t;
  for (std::size_t r = 0; r <= bound; ++r) {
    FieldElement e = field.zero();
    if (r <= m)
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcountll(mask)) != r) continue;
        FieldElement prod = field.one();
        for (std::size_t i = 0; i < m; ++i)
          if (mask >> i & 1) prod *= a[i];
        e += prod;
      }
    t.e.push_back(e);
    t.h.push_back(detail::complete_by_compositions(a, r, field));
    FieldElement p = field.zero();
    for (const auto& x : a) p += x.pow(static_cast<std::int64_t>(r));
    t.p.push_back(p);
  }
  return t;
}

/// sum over i_1 + ... + i_m = d - m + 1 of a_1^{i_1} ... a_m^{i_m}; empty for
/// d < m - 1.
inline FieldElement sylvester_rhs_bruteforce(const FiniteSet& set, std::size_t d, const OracleConfig& cfg = {}) {
  detail::check_oracle_bounds(set, d, cfg);
  if (d + 1 < set.size()) return set.field().zero();
  return detail::complete_by_compositions(set.elements(), d + 1 - set.size(), set.field());
}

/// Compares sum_p h_p z^{p+m-1} / (p+m-1)! with sum_k e^{a_k z} / prod_{j != k}(a_k - a_j)
/// coefficientwise up to z^order, exactly over Q.
inline bool exp_series_check(const FiniteSet& set, std::size_t order, const OracleConfig& cfg = {}) {
  const FieldCtx& field = set.field();
  if (field.kind() != FieldKind::Rationals) throw Error(Errc::FieldNotRationals, "series check runs over Q");
  if (set.size() < 2) throw Error(Errc::PreconditionViolated, "series check needs |A| >= 2");
  if (order > cfg.series_truncation_order)
    throw Error(Errc::SizeBoundExceeded, "truncation order " + std::to_string(order) + " exceeds " +
                                             std::to_string(cfg.series_truncation_order));
  const auto& a = set.elements();
  const std::size_t m = a.size();
  std::vector<FieldElement> denominators;
  for (std::size_t k = 0; k < m; ++k) {
    FieldElement d = field.one();
    for (std::size_t j = 0; j < m; ++j)
      if (j != k) d *= a[k] - a[j];
    denominators.push_back(d);
  }
  mpz_class factorial = 1;
  for (std::size_t d = 0; d <= order; ++d) {
    if (d > 0) factorial *= static_cast<unsigned long>(d);
    const FieldElement inv_fact = field.from_mpz(factorial).inv();
    FieldElement lhs = field.zero();
    if (d + 1 >= m) lhs = detail::complete_by_compositions(a, d + 1 - m, field) * inv_fact;
    FieldElement rhs = field.zero();
    for (std::size_t k = 0; k < m; ++k) rhs += a[k].pow(static_cast<std::int64_t>(d)) * inv_fact / denominators[k];
    if (!(lhs == rhs)) return false;
  }
  return true;
}

/// S_d(a_1..a_m) = sum_{e<d} S_e(a_1..a_{m-1}) a_m^{d-e-1}, with S evaluated by
/// sylvester_sum on the prefix sets.
inline bool sylvester_recurrence_holds(const FiniteSet& set, std::size_t d) {
  if (set.size() < 2) return true;
  const FieldCtx& field = set.field();
  std::vector<FieldElement> prefix(set.elements().begin(), set.elements().end() - 1);
  const FiniteSet head(field, prefix);
  const FieldElement last = set.elements().back();
  FieldElement rhs = field.zero();
  for (std::size_t e = 0; e < d; ++e)
    rhs += sylvester_sum(head, e) * last.pow(static_cast<std::int64_t>(d - e - 1));
  return sylvester_sum(set, d) == rhs;
}

/// 1 / Pi_A(x) = sum_k (Pi'_A(a_k))^{-1} / (x - a_k) for x outside A.
inline bool partial_fraction_holds(const FiniteSet& set, const FieldElement& x) {
  if (set.contains(x)) throw Error(Errc::PreconditionViolated, "evaluation point lies in the set");
  const UniPoly dpi = set.char_poly().derivative();
  FieldElement rhs = set.field().zero();
  for (const auto& a : set.elements()) rhs += dpi(a).inv() / (x - a);
  return set.char_poly()(x).inv() == rhs;
}

/// Coefficient by linear search over the term list; the independent side of
/// coefficient equivalence checks.
inline FieldElement coefficient_oracle(const MultiPoly& f, const Monomial& k) {
  if (k.size() != f.variables()) throw Error(Errc::DimensionMismatch, "monomial arity mismatch");
  for (const auto& [m, c] : f.terms())
    if (m.exponents() == k.exponents()) return c;
  return f.field().zero();
}

/// Every subset of F_q with nullity >= (q-1)/2 must be F_q or F_q^*.
inline ScanReport redei_scan(std::uint64_t q, const OracleConfig& cfg = {}) {
  detail::Stopwatch clock;
  if (q % 2 == 0) throw Error(Errc::EvenQ, "(q-1)/2 is not an integer for even q = " + std::to_string(q));
  if (q <= 3) throw Error(Errc::PreconditionViolated, "classification needs q > 3");
  if (q > cfg.max_subset_scan_q)
    throw Error(Errc::ScanTooLarge, "q = " + std::to_string(q) + " exceeds " + std::to_string(cfg.max_subset_scan_q));
  const FieldCtx field = FieldCtx::of_order(q);
  const std::size_t level = (q - 1) / 2;
  const std::uint64_t all = (std::uint64_t{1} << q) - 1;
  const std::uint64_t units = all & ~std::uint64_t{1};
  ScanReport report;
  report.name = "redei";
  report.set("q", std::to_string(q));
  report.set("field", field.to_string());
  report.set("level", std::to_string(level));
  std::uint64_t null_count = 0;
  bool full_found = false, units_found = false;
  for (std::uint64_t mask = 1; mask <= all; ++mask) {
    ++report.instances;
    const FiniteSet set = detail::subset_of(field, mask);
    if (nullity(set) < level) continue;
    ++null_count;
    if (mask == all)
      full_found = true;
    else if (mask == units)
      units_found = true;
    else
      report.counterexample(detail::subset_text(field, mask) + " is " + std::to_string(nullity(set)) + "-null");
  }
  report.set("null_subsets", std::to_string(null_count));
  report.verdict("full_field_is_null", full_found);
  report.verdict("units_are_null", units_found);
  report.sort_counterexamples();
  report.elapsed_seconds = clock.seconds();
  return report;
}

/// All (2^p - 1)^2 pairs of nonempty subsets of F_p against the sumset dichotomy.
inline ScanReport scd_scan(std::uint64_t p, const OracleConfig& = {}) {
  detail::Stopwatch clock;
  if (p > kMaxSumsetScanPrime)
    throw Error(Errc::ScanTooLarge, "p = " + std::to_string(p) + " exceeds " + std::to_string(kMaxSumsetScanPrime));
  const FieldCtx field = FieldCtx::prime(p);
  const std::uint64_t all = (std::uint64_t{1} << p) - 1;
  std::vector<FiniteSet> subsets;
  for (std::uint64_t mask = 1; mask <= all; ++mask) subsets.push_back(detail::subset_of(field, mask));
  ScanReport report;
  report.name = "scd";
  report.set("p", std::to_string(p));
  std::uint64_t structured = 0, large_only = 0;
  for (std::uint64_t i = 0; i < subsets.size(); ++i)
    for (std::uint64_t j = 0; j < subsets.size(); ++j) {
      ++report.instances;
      const SumsetReport r = cauchy_davenport(subsets[i], subsets[j]);
      if (r.structured)
        ++structured;
      else if (r.large)
        ++large_only;
      else
        report.counterexample("A = " + subsets[i].to_string() + ", B = " + subsets[j].to_string() +
                              ", A+B = " + r.sumset.to_string());
    }
  report.set("pairs", std::to_string(report.instances));
  report.set("structured_pairs", std::to_string(structured));
  report.set("large_only_pairs", std::to_string(large_only));
  report.sort_counterexamples();
  report.elapsed_seconds = clock.seconds();
  return report;
}

/// Checks, for shift + span(generators): the characteristic polynomial is
/// supported on {0} and powers of p; C(|A|-r, k-r) e_r(A) = 0 for
/// 0 <= r < k <= |A|-1; e_k is invariant under translation by the subgroup;
/// the coefficient of X equals the product of the nonzero subgroup elements
/// and is nonzero; subgroups have zero constant term.
inline bool ore_form_check(const FieldCtx& field, const std::vector<FieldElement>& generators,
                           const FieldElement& shift) {
  if (!field.is_finite()) throw Error(Errc::CharacteristicZero, "Ore form needs positive characteristic");
  const std::uint64_t p = field.characteristic();
  const FiniteSet subgroup = additive_coset(field, generators, field.zero());
  const FiniteSet coset = additive_coset(field, generators, shift);
  const std::size_t m = coset.size();
  const auto& pi = coset.char_poly().coefficients();

  for (std::size_t deg = 1; deg < pi.size(); ++deg) {
    std::uint64_t pk = 1;
    while (pk < deg) pk *= p;
    if (pk != deg && !pi[deg].is_zero()) return false;
  }

  const auto e = coset.elementary_moments(m);
  for (std::size_t k = 1; k + 1 <= m; ++k)
    for (std::size_t r = 0; r < k; ++r) {
      const auto c = field.from_int(static_cast<long long>(detail::binomial_mod(m - r, k - r, p)));
      if (!(c * e[r]).is_zero()) return false;
    }

  for (const auto& c : subgroup.elements()) {
    std::vector<FieldElement> moved;
    for (const auto& a : coset.elements()) moved.push_back(c + a);
    const auto e_moved = FiniteSet(field, moved).elementary_moments(m - 1);
    for (std::size_t k = 0; k + 1 <= m; ++k)
      if (!(e_moved[k] == e[k])) return false;
  }

  FieldElement product = field.one();
  for (const auto& b : subgroup.elements())
    if (!b.is_zero()) product *= b;
  if (product.is_zero() || !(pi[1] == product)) return false;
  if (subgroup.contains(shift) && !pi[0].is_zero()) return false;

  if (m > 1 && static_cast<long long>(nullity(coset)) < static_cast<long long>(m - m / p) - 1) return false;
  return true;
}

/// Distinct additive subgroups of a finite field, found as spans of generator
/// subsets of size at most the field degree. Each entry is an independent
/// generator list; the first entry is the trivial subgroup.
inline std::vector<std::vector<FieldElement>> additive_subgroup_generators(const FieldCtx& field) {
  const auto elems = field.elements();
  std::set<std::vector<std::uint64_t>> seen;
  std::vector<std::vector<FieldElement>> out;
  std::function<void(std::vector<FieldElement>&)> rec = [&](std::vector<FieldElement>& gens) {
    const FiniteSet span = additive_coset(field, gens, field.zero());
    std::vector<std::uint64_t> key;
    for (const auto& x : span.elements()) key.push_back(x.index());
    std::sort(key.begin(), key.end());
    if (!seen.insert(key).second) return;
    out.push_back(gens);
    if (gens.size() == field.degree()) return;
    for (std::size_t i = 1; i < elems.size(); ++i) {
      if (span.contains(elems[i])) continue;
      gens.push_back(elems[i]);
      rec(gens);
      gens.pop_back();
    }
  };
  std::vector<FieldElement> gens;
  rec(gens);
  return out;
}

/// ore_form_check over every additive subgroup of F_q and each of its cosets.
inline ScanReport ore_scan(std::uint64_t q) {
  detail::Stopwatch clock;
  const FieldCtx field = FieldCtx::of_order(q);
  ScanReport report;
  report.name = "ore";
  report.set("q", std::to_string(q));
  report.set("field", field.to_string());
  std::uint64_t subgroups = 0;
  for (const auto& gens : additive_subgroup_generators(field)) {
    ++subgroups;
    const FiniteSet sub = additive_coset(field, gens, field.zero());
    std::vector<bool> covered(q, false);
    for (const auto& shift : field.elements()) {
      if (covered[shift.index()]) continue;
      for (const auto& s : sub.elements()) covered[(s + shift).index()] = true;
      ++report.instances;
      if (!ore_form_check(field, gens, shift)) {
        std::string g;
        for (const auto& x : gens) g += (g.empty() ? "" : ";") + x.to_string();
        report.counterexample("add(" + g + "," + shift.to_string() + ")");
      }
    }
  }
  report.set("subgroups", std::to_string(subgroups));
  report.sort_counterexamples();
  report.elapsed_seconds = clock.seconds();
  return report;
}

}  // namespace gridnull
