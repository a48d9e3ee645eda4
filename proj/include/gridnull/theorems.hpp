#pragma once

// Engines for polynomials over grids. Every engine evaluates unconditionally
// over the full grid and reports whether the hypotheses of the corresponding
// statement hold, so out-of-bound instances can be probed as well.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gridnull/field.hpp"
#include "gridnull/grids.hpp"
#include "gridnull/nullity.hpp"
#include "gridnull/poly.hpp"
#include "gridnull/report.hpp"

namespace gridnull {

struct WitnessReport {
  bool hypothesis_ok = false;
  std::vector<Monomial> qualifying_monomials;
  std::optional<Point> witness;
  std::uint64_t zero_count = 0;
  std::uint64_t nonzero_count = 0;
  Degree degree = Degree::minus_infinity();
  std::size_t joint_nullity = 0;
  std::vector<std::size_t> factor_nullities;
  bool singleton_factor = false;

  friend bool operator==(const WitnessReport&, const WitnessReport&) = default;
};

struct CoefficientReport {
  Monomial target;
  FieldElement weighted_sum;
  FieldElement direct_coefficient;
  bool degree_bound_ok = false;
  Degree degree = Degree::minus_infinity();
  long long degree_bound = 0;  // sum (|A_i| - 1) + joint nullity

  bool matches() const { return weighted_sum == direct_coefficient; }
  friend bool operator==(const CoefficientReport&, const CoefficientReport&) = default;
};

struct PuncturedReport {
  std::uint64_t zero_count = 0;
  std::uint64_t nonzero_count = 0;
  bool verdict = false;  // nonzero_count != 1
};

struct SumsetReport {
  FiniteSet sumset;
  std::size_t nullity_a = 0, nullity_b = 0, nullity_sum = 0;
  std::size_t size_a = 0, size_b = 0, size_sum = 0;
  bool structured = false;  // nullity(A+B) >= min(nullity(A), nullity(B))
  bool large = false;       // |A+B| >= |A| + |B| + nullity(A+B)
  bool verdict() const { return structured || large; }
};

/// Which sufficient conditions for the plane properties apply to a grid.
struct PlaneConditions {
  long long grid_degree = 0;  // sum (|A_i| - 1)
  std::uint64_t q = 0;
  std::size_t joint_nullity = 0;
  bool unstructured_pp = false;  // sum > q - 1
  bool structured_pp = false;    // q - 1 - lambda <= sum < q - 1
  bool additive_subgroups = false;
  bool pp_p = false;  // subgroups, sum != q - 1, q - 1 < sum + (1 - 1/p) min |A_i|

  bool pp_guaranteed() const { return unstructured_pp || structured_pp || pp_p; }
};

struct PlaneReport {
  std::vector<FieldElement> coefficients;
  std::uint64_t intersection_count = 0;
  bool pp = false;    // intersection_count != 1
  bool pp_p = false;  // intersection_count divisible by p
  PlaneConditions conditions;
};

enum class SumMode { Plain, Weighted };

namespace detail {

inline void check_arity(const MultiPoly& f, const Grid& grid) {
  if (f.variables() != grid.dimension())
    throw Error(Errc::DimensionMismatch, "polynomial has " + std::to_string(f.variables()) + " variables, grid has " +
                                             std::to_string(grid.dimension()) + " factors");
  if (!(f.field() == grid.field())) throw Error(Errc::MixedFields, "polynomial and grid live over different fields");
}

}  // namespace detail

/// Qualifying monomials X^k have a nonzero coefficient, k_i < |A_i| and
/// deg f <= sum k_i + joint nullity. The witness is the first grid point in
/// enumeration order where f does not vanish.
inline WitnessReport gcn_check(const MultiPoly& f, const Grid& grid) {
  detail::check_arity(f, grid);
  WitnessReport r;
  r.degree = f.total_degree();
  r.joint_nullity = grid.joint_nullity();
  r.factor_nullities = grid.factor_nullities();
  r.singleton_factor = grid.has_singleton();
  const auto sizes = grid.sizes();
  for (const auto& [m, c] : f.terms()) {
    bool inside = true;
    for (std::size_t i = 0; i < sizes.size(); ++i) inside = inside && m[i] < sizes[i];
    if (inside && r.degree <= Degree(m.total_degree() + static_cast<long long>(r.joint_nullity)))
      r.qualifying_monomials.push_back(m);
  }
  r.hypothesis_ok = !r.qualifying_monomials.empty();
  grid.for_each_point([&](const Point& a, const auto&) {
    if (f(a).is_zero()) {
      ++r.zero_count;
    } else {
      ++r.nonzero_count;
      if (!r.witness) r.witness = a;
    }
  });
  return r;
}

/// Plain sum of f(a), or the weighted sum of w_a f(a), over the grid.
inline FieldElement grid_sum(const MultiPoly& f, const Grid& grid, SumMode mode) {
  detail::check_arity(f, grid);
  FieldElement acc = grid.field().zero();
  grid.for_each_point([&](const Point& a, const std::vector<std::size_t>& idx) {
    const FieldElement v = f(a);
    acc += mode == SumMode::Weighted ? grid.weight_at(idx) * v : v;
  });
  return acc;
}

/// Both sides of the coefficient identity for the top grid monomial.
inline CoefficientReport cct_coefficient(const MultiPoly& f, const Grid& grid) {
  detail::check_arity(f, grid);
  CoefficientReport r;
  r.target = grid.top_monomial();
  r.degree = f.total_degree();
  r.degree_bound = grid.top_degree() + static_cast<long long>(grid.joint_nullity());
  r.degree_bound_ok = r.degree <= Degree(r.degree_bound);
  r.weighted_sum = grid_sum(f, grid, SumMode::Weighted);
  r.direct_coefficient = f.coefficient(r.target);
  return r;
}

/// Coefficient of X^k recovered from grid values via degree raising.
inline FieldElement extract_coefficient(const MultiPoly& f, const Grid& grid, const Monomial& k) {
  detail::check_arity(f, grid);
  const MultiPoly raised = raise_degree(f, grid, k);
  const long long bound = grid.top_degree() + static_cast<long long>(grid.joint_nullity());
  if (raised.total_degree() > Degree(bound))
    throw Error(Errc::DegreeBoundViolated, "raised degree " + raised.total_degree().to_string() + " exceeds " +
                                               std::to_string(bound));
  return grid_sum(raised, grid, SumMode::Weighted);
}

/// Rebuilds the polynomial of degree <= lambda from its grid values:
/// coefficient of X^k = sum_a a_1^{|A_1|-k_1-1} ... a_n^{|A_n|-k_n-1} w_a v(a).
inline MultiPoly interpolate(const Grid& grid, const std::function<FieldElement(const Point&)>& values,
                             std::size_t lambda) {
  for (std::size_t i = 0; i < grid.dimension(); ++i)
    if (grid.factor(i).is_singleton())
      throw Error(Errc::SingletonFactor, "factor " + std::to_string(i + 1) + " is a singleton");
  if (lambda > grid.joint_nullity())
    throw Error(Errc::LambdaExceedsNullity, "lambda = " + std::to_string(lambda) + " exceeds joint nullity " +
                                                std::to_string(grid.joint_nullity()));
  const FieldCtx& field = grid.field();
  const std::size_t n = grid.dimension();
  const auto sizes = grid.sizes();

  // w_a v(a) once per point, with coordinate indices.
  std::vector<std::vector<std::size_t>> indices;
  std::vector<FieldElement> weighted;
  grid.for_each_point([&](const Point& a, const std::vector<std::size_t>& idx) {
    const FieldElement v = values(a);
    field.check(v);
    indices.push_back(idx);
    weighted.push_back(grid.weight_at(idx) * v);
  });

  // powers[i][j][e] = (j-th element of A_i)^e
  std::vector<std::vector<std::vector<FieldElement>>> powers(n);
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& x : grid.factor(i).elements()) {
      std::vector<FieldElement> pw{field.one()};
      for (std::size_t e = 1; e < sizes[i]; ++e) pw.push_back(pw.back() * x);
      powers[i].push_back(std::move(pw));
    }

  MultiPoly out(field, n);
  Monomial k(n);
  // Enumerate all k with |k| <= lambda.
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t budget) {
    if (i == n) {
      FieldElement c = field.zero();
      for (std::size_t pt = 0; pt < weighted.size(); ++pt) {
        FieldElement t = weighted[pt];
        for (std::size_t j = 0; j < n; ++j) t *= powers[j][indices[pt][j]][sizes[j] - k[j] - 1];
        c += t;
      }
      out.add_term(k, c);
      return;
    }
    for (std::size_t e = 0; e <= budget; ++e) {
      k[i] = static_cast<unsigned>(e);
      rec(i + 1, budget - e);
    }
    k[i] = 0;
  };
  rec(0, lambda);
  return out;
}

/// Map-valued overload; every grid point must carry a value.
inline MultiPoly interpolate(const Grid& grid, const std::map<Point, FieldElement>& values, std::size_t lambda) {
  return interpolate(
      grid,
      [&](const Point& a) {
        auto it = values.find(a);
        if (it == values.end()) {
          std::string s = "(";
          for (std::size_t i = 0; i < a.size(); ++i) s += (i ? ", " : "") + a[i].to_string();
          throw Error(Errc::MissingValue, "no value at " + s + ")");
        }
        return it->second;
      },
      lambda);
}

/// Counts the nonzero values of f when the top grid coefficient vanishes and
/// the degree is within the coefficient bound; f can then not be nonzero at
/// exactly one point.
inline PuncturedReport punctured_check(const MultiPoly& f, const Grid& grid) {
  detail::check_arity(f, grid);
  const long long bound = grid.top_degree() + static_cast<long long>(grid.joint_nullity());
  if (f.total_degree() > Degree(bound))
    throw Error(Errc::PreconditionViolated,
                "degree " + f.total_degree().to_string() + " exceeds " + std::to_string(bound));
  if (!f.coefficient(grid.top_monomial()).is_zero())
    throw Error(Errc::PreconditionViolated, "coefficient of the top grid monomial " + grid.top_monomial().to_string() +
                                                " is nonzero");
  PuncturedReport r;
  grid.for_each_point([&](const Point& a, const auto&) {
    if (f(a).is_zero())
      ++r.zero_count;
    else
      ++r.nonzero_count;
  });
  r.verdict = r.nonzero_count != 1;
  return r;
}

/// Sumset dichotomy over a prime field.
inline SumsetReport cauchy_davenport(const FiniteSet& a, const FiniteSet& b) {
  const FieldCtx& field = a.field();
  if (!(b.field() == field)) throw Error(Errc::MixedFields, "sets belong to different fields");
  if (field.kind() != FieldKind::Prime) throw Error(Errc::NotPrimeField, "sumset dichotomy needs F_p");
  std::vector<bool> seen(field.cardinality(), false);
  std::vector<FieldElement> sums;
  for (const auto& x : a.elements())
    for (const auto& y : b.elements()) {
      const FieldElement s = x + y;
      if (!seen[s.index()]) {
        seen[s.index()] = true;
        sums.push_back(s);
      }
    }
  std::sort(sums.begin(), sums.end());
  SumsetReport r{FiniteSet(field, sums)};
  r.nullity_a = nullity(a);
  r.nullity_b = nullity(b);
  r.nullity_sum = nullity(r.sumset);
  r.size_a = a.size();
  r.size_b = b.size();
  r.size_sum = r.sumset.size();
  r.structured = r.nullity_sum >= std::min(r.nullity_a, r.nullity_b);
  r.large = r.size_sum >= r.size_a + r.size_b + r.nullity_sum;
  return r;
}

inline PlaneConditions plane_conditions(const Grid& grid) {
  PlaneConditions c;
  c.grid_degree = grid.top_degree();
  c.q = grid.field().cardinality();
  c.joint_nullity = grid.joint_nullity();
  const auto q1 = static_cast<long long>(c.q) - 1;
  c.unstructured_pp = c.grid_degree > q1;
  c.structured_pp = q1 - static_cast<long long>(c.joint_nullity) <= c.grid_degree && c.grid_degree < q1;
  c.additive_subgroups = std::all_of(grid.factors().begin(), grid.factors().end(),
                                     [](const FiniteSet& s) { return is_additive_subgroup(s); });
  if (c.additive_subgroups) {
    const auto p = static_cast<long long>(grid.field().characteristic());
    const auto sizes = grid.sizes();
    const auto min_size = static_cast<long long>(*std::min_element(sizes.begin(), sizes.end()));
    c.pp_p = c.grid_degree != q1 && q1 < c.grid_degree + (min_size - min_size / p);
  }
  return c;
}

/// N = #{a in grid : c_1 a_1 + ... + c_n a_n = 0} for the plane through the
/// origin with normal c.
inline PlaneReport plane_grid_count(const std::vector<FieldElement>& c, const Grid& grid) {
  const FieldCtx& field = grid.field();
  if (!field.is_finite()) throw Error(Errc::InfiniteField, "plane counts need a finite field");
  if (c.size() != grid.dimension()) throw Error(Errc::DimensionMismatch, "normal vector arity differs from grid");
  for (const auto& x : c) field.check(x);
  if (std::all_of(c.begin(), c.end(), [](const FieldElement& x) { return x.is_zero(); }))
    throw Error(Errc::ZeroVector, "plane normal must be nonzero");
  PlaneReport r;
  r.coefficients = c;
  r.conditions = plane_conditions(grid);
  grid.for_each_point([&](const Point& a, const auto&) {
    FieldElement s = field.zero();
    for (std::size_t i = 0; i < a.size(); ++i) s += c[i] * a[i];
    if (s.is_zero()) ++r.intersection_count;
  });
  r.pp = r.intersection_count != 1;
  r.pp_p = r.intersection_count % field.characteristic() == 0;
  return r;
}

/// Calls fn on every nonzero vector of F_q^n whose first nonzero coordinate is 1.
template <class Fn>
void for_each_plane(const FieldCtx& field, std::size_t n, Fn&& fn) {
  const std::uint64_t q = field.cardinality();
  for (std::size_t lead = 0; lead < n; ++lead) {
    const std::size_t free = n - lead - 1;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < free; ++i) total *= q;
    for (std::uint64_t code = 0; code < total; ++code) {
      std::vector<FieldElement> c(n, field.zero());
      c[lead] = field.one();
      std::uint64_t rest = code;
      for (std::size_t i = n; i-- > lead + 1;) {
        c[i] = field.from_index(rest % q);
        rest /= q;
      }
      fn(static_cast<const std::vector<FieldElement>&>(c));
    }
  }
}

/// Every plane through the origin against the grid. Fails only when a
/// sufficient condition applies and the guaranteed property is violated.
inline ScanReport plane_scan(const Grid& grid) {
  ScanReport report;
  report.name = "plane-scan";
  const PlaneConditions cond = plane_conditions(grid);
  std::uint64_t single = 0, not_divisible = 0;
  std::uint64_t min_count = ~std::uint64_t{0}, max_count = 0;
  const auto p = grid.field().characteristic();
  for_each_plane(grid.field(), grid.dimension(), [&](const std::vector<FieldElement>& c) {
    const PlaneReport r = plane_grid_count(c, grid);
    ++report.instances;
    min_count = std::min(min_count, r.intersection_count);
    max_count = std::max(max_count, r.intersection_count);
    std::string normal = "(";
    for (std::size_t i = 0; i < c.size(); ++i) normal += (i ? ", " : "") + c[i].to_string();
    normal += ")";
    if (!r.pp) {
      ++single;
      if (cond.pp_guaranteed())
        report.counterexample("plane " + normal + " meets the grid in exactly one point");
    }
    if (!r.pp_p) {
      ++not_divisible;
      if (cond.pp_p)
        report.counterexample("plane " + normal + " meets the grid in " + std::to_string(r.intersection_count) +
                              " points, not a multiple of " + std::to_string(p));
    }
  });
  report.set("grid_degree", std::to_string(cond.grid_degree));
  report.set("q", std::to_string(cond.q));
  report.set("joint_nullity", std::to_string(cond.joint_nullity));
  report.set("condition_unstructured_pp", cond.unstructured_pp ? "true" : "false");
  report.set("condition_structured_pp", cond.structured_pp ? "true" : "false");
  report.set("condition_pp_p", cond.pp_p ? "true" : "false");
  report.set("planes_single_point", std::to_string(single));
  report.set("planes_not_multiple_of_p", std::to_string(not_divisible));
  report.set("min_intersection", std::to_string(min_count));
  report.set("max_intersection", std::to_string(max_count));
  // Only properties backed by a sufficient condition count towards passing.
  if (cond.pp_guaranteed()) report.verdict("pp", single == 0);
  if (cond.pp_p) report.verdict("pp_p", not_divisible == 0);
  report.sort_counterexamples();
  return report;
}

}  // namespace gridnull
