#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "gridnull/field.hpp"
#include "gridnull/nullity.hpp"
#include "gridnull/poly.hpp"

namespace gridnull {

/// A_1 x ... x A_n over one field, with per-factor and joint structure levels.
class Grid {
 public:
  explicit Grid(std::vector<FiniteSet> factors) : factors_(std::move(factors)) {
    if (factors_.empty()) throw Error(Errc::EmptyFactorList, "a grid needs at least one factor");
    const FieldCtx field = factors_.front().field();
    for (const auto& f : factors_) {
      if (!(f.field() == field)) throw Error(Errc::MixedFields, "grid factors belong to different fields");
      nullities_.push_back(nullity(f));
      vandermonde_.push_back(vandermonde_degree(f));
      has_singleton_ = has_singleton_ || f.is_singleton();
    }
    joint_nullity_ = *std::min_element(nullities_.begin(), nullities_.end());
    joint_vandermonde_ = *std::min_element(vandermonde_.begin(), vandermonde_.end());
    for (const auto& f : factors_) {
      const UniPoly d = f.char_poly().derivative();
      std::vector<FieldElement> w;
      for (const auto& a : f.elements()) w.push_back(d(a).inv());
      inverse_derivatives_.push_back(std::move(w));
    }
  }

  const FieldCtx& field() const { return factors_.front().field(); }
  std::size_t dimension() const { return factors_.size(); }
  const std::vector<FiniteSet>& factors() const { return factors_; }
  const FiniteSet& factor(std::size_t i) const { return factors_[i]; }

  std::vector<std::size_t> sizes() const {
    std::vector<std::size_t> s;
    for (const auto& f : factors_) s.push_back(f.size());
    return s;
  }
  std::uint64_t point_count() const {
    std::uint64_t n = 1;
    for (const auto& f : factors_) n *= f.size();
    return n;
  }
  /// sum (|A_i| - 1), the degree of the top grid monomial.
  long long top_degree() const {
    long long s = 0;
    for (const auto& f : factors_) s += static_cast<long long>(f.size()) - 1;
    return s;
  }
  Monomial top_monomial() const {
    Monomial m(dimension());
    for (std::size_t i = 0; i < dimension(); ++i) m[i] = static_cast<unsigned>(factors_[i].size() - 1);
    return m;
  }

  const std::vector<std::size_t>& factor_nullities() const { return nullities_; }
  const std::vector<std::size_t>& factor_vandermonde_degrees() const { return vandermonde_; }
  std::size_t joint_nullity() const { return joint_nullity_; }
  std::size_t joint_vandermonde() const { return joint_vandermonde_; }
  bool has_singleton() const { return has_singleton_; }

  /// Visits every point in lexicographic order over the factor orders.
  template <class Fn>
  void for_each_point(Fn&& fn) const {
    std::vector<std::size_t> idx(dimension(), 0);
    Point point;
    for (const auto& f : factors_) point.push_back(f.elements().front());
    for (;;) {
      fn(static_cast<const Point&>(point), static_cast<const std::vector<std::size_t>&>(idx));
      std::size_t i = dimension();
      for (;;) {
        if (i == 0) return;
        --i;
        if (++idx[i] < factors_[i].size()) {
          point[i] = factors_[i].elements()[idx[i]];
          break;
        }
        idx[i] = 0;
        point[i] = factors_[i].elements().front();
      }
    }
  }

  std::vector<Point> points() const {
    std::vector<Point> out;
    out.reserve(point_count());
    for_each_point([&](const Point& p, const auto&) { out.push_back(p); });
    return out;
  }

  /// w_a = 1 / (Pi'_{A_1}(a_1) ... Pi'_{A_n}(a_n)).
  FieldElement weight(const Point& a) const {
    if (a.size() != dimension()) throw Error(Errc::DimensionMismatch, "point arity differs from grid dimension");
    FieldElement w = field().one();
    for (std::size_t i = 0; i < dimension(); ++i) {
      const auto& elems = factors_[i].elements();
      auto it = std::find(elems.begin(), elems.end(), a[i]);
      if (it == elems.end())
        throw Error(Errc::PointNotOnGrid, "coordinate " + std::to_string(i + 1) + " = " + a[i].to_string() +
                                              " is not in factor " + factors_[i].to_string());
      w *= inverse_derivatives_[i][static_cast<std::size_t>(it - elems.begin())];
    }
    return w;
  }

  /// Weight by factor indices, as passed to for_each_point callbacks.
  FieldElement weight_at(const std::vector<std::size_t>& idx) const {
    FieldElement w = field().one();
    for (std::size_t i = 0; i < dimension(); ++i) w *= inverse_derivatives_[i][idx[i]];
    return w;
  }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < factors_.size(); ++i) out += (i ? " x " : "") + factors_[i].to_string();
    return out;
  }

 private:
  std::vector<FiniteSet> factors_;
  std::vector<std::size_t> nullities_;
  std::vector<std::size_t> vandermonde_;
  std::vector<std::vector<FieldElement>> inverse_derivatives_;
  std::size_t joint_nullity_ = 0;
  std::size_t joint_vandermonde_ = 0;
  bool has_singleton_ = false;
};

inline Grid grid_make(std::vector<FiniteSet> factors) { return Grid(std::move(factors)); }

inline FieldElement weight(const Grid& grid, const Point& a) { return grid.weight(a); }

inline MultiPoly raise_degree(const MultiPoly& f, const Grid& grid, const Monomial& k) {
  const auto sizes = grid.sizes();
  return raise_degree(f, std::span<const std::size_t>(sizes), k);
}

/// shift * mu_d = {shift * x : x^d = 1}, in index order of the roots of unity.
inline FiniteSet multiplicative_coset(FieldCtx field, std::uint64_t d, const FieldElement& shift) {
  const std::uint64_t q = field.cardinality();
  field.check(shift);
  if (d == 0 || (q - 1) % d != 0)
    throw Error(Errc::OrderDoesNotDivide, std::to_string(d) + " does not divide " + std::to_string(q - 1));
  if (shift.is_zero()) throw Error(Errc::ZeroShift, "coset shift must be nonzero");
  std::vector<FieldElement> out;
  for (const auto& x : field.elements())
    if (!x.is_zero() && x.pow(static_cast<std::int64_t>(d)).is_one()) out.push_back(shift * x);
  return FiniteSet(field, out);
}

inline FiniteSet multiplicative_coset(FieldCtx field, std::uint64_t d) {
  return multiplicative_coset(field, d, field.one());
}

/// shift + F_p-span(generators), built by span enumeration.
inline FiniteSet additive_coset(FieldCtx field, const std::vector<FieldElement>& generators,
                                const FieldElement& shift) {
  if (!field.is_finite()) throw Error(Errc::CharacteristicZero, "additive cosets need positive characteristic");
  field.check(shift);
  const auto p = static_cast<long long>(field.characteristic());
  std::vector<FieldElement> span{field.zero()};
  for (const auto& g : generators) {
    field.check(g);
    if (std::find(span.begin(), span.end(), g) != span.end()) continue;
    std::vector<FieldElement> next;
    next.reserve(span.size() * static_cast<std::size_t>(p));
    for (long long c = 0; c < p; ++c) {
      const FieldElement step = field.from_int(c) * g;
      for (const auto& s : span) next.push_back(s + step);
    }
    span = std::move(next);
  }
  for (auto& s : span) s += shift;
  return FiniteSet(field, span);
}

/// {a : Tr(a) = 0} in F_{p^{e+1}}, in index order.
inline FiniteSet trace_zero_set(FieldCtx field) {
  if (field.kind() != FieldKind::Extension) throw Error(Errc::NotExtensionField, "trace-zero sets need F_{p^e}, e >= 2");
  std::vector<FieldElement> out;
  for (const auto& x : field.elements())
    if (field.trace(x).is_zero()) out.push_back(x);
  return FiniteSet(field, out);
}

inline FiniteSet full_field(FieldCtx field) { return FiniteSet(field, field.elements()); }

inline FiniteSet units(FieldCtx field) {
  auto all = field.elements();
  all.erase(all.begin());
  return FiniteSet(field, all);
}

/// True when the set is closed under addition and contains 0.
inline bool is_additive_subgroup(const FiniteSet& set) {
  const FieldCtx& field = set.field();
  if (!field.is_finite() || !set.contains(field.zero())) return false;
  for (const auto& a : set.elements())
    for (const auto& b : set.elements())
      if (!set.contains(a + b)) return false;
  return true;
}

namespace detail {

// Splits on `sep` at nesting depth zero with respect to (), {}.
inline std::vector<std::string_view> split_top(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (c == '(' || c == '{') ++depth;
    if (c == ')' || c == '}') --depth;
    if (c == sep && depth == 0) {
      parts.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  parts.push_back(s.substr(start));
  return parts;
}

}  // namespace detail

/// `{e1, e2, ...}` with elements in the field element syntax.
inline FiniteSet parse_set_literal(std::string_view text, FieldCtx field) {
  const std::string_view s = detail::strip(text);
  if (s.size() < 2 || s.front() != '{' || s.back() != '}')
    throw Error(Errc::SyntaxError, "set literal '" + std::string(s) + "' must look like {e1, e2, ...}");
  const std::string_view body = detail::strip(s.substr(1, s.size() - 2));
  if (body.empty()) throw Error(Errc::EmptySet, "empty set literal");
  std::vector<FieldElement> elements;
  for (auto part : detail::split_top(body, ',')) elements.push_back(field.parse_element(part));
  return FiniteSet(field, elements);
}

/// One grid factor: a set literal, `mul(d[,shift])`, `add(g1;g2;...[,shift])`,
/// `tracezero`, `all` or `units`.
inline FiniteSet parse_factor(std::string_view text, FieldCtx field) {
  const std::string_view s = detail::strip(text);
  if (!s.empty() && s.front() == '{') return parse_set_literal(s, field);
  if (s == "tracezero") return trace_zero_set(field);
  if (s == "all") return full_field(field);
  if (s == "units") return units(field);
  auto args_of = [&](std::string_view name) -> std::optional<std::vector<std::string_view>> {
    if (s.substr(0, name.size()) != name) return std::nullopt;
    std::string_view rest = detail::strip(s.substr(name.size()));
    if (rest.size() < 2 || rest.front() != '(' || rest.back() != ')')
      throw Error(Errc::SyntaxError, "expected " + std::string(name) + "(...) in '" + std::string(s) + "'");
    return detail::split_top(rest.substr(1, rest.size() - 2), ',');
  };
  if (auto args = args_of("mul")) {
    if (args->empty() || args->size() > 2) throw Error(Errc::SyntaxError, "mul(d[,shift]) takes one or two arguments");
    const std::uint64_t d = detail::parse_u64((*args)[0], "subgroup order");
    const FieldElement shift = args->size() == 2 ? field.parse_element((*args)[1]) : field.one();
    return multiplicative_coset(field, d, shift);
  }
  if (auto args = args_of("add")) {
    if (args->empty() || args->size() > 2)
      throw Error(Errc::SyntaxError, "add(g1;g2;...[,shift]) takes one or two arguments");
    std::vector<FieldElement> gens;
    for (auto g : detail::split_top((*args)[0], ';'))
      if (!detail::strip(g).empty()) gens.push_back(field.parse_element(g));
    const FieldElement shift = args->size() == 2 ? field.parse_element((*args)[1]) : field.zero();
    return additive_coset(field, gens, shift);
  }
  throw Error(Errc::SyntaxError, "unknown grid factor '" + std::string(s) +
                                     "' (expected {..}, mul(d[,shift]), add(g1;g2;...[,shift]), tracezero, all, units)");
}

/// Factors separated by `x` at the top level: `{-1,0,1}x{-1,0,1}`, `mul(3)xmul(3)xmul(2)`.
inline Grid parse_grid(std::string_view text, FieldCtx field) {
  std::vector<FiniteSet> factors;
  for (auto part : detail::split_top(detail::strip(text), 'x')) {
    if (detail::strip(part).empty()) throw Error(Errc::SyntaxError, "empty grid factor in '" + std::string(text) + "'");
    factors.push_back(parse_factor(part, field));
  }
  return Grid(std::move(factors));
}

}  // namespace gridnull
