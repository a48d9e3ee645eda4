#pragma once

// Moments of finite subsets of a field and the structure parameters built on
// them: nullity (vanishing sub-leading coefficients of the characteristic
// polynomial) and Vandermonde degree (vanishing power sums).

#include <algorithm>
#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "gridnull/field.hpp"
#include "gridnull/poly.hpp"

namespace gridnull {

/// e_0..e_R, h_0..h_R and p_0..p_R evaluated on one set.
struct MomentTable {
  std::vector<FieldElement> e;
  std::vector<FieldElement> h;
  std::vector<FieldElement> p;
};

/// Nonempty set of distinct field elements in a fixed order. Copies share the
/// moment caches.
class FiniteSet {
 public:
  /// Duplicates are dropped, keeping first occurrences.
  FiniteSet(FieldCtx field, const std::vector<FieldElement>& elements) : field_(field) {
    if (elements.empty()) throw Error(Errc::EmptySet, "a finite set must be nonempty");
    for (const auto& x : elements) {
      field_.check(x);
      if (std::find(elements_.begin(), elements_.end(), x) == elements_.end()) elements_.push_back(x);
    }
    char_poly_ = std::make_shared<const UniPoly>(UniPoly::from_roots(field_, elements_));
  }

  const FieldCtx& field() const { return field_; }
  const std::vector<FieldElement>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool contains(const FieldElement& x) const {
    return std::find(elements_.begin(), elements_.end(), x) != elements_.end();
  }
  bool is_singleton() const { return elements_.size() == 1; }

  /// prod_{a in A} (X - a), monic of degree |A|.
  const UniPoly& char_poly() const { return *char_poly_; }

  /// e_0..e_R read off the characteristic polynomial (Viete).
  std::vector<FieldElement> elementary_moments(std::size_t bound) const {
    ensure(bound);
    std::lock_guard<std::mutex> lock(cache_->mutex);
    return {cache_->e.begin(), cache_->e.begin() + static_cast<std::ptrdiff_t>(bound + 1)};
  }
  /// h_0..h_R through h_r = sum_{i=1}^r (-1)^{i+1} e_i h_{r-i}.
  std::vector<FieldElement> complete_moments(std::size_t bound) const {
    ensure(bound);
    std::lock_guard<std::mutex> lock(cache_->mutex);
    return {cache_->h.begin(), cache_->h.begin() + static_cast<std::ptrdiff_t>(bound + 1)};
  }
  /// p_0..p_R by direct summation.
  std::vector<FieldElement> power_sums(std::size_t bound) const {
    ensure(bound);
    std::lock_guard<std::mutex> lock(cache_->mutex);
    return {cache_->p.begin(), cache_->p.begin() + static_cast<std::ptrdiff_t>(bound + 1)};
  }
  MomentTable moments(std::size_t bound) const {
    return {elementary_moments(bound), complete_moments(bound), power_sums(bound)};
  }

  std::string to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < elements_.size(); ++i) out += (i ? ", " : "") + elements_[i].to_string();
    return out + "}";
  }

 private:
  struct Cache {
    std::mutex mutex;
    std::vector<FieldElement> e, h, p;
    std::vector<FieldElement> powers;  // a^r for the latest r, one per element
  };

  // Extends the tables up to `bound`; existing entries are never recomputed.
  void ensure(std::size_t bound) const {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    auto& c = *cache_;
    const std::size_t m = elements_.size();
    const auto& pi = char_poly_->coefficients();
    if (c.e.empty()) {
      c.e.push_back(field_.one());
      c.h.push_back(field_.one());
      c.p.push_back(field_.from_int(static_cast<long long>(m)));
      c.powers.assign(m, field_.one());
    }
    for (std::size_t r = c.e.size(); r <= bound; ++r) {
      FieldElement er = field_.zero();
      if (r <= m) {
        er = pi[m - r];
        if (r % 2) er = -er;
      }
      c.e.push_back(er);

      FieldElement hr = field_.zero();
      for (std::size_t i = 1; i <= std::min(r, m); ++i) {
        const FieldElement t = c.e[i] * c.h[r - i];
        if (i % 2)
          hr += t;
        else
          hr -= t;
      }
      c.h.push_back(hr);

      FieldElement pr = field_.zero();
      for (std::size_t k = 0; k < m; ++k) {
        c.powers[k] *= elements_[k];
        pr += c.powers[k];
      }
      c.p.push_back(pr);
    }
  }

  FieldCtx field_;
  std::vector<FieldElement> elements_;
  std::shared_ptr<const UniPoly> char_poly_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

inline UniPoly char_poly(const FiniteSet& set) { return set.char_poly(); }

/// Largest lambda such that the coefficients of X^{|A|-1}, ..., X^{|A|-lambda}
/// in the characteristic polynomial vanish.
inline std::size_t nullity(const FiniteSet& set) {
  const auto& pi = set.char_poly().coefficients();
  const std::size_t m = set.size();
  std::size_t lambda = 0;
  while (lambda < m && pi[m - 1 - lambda].is_zero()) ++lambda;
  return lambda;
}

/// Largest lambda with e_1 = ... = e_lambda = 0.
inline std::size_t nullity_from_elementary(const FiniteSet& set) {
  const auto e = set.elementary_moments(set.size());
  std::size_t lambda = 0;
  while (lambda < set.size() && e[lambda + 1].is_zero()) ++lambda;
  return lambda;
}

/// Largest lambda with h_1 = ... = h_lambda = 0 (lambda <= |A|).
inline std::size_t nullity_from_complete(const FiniteSet& set) {
  const auto h = set.complete_moments(set.size());
  std::size_t lambda = 0;
  while (lambda < set.size() && h[lambda + 1].is_zero()) ++lambda;
  return lambda;
}

/// Largest lambda in [0, |A|] with p_1 = ... = p_lambda = 0.
inline std::size_t vandermonde_degree(const FiniteSet& set) {
  const auto p = set.power_sums(set.size());
  std::size_t lambda = 0;
  while (lambda < set.size() && p[lambda + 1].is_zero()) ++lambda;
  return lambda;
}

/// 1 / Pi'_A(a) for a in A.
inline FieldElement derivative_weight(const FiniteSet& set, const FieldElement& a) {
  if (!set.contains(a)) throw Error(Errc::PointNotOnGrid, a.to_string() + " is not in " + set.to_string());
  return set.char_poly().derivative()(a).inv();
}

/// sum_{a in A} a^d / Pi'_A(a), computed directly.
inline FieldElement sylvester_sum(const FiniteSet& set, std::size_t d) {
  const UniPoly dpi = set.char_poly().derivative();
  FieldElement acc = set.field().zero();
  for (const auto& a : set.elements()) acc += a.pow(static_cast<std::int64_t>(d)) / dpi(a);
  return acc;
}

}  // namespace gridnull
