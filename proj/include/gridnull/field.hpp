#pragma once

// Exact arithmetic over Q, F_p and F_{p^e}.
//
// A field context is interned: every FieldCtx built from the same spec shares
// one immutable descriptor, so elements carry a plain pointer and cross-field
// operands are detected by pointer comparison. Finite field elements are
// stored as their index c_0 + c_1 p + ... + c_{e-1} p^{e-1}, where
// c_0 + c_1 t + ... is the element written in the generator t. Rationals are
// GMP fractions in canonical form.

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "gridnull/error.hpp"

namespace gridnull {

enum class FieldKind { Rationals, Prime, Extension };

struct FieldSpec {
  FieldKind kind = FieldKind::Rationals;
  std::uint64_t p = 0;
  unsigned e = 1;
  // Monic modulus, constant term first, length e + 1. Empty selects the
  // lexicographically smallest monic irreducible of degree e.
  std::vector<std::uint64_t> modulus;

  static FieldSpec rationals() { return {}; }
  static FieldSpec prime(std::uint64_t p) { return {FieldKind::Prime, p, 1, {}}; }
  static FieldSpec extension(std::uint64_t p, unsigned e, std::vector<std::uint64_t> modulus = {}) {
    return {FieldKind::Extension, p, e, std::move(modulus)};
  }

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
  friend auto operator<=>(const FieldSpec&, const FieldSpec&) = default;
};

namespace detail {

// Largest supported cardinality of a finite field.
inline constexpr std::uint64_t kMaxCardinality = std::uint64_t{1} << 31;
// Fields at most this large get log/antilog tables.
inline constexpr std::uint64_t kTableCardinality = std::uint64_t{1} << 16;

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Dense polynomials over F_p, constant term first, trimmed.
using ModPoly = std::vector<std::uint64_t>;

inline void trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  // p prime, a != 0 mod p
  std::uint64_t result = 1, base = a % p, exp = p - 2;
  while (exp) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return result;
}

inline ModPoly poly_mod(ModPoly a, const ModPoly& m, std::uint64_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint64_t lead_inv = inv_mod(m.back(), p);
  while (a.size() > dm) {
    const std::uint64_t c = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = (a[shift + i] + (p - c) * m[i]) % p;
    trim(a);
  }
  return a;
}

inline ModPoly poly_mulmod(const ModPoly& a, const ModPoly& b, const ModPoly& m, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  ModPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return poly_mod(std::move(r), m, p);
}

inline ModPoly poly_gcd(ModPoly a, ModPoly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    ModPoly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Rabin's test: f of degree e is irreducible iff gcd(f, X^{p^k} - X) = 1 for
// 1 <= k <= e/2.
inline bool is_irreducible(const ModPoly& f, std::uint64_t p) {
  const std::size_t e = f.size() - 1;
  ModPoly x_power = poly_mod({0, 1}, f, p);  // X^{p^k} mod f
  for (std::size_t k = 1; k <= e / 2; ++k) {
    ModPoly base = x_power, acc = {1};
    for (std::uint64_t exp = p; exp; exp >>= 1) {
      if (exp & 1) acc = poly_mulmod(acc, base, f, p);
      base = poly_mulmod(base, base, f, p);
    }
    x_power = acc;
    ModPoly diff = x_power;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;
    trim(diff);
    if (diff.empty()) return false;
    if (poly_gcd(f, diff, p).size() > 1) return false;
  }
  return true;
}

inline ModPoly default_modulus(std::uint64_t p, unsigned e) {
  // Lexicographic on (c_0, c_1, ..., c_{e-1}), i.e. c_0 most significant.
  std::vector<std::uint64_t> c(e, 0);
  for (;;) {
    ModPoly f(c.begin(), c.end());
    f.push_back(1);
    if (f[0] != 0 && is_irreducible(f, p)) return f;
    std::size_t i = e;
    while (i > 0) {
      --i;
      if (++c[i] < p) break;
      c[i] = 0;
      if (i == 0) throw Error(Errc::UnsupportedDegree, "no irreducible modulus found");
    }
  }
}

struct FieldData {
  FieldSpec spec;     // modulus filled in for extensions
  std::uint64_t q = 0;  // 0 for Q
  bool default_modulus = true;
  std::vector<std::uint32_t> exp_table;  // generator^i, i in [0, q-1)
  std::vector<std::uint32_t> log_table;  // indexed by element value

  std::vector<std::uint64_t> digits(std::uint64_t v) const {
    std::vector<std::uint64_t> d(spec.e, 0);
    for (unsigned i = 0; i < spec.e; ++i) {
      d[i] = v % spec.p;
      v /= spec.p;
    }
    return d;
  }
  std::uint64_t encode(const ModPoly& d) const {
    std::uint64_t v = 0;
    for (std::size_t i = d.size(); i-- > 0;) v = v * spec.p + d[i];
    return v;
  }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    if (spec.kind == FieldKind::Prime) return (a + b) % spec.p;
    std::uint64_t r = 0, scale = 1;
    for (unsigned i = 0; i < spec.e; ++i) {
      r += ((a % spec.p + b % spec.p) % spec.p) * scale;
      a /= spec.p;
      b /= spec.p;
      scale *= spec.p;
    }
    return r;
  }
  std::uint64_t neg(std::uint64_t a) const {
    if (spec.kind == FieldKind::Prime) return a == 0 ? 0 : spec.p - a;
    std::uint64_t r = 0, scale = 1;
    for (unsigned i = 0; i < spec.e; ++i) {
      r += ((spec.p - a % spec.p) % spec.p) * scale;
      a /= spec.p;
      scale *= spec.p;
    }
    return r;
  }
  std::uint64_t mul_slow(std::uint64_t a, std::uint64_t b) const {
    if (spec.kind == FieldKind::Prime) return a * b % spec.p;
    ModPoly da = digits(a), db = digits(b);
    trim(da);
    trim(db);
    return encode(poly_mulmod(da, db, spec.modulus, spec.p));
  }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    if (a == 0 || b == 0) return 0;
    if (!log_table.empty()) {
      std::uint64_t s = std::uint64_t{log_table[a]} + log_table[b];
      if (s >= q - 1) s -= q - 1;
      return exp_table[s];
    }
    return mul_slow(a, b);
  }
  std::uint64_t pow_u(std::uint64_t a, std::uint64_t exp) const {
    std::uint64_t r = 1;
    while (exp) {
      if (exp & 1) r = mul(r, a);
      a = mul(a, a);
      exp >>= 1;
    }
    return r;
  }
  std::uint64_t inv(std::uint64_t a) const {
    if (!log_table.empty()) return exp_table[(q - 1 - log_table[a]) % (q - 1)];
    return pow_u(a, q - 2);
  }

  void build_tables() {
    if (q > kTableCardinality) return;
    // Find a generator of the multiplicative group by direct order check.
    std::vector<std::uint64_t> prime_factors;
    std::uint64_t n = q - 1;
    for (std::uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) {
        prime_factors.push_back(d);
        while (n % d == 0) n /= d;
      }
    if (n > 1) prime_factors.push_back(n);
    std::uint64_t g = 1;
    for (std::uint64_t cand = 1; cand < q; ++cand) {
      bool primitive = true;
      for (std::uint64_t f : prime_factors) {
        std::uint64_t r = 1, base = cand, exp = (q - 1) / f;
        while (exp) {
          if (exp & 1) r = mul_slow(r, base);
          base = mul_slow(base, base);
          exp >>= 1;
        }
        if (r == 1) {
          primitive = false;
          break;
        }
      }
      if (primitive) {
        g = cand;
        break;
      }
    }
    exp_table.assign(q - 1, 0);
    log_table.assign(q, 0);
    std::uint64_t x = 1;
    for (std::uint64_t i = 0; i + 1 < q; ++i) {
      exp_table[i] = static_cast<std::uint32_t>(x);
      log_table[x] = static_cast<std::uint32_t>(i);
      x = mul_slow(x, g);
    }
  }
};

inline const FieldData* intern_field(const FieldSpec& requested) {
  FieldSpec spec = requested;
  bool default_mod = true;
  switch (spec.kind) {
    case FieldKind::Rationals:
      spec.p = 0;
      spec.e = 1;
      spec.modulus.clear();
      break;
    case FieldKind::Prime:
      if (!is_prime(spec.p)) throw Error(Errc::NonPrimeModulus, std::to_string(spec.p) + " is not prime");
      if (spec.p >= kMaxCardinality)
        throw Error(Errc::UnsupportedDegree, "prime " + std::to_string(spec.p) + " is too large");
      spec.e = 1;
      spec.modulus.clear();
      break;
    case FieldKind::Extension: {
      if (!is_prime(spec.p)) throw Error(Errc::NonPrimeModulus, std::to_string(spec.p) + " is not prime");
      if (spec.e < 2) throw Error(Errc::UnsupportedDegree, "extension degree must be at least 2");
      std::uint64_t q = 1;
      for (unsigned i = 0; i < spec.e; ++i) {
        q *= spec.p;
        if (q > kMaxCardinality) throw Error(Errc::UnsupportedDegree, "field too large");
      }
      if (spec.modulus.empty()) {
        if (spec.e > 4)
          throw Error(Errc::UnsupportedDegree, "degree > 4 requires an explicit modulus");
        spec.modulus = default_modulus(spec.p, spec.e);
      } else {
        if (spec.modulus.size() != spec.e + 1 || spec.modulus.back() != 1)
          throw Error(Errc::ReducibleModulus, "modulus must be monic of degree " + std::to_string(spec.e));
        for (auto& c : spec.modulus) c %= spec.p;
        if (!is_irreducible(spec.modulus, spec.p))
          throw Error(Errc::ReducibleModulus, "modulus is reducible over F_" + std::to_string(spec.p));
        default_mod = spec.modulus == default_modulus(spec.p, spec.e);
      }
      break;
    }
  }

  static std::mutex mutex;
  static std::map<FieldSpec, std::unique_ptr<FieldData>> registry;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = registry.find(spec);
  if (it != registry.end()) return it->second.get();
  auto data = std::make_unique<FieldData>();
  data->spec = spec;
  data->default_modulus = default_mod;
  if (spec.kind != FieldKind::Rationals) {
    data->q = 1;
    for (unsigned i = 0; i < spec.e; ++i) data->q *= spec.p;
    data->build_tables();
  }
  const FieldData* raw = data.get();
  registry.emplace(spec, std::move(data));
  return raw;
}

}  // namespace detail

class FieldCtx;

class FieldElement {
 public:
  FieldElement() = default;  // detached zero; only useful as a placeholder

  const detail::FieldData* data() const { return field_; }
  FieldCtx field() const;

  bool is_zero() const {
    if (auto v = std::get_if<std::uint64_t>(&repr_)) return *v == 0;
    return sgn(std::get<mpq_class>(repr_)) == 0;
  }
  bool is_one() const {
    if (auto v = std::get_if<std::uint64_t>(&repr_)) return *v == 1;
    return std::get<mpq_class>(repr_) == 1;
  }

  /// Index c_0 + c_1 p + ... of a finite field element.
  std::uint64_t index() const {
    if (auto v = std::get_if<std::uint64_t>(&repr_)) return *v;
    throw Error(Errc::InfiniteField, "rational elements have no index");
  }
  const mpq_class& rational() const {
    if (auto v = std::get_if<mpq_class>(&repr_)) return *v;
    throw Error(Errc::MixedFields, "element is not rational");
  }
  /// Coefficients of the element in the generator t, constant first.
  std::vector<std::uint64_t> coefficients() const { return field_->digits(index()); }

  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }
  FieldElement& operator/=(const FieldElement& o) { return *this = *this / o; }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    check_same(a, b);
    if (a.finite()) return a.with(a.field_->add(a.u(), b.u()));
    return a.with(mpq_class(a.q() + b.q()));
  }
  friend FieldElement operator-(const FieldElement& a) {
    if (a.finite()) return a.with(a.field_->neg(a.u()));
    return a.with(mpq_class(-a.q()));
  }
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b) { return a + (-b); }
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    check_same(a, b);
    if (a.finite()) return a.with(a.field_->mul(a.u(), b.u()));
    return a.with(mpq_class(a.q() * b.q()));
  }
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    check_same(a, b);
    return a * b.inv();
  }

  FieldElement inv() const {
    if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
    if (finite()) return with(field_->inv(u()));
    return with(mpq_class(1 / q()));
  }

  /// Square-and-multiply; pow(x, 0) = 1 for every x, including 0.
  FieldElement pow(std::int64_t exponent) const {
    if (exponent < 0) return inv().pow(-exponent);
    if (finite()) return with(field_->pow_u(u(), static_cast<std::uint64_t>(exponent)));
    mpq_class result = 1, base = q();
    for (auto exp = static_cast<std::uint64_t>(exponent); exp; exp >>= 1) {
      if (exp & 1) result *= base;
      base *= base;
    }
    return with(std::move(result));
  }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.field_ == b.field_ && a.repr_ == b.repr_;
  }
  /// Total order within one field: index order for finite fields, numeric
  /// order for Q.
  friend std::strong_ordering operator<=>(const FieldElement& a, const FieldElement& b) {
    if (a.field_ != b.field_) return std::less<>{}(a.field_, b.field_) ? std::strong_ordering::less
                                                                      : std::strong_ordering::greater;
    if (a.finite()) return a.u() <=> b.u();
    const int c = cmp(a.q(), b.q());
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  std::string to_string() const {
    if (!field_) return "0";
    if (!finite()) return q().get_str();
    if (field_->spec.kind == FieldKind::Prime) return std::to_string(u());
    const auto d = coefficients();
    std::string out;
    for (std::size_t i = d.size(); i-- > 0;) {
      if (d[i] == 0) continue;
      if (!out.empty()) out += "+";
      if (i == 0) {
        out += std::to_string(d[i]);
        continue;
      }
      if (d[i] != 1) out += std::to_string(d[i]) + "*";
      out += "t";
      if (i > 1) out += "^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
  }

  friend std::ostream& operator<<(std::ostream& os, const FieldElement& x) { return os << x.to_string(); }

 private:
  friend class FieldCtx;

  FieldElement(const detail::FieldData* f, std::uint64_t v) : field_(f), repr_(v) {}
  FieldElement(const detail::FieldData* f, mpq_class v) : field_(f), repr_(std::move(v)) {
    std::get<mpq_class>(repr_).canonicalize();
  }

  bool finite() const { return std::holds_alternative<std::uint64_t>(repr_); }
  std::uint64_t u() const { return std::get<std::uint64_t>(repr_); }
  const mpq_class& q() const { return std::get<mpq_class>(repr_); }
  FieldElement with(std::uint64_t v) const { return FieldElement(field_, v); }
  FieldElement with(mpq_class v) const { return FieldElement(field_, std::move(v)); }

  static void check_same(const FieldElement& a, const FieldElement& b) {
    if (a.field_ != b.field_) throw Error(Errc::MixedFields, "operands belong to different fields");
  }

  const detail::FieldData* field_ = nullptr;
  std::variant<std::uint64_t, mpq_class> repr_ = std::uint64_t{0};
};

class FieldCtx {
 public:
  FieldCtx() : FieldCtx(FieldSpec::rationals()) {}
  explicit FieldCtx(const FieldSpec& spec) : data_(detail::intern_field(spec)) {}
  explicit FieldCtx(const detail::FieldData* data) : data_(data) {}

  static FieldCtx rationals() { return FieldCtx(FieldSpec::rationals()); }
  static FieldCtx prime(std::uint64_t p) { return FieldCtx(FieldSpec::prime(p)); }
  static FieldCtx extension(std::uint64_t p, unsigned e, std::vector<std::uint64_t> modulus = {}) {
    return FieldCtx(FieldSpec::extension(p, e, std::move(modulus)));
  }

  /// Parses `Q`, `F<p>`, `F<p>^<e>` or `F<p>^<e>/<c0>,<c1>,...,1`.
  static FieldCtx parse(std::string_view text);

  /// Finite field of cardinality q (prime or prime power with default modulus).
  static FieldCtx of_order(std::uint64_t q) {
    for (std::uint64_t p = 2; p <= q; ++p) {
      if (q % p != 0) continue;
      unsigned e = 0;
      std::uint64_t r = q;
      while (r % p == 0) {
        r /= p;
        ++e;
      }
      if (r != 1) break;
      return e == 1 ? prime(p) : extension(p, e);
    }
    throw Error(Errc::NonPrimeModulus, std::to_string(q) + " is not a prime power");
  }

  const detail::FieldData* data() const { return data_; }
  const FieldSpec& spec() const { return data_->spec; }
  FieldKind kind() const { return data_->spec.kind; }
  bool is_finite() const { return kind() != FieldKind::Rationals; }
  std::uint64_t characteristic() const { return data_->spec.p; }
  unsigned degree() const { return data_->spec.e; }
  const std::vector<std::uint64_t>& modulus() const { return data_->spec.modulus; }

  std::uint64_t cardinality() const {
    if (!is_finite()) throw Error(Errc::InfiniteField, "Q has no cardinality");
    return data_->q;
  }

  FieldElement zero() const { return from_int(0); }
  FieldElement one() const { return from_int(1); }

  FieldElement from_int(long long v) const {
    if (!is_finite()) return FieldElement(data_, mpq_class(static_cast<long>(v)));
    const auto p = static_cast<long long>(characteristic());
    long long r = v % p;
    if (r < 0) r += p;
    return FieldElement(data_, static_cast<std::uint64_t>(r));
  }
  FieldElement from_mpz(const mpz_class& v) const {
    if (!is_finite()) return FieldElement(data_, mpq_class(v));
    mpz_class r = v % mpz_class(static_cast<unsigned long>(characteristic()));
    if (r < 0) r += static_cast<unsigned long>(characteristic());
    return FieldElement(data_, static_cast<std::uint64_t>(r.get_ui()));
  }
  FieldElement from_rational(const mpq_class& v) const {
    if (!is_finite()) return FieldElement(data_, v);
    return from_mpz(v.get_num()) / from_mpz(v.get_den());
  }
  FieldElement from_index(std::uint64_t index) const {
    if (index >= cardinality()) throw Error(Errc::SyntaxError, "element index out of range");
    return FieldElement(data_, index);
  }
  FieldElement from_coefficients(const std::vector<std::uint64_t>& coeffs) const {
    if (!is_finite()) throw Error(Errc::InfiniteField, "Q elements have no coefficient vector");
    detail::ModPoly d(coeffs.begin(), coeffs.end());
    for (auto& c : d) c %= characteristic();
    if (kind() == FieldKind::Extension) d = detail::poly_mod(d, modulus(), characteristic());
    detail::trim(d);
    return FieldElement(data_, data_->encode(d));
  }
  /// The class of t in F_p[t]/(modulus).
  FieldElement generator() const {
    if (kind() != FieldKind::Extension) throw Error(Errc::NotExtensionField, "no generator t");
    return from_coefficients({0, 1});
  }

  /// All q elements in index order.
  std::vector<FieldElement> elements() const {
    const std::uint64_t q = cardinality();
    std::vector<FieldElement> out;
    out.reserve(q);
    for (std::uint64_t i = 0; i < q; ++i) out.push_back(FieldElement(data_, i));
    return out;
  }

  /// Absolute trace x + x^p + ... + x^{p^{e-1}} to the prime subfield.
  FieldElement trace(const FieldElement& x) const {
    if (kind() != FieldKind::Extension) throw Error(Errc::NotExtensionField, "trace needs an extension field");
    check(x);
    FieldElement acc = x, frob = x;
    for (unsigned i = 1; i < degree(); ++i) {
      frob = frob.pow(static_cast<std::int64_t>(characteristic()));
      acc += frob;
    }
    return acc;
  }

  /// True when x lies in the prime subfield.
  bool in_prime_subfield(const FieldElement& x) const {
    check(x);
    if (!is_finite()) return true;
    return x.index() < characteristic();
  }

  void check(const FieldElement& x) const {
    if (x.data() != data_) throw Error(Errc::MixedFields, "element belongs to a different field");
  }

  FieldElement parse_element(std::string_view text) const;

  std::string to_string() const {
    const auto& s = spec();
    switch (s.kind) {
      case FieldKind::Rationals: return "Q";
      case FieldKind::Prime: return "F" + std::to_string(s.p);
      case FieldKind::Extension: {
        std::string out = "F" + std::to_string(s.p) + "^" + std::to_string(s.e);
        if (!data_->default_modulus) {
          out += "/";
          for (std::size_t i = 0; i < s.modulus.size(); ++i) out += (i ? "," : "") + std::to_string(s.modulus[i]);
        }
        return out;
      }
    }
    return "?";
  }

  friend bool operator==(const FieldCtx& a, const FieldCtx& b) { return a.data_ == b.data_; }

 private:
  const detail::FieldData* data_;
};

inline FieldCtx FieldElement::field() const { return FieldCtx(field_); }

namespace detail {

inline std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline std::uint64_t parse_u64(std::string_view s, std::string_view what) {
  s = strip(s);
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw Error(Errc::SyntaxError, "expected an integer for " + std::string(what) + ", got '" + std::string(s) + "'");
  return v;
}

}  // namespace detail

inline FieldCtx FieldCtx::parse(std::string_view text) {
  const std::string_view s = detail::strip(text);
  if (s == "Q") return rationals();
  if (s.size() < 2 || s.front() != 'F')
    throw Error(Errc::SyntaxError, "field spec '" + std::string(s) + "' does not match Q | F<p> | F<p>^<e>[/c0,...,1]");
  const auto caret = s.find('^');
  if (caret == std::string_view::npos) return prime(detail::parse_u64(s.substr(1), "field characteristic"));
  const std::uint64_t p = detail::parse_u64(s.substr(1, caret - 1), "field characteristic");
  const auto slash = s.find('/', caret);
  const auto e = static_cast<unsigned>(detail::parse_u64(s.substr(caret + 1, slash - caret - 1), "extension degree"));
  std::vector<std::uint64_t> modulus;
  if (slash != std::string_view::npos) {
    std::string_view rest = s.substr(slash + 1);
    while (true) {
      const auto comma = rest.find(',');
      modulus.push_back(detail::parse_u64(rest.substr(0, comma), "modulus coefficient"));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
  }
  return extension(p, e, std::move(modulus));
}

// Element syntax: signed sums of terms `c`, `c*t^k`, `t^k`, with an optional
// `/d` after an integer coefficient (`-3/4`, `2*t+1`, `t^2`).
inline FieldElement FieldCtx::parse_element(std::string_view text) const {
  const std::string_view s = detail::strip(text);
  if (s.empty()) throw Error(Errc::SyntaxError, "empty element");
  FieldElement acc = zero();
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  auto read_int = [&]() -> mpz_class {
    const std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    return mpz_class(std::string(s.substr(start, i - start)));
  };
  auto fail = [&](const std::string& msg) {
    throw Error(Errc::SyntaxError, msg + " at position " + std::to_string(i) + " in '" + std::string(s) + "'");
  };
  bool first = true;
  while (true) {
    skip_ws();
    bool negative = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      negative = s[i] == '-';
      ++i;
      skip_ws();
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    first = false;
    FieldElement term = one();
    bool have = false;
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      term = from_mpz(read_int());
      skip_ws();
      if (i < s.size() && s[i] == '/') {
        ++i;
        skip_ws();
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) fail("expected denominator");
        const FieldElement den = from_mpz(read_int());
        if (den.is_zero()) throw Error(Errc::DivisionByZero, "zero denominator in '" + std::string(s) + "'");
        term = term / den;
        skip_ws();
      }
      have = true;
      if (i < s.size() && s[i] == '*') {
        ++i;
        skip_ws();
        if (i >= s.size() || s[i] != 't') fail("expected 't'");
      }
    }
    if (i < s.size() && s[i] == 't') {
      if (kind() != FieldKind::Extension) throw Error(Errc::UnknownVariable, "'t' is only defined in extension fields");
      ++i;
      std::int64_t k = 1;
      skip_ws();
      if (i < s.size() && s[i] == '^') {
        ++i;
        skip_ws();
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) fail("expected exponent");
        k = static_cast<std::int64_t>(read_int().get_si());
      }
      term *= generator().pow(k);
      have = true;
    }
    if (!have) fail("expected a term");
    acc += negative ? -term : term;
    skip_ws();
    if (i >= s.size()) break;
  }
  return acc;
}

}  // namespace gridnull
