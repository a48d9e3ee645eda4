#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gridnull/field.hpp"

namespace gridnull {

/// Polynomial degree. The zero polynomial has degree minus infinity, which
/// compares below every integer and absorbs addition.
class Degree {
 public:
  constexpr Degree(long long value) : value_(value), minus_infinity_(false) {}  // NOLINT implicit
  static constexpr Degree minus_infinity() { return Degree(); }

  constexpr bool is_minus_infinity() const { return minus_infinity_; }
  long long value() const {
    if (minus_infinity_) throw Error(Errc::PreconditionViolated, "degree of the zero polynomial");
    return value_;
  }

  friend constexpr bool operator==(Degree a, Degree b) {
    return a.minus_infinity_ == b.minus_infinity_ && (a.minus_infinity_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(Degree a, Degree b) {
    if (a.minus_infinity_ || b.minus_infinity_) return b.minus_infinity_ <=> a.minus_infinity_;
    return a.value_ <=> b.value_;
  }
  friend constexpr Degree operator+(Degree a, Degree b) {
    if (a.minus_infinity_ || b.minus_infinity_) return minus_infinity();
    return Degree(a.value_ + b.value_);
  }

  std::string to_string() const { return minus_infinity_ ? "-inf" : std::to_string(value_); }

 private:
  constexpr Degree() : value_(0), minus_infinity_(true) {}
  long long value_;
  bool minus_infinity_;
};

/// Dense univariate polynomial, constant term first, trailing zeros trimmed.
class UniPoly {
 public:
  explicit UniPoly(FieldCtx field) : field_(field) {}
  UniPoly(FieldCtx field, std::vector<FieldElement> coeffs) : field_(field), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_) field_.check(c);
    trim();
  }

  /// prod (X - r) over the given roots.
  static UniPoly from_roots(FieldCtx field, std::span<const FieldElement> roots) {
    std::vector<FieldElement> c{field.one()};
    for (const auto& r : roots) {
      field.check(r);
      std::vector<FieldElement> next(c.size() + 1, field.zero());
      for (std::size_t i = 0; i < c.size(); ++i) {
        next[i + 1] += c[i];
        next[i] -= c[i] * r;
      }
      c = std::move(next);
    }
    return UniPoly(field, std::move(c));
  }

  const FieldCtx& field() const { return field_; }
  const std::vector<FieldElement>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  Degree degree() const {
    return coeffs_.empty() ? Degree::minus_infinity() : Degree(static_cast<long long>(coeffs_.size()) - 1);
  }
  FieldElement coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : field_.zero(); }

  FieldElement operator()(const FieldElement& x) const {
    field_.check(x);
    FieldElement acc = field_.zero();
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
  }

  /// Coefficient rule k * c_k shifted down; exact in every characteristic.
  UniPoly derivative() const {
    std::vector<FieldElement> d;
    for (std::size_t k = 1; k < coeffs_.size(); ++k)
      d.push_back(field_.from_int(static_cast<long long>(k)) * coeffs_[k]);
    return UniPoly(field_, std::move(d));
  }

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    same_field(a, b);
    std::vector<FieldElement> c(std::max(a.coeffs_.size(), b.coeffs_.size()), a.field_.zero());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
    return UniPoly(a.field_, std::move(c));
  }
  friend UniPoly operator-(const UniPoly& a) {
    std::vector<FieldElement> c;
    for (const auto& x : a.coeffs_) c.push_back(-x);
    return UniPoly(a.field_, std::move(c));
  }
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    same_field(a, b);
    if (a.is_zero() || b.is_zero()) return UniPoly(a.field_);
    std::vector<FieldElement> c(a.coeffs_.size() + b.coeffs_.size() - 1, a.field_.zero());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return UniPoly(a.field_, std::move(c));
  }
  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
  }

  /// Prints in X, highest degree first: `X^3 + 6`, `X^3 - X` over Q.
  std::string to_string(std::string_view var = "X") const;

 private:
  static void same_field(const UniPoly& a, const UniPoly& b) {
    if (!(a.field_ == b.field_)) throw Error(Errc::MixedFields, "polynomials over different fields");
  }
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  FieldCtx field_;
  std::vector<FieldElement> coeffs_;
};

/// Exponent vector X_1^{k_1} ... X_n^{k_n}.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t n) : exps_(n, 0) {}
  Monomial(std::initializer_list<unsigned> exps) : exps_(exps) {}
  explicit Monomial(std::vector<unsigned> exps) : exps_(std::move(exps)) {}

  std::size_t size() const { return exps_.size(); }
  unsigned operator[](std::size_t i) const { return exps_[i]; }
  unsigned& operator[](std::size_t i) { return exps_[i]; }
  const std::vector<unsigned>& exponents() const { return exps_; }
  long long total_degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0LL); }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    if (a.size() != b.size()) throw Error(Errc::DimensionMismatch, "monomials of different arity");
    Monomial r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r.exps_[i] += b.exps_[i];
    return r;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

  std::string to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < exps_.size(); ++i) out += (i ? ", " : "") + std::to_string(exps_[i]);
    return out + ")";
  }

 private:
  std::vector<unsigned> exps_;
};

/// Graded lexicographic order: total degree first, then lexicographic.
struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    const auto da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    return a.exponents() < b.exponents();
  }
};

using Point = std::vector<FieldElement>;

/// Sparse polynomial in n variables; no stored zero coefficients.
class MultiPoly {
 public:
  using Terms = std::map<Monomial, FieldElement, GrlexLess>;

  MultiPoly(FieldCtx field, std::size_t n) : field_(field), n_(n) {}

  static MultiPoly constant(FieldCtx field, std::size_t n, const FieldElement& c) {
    MultiPoly f(field, n);
    f.add_term(Monomial(n), c);
    return f;
  }
  /// The variable X_i (0-based index).
  static MultiPoly variable(FieldCtx field, std::size_t n, std::size_t i) {
    Monomial m(n);
    m[i] = 1;
    MultiPoly f(field, n);
    f.add_term(m, field.one());
    return f;
  }
  /// Lifts a univariate polynomial into variable i.
  static MultiPoly from_univariate(const UniPoly& u, std::size_t n, std::size_t i) {
    MultiPoly f(u.field(), n);
    for (std::size_t k = 0; k < u.coefficients().size(); ++k) {
      Monomial m(n);
      m[i] = static_cast<unsigned>(k);
      f.add_term(m, u.coefficients()[k]);
    }
    return f;
  }

  const FieldCtx& field() const { return field_; }
  std::size_t variables() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Degree total_degree() const {
    if (terms_.empty()) return Degree::minus_infinity();
    return Degree(terms_.rbegin()->first.total_degree());
  }

  /// Largest exponent of X_i over all terms (-inf for the zero polynomial).
  Degree variable_degree(std::size_t i) const {
    if (terms_.empty()) return Degree::minus_infinity();
    long long best = 0;
    for (const auto& [m, c] : terms_) best = std::max<long long>(best, m[i]);
    return Degree(best);
  }

  void add_term(const Monomial& m, const FieldElement& c) {
    if (m.size() != n_) throw Error(Errc::DimensionMismatch, "monomial arity " + std::to_string(m.size()) +
                                                                 " != " + std::to_string(n_));
    field_.check(c);
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  FieldElement coefficient(const Monomial& m) const {
    if (m.size() != n_) throw Error(Errc::DimensionMismatch, "monomial arity mismatch");
    auto it = terms_.find(m);
    return it == terms_.end() ? field_.zero() : it->second;
  }

  /// Evaluation with the convention x^0 = 1 at x = 0.
  FieldElement operator()(std::span<const FieldElement> point) const {
    if (point.size() != n_) throw Error(Errc::DimensionMismatch, "point has " + std::to_string(point.size()) +
                                                                    " coordinates, expected " + std::to_string(n_));
    for (const auto& x : point) field_.check(x);
    // Power tables per coordinate keep evaluation linear in the term count.
    std::vector<std::vector<FieldElement>> powers(n_);
    for (const auto& [m, c] : terms_)
      for (std::size_t i = 0; i < n_; ++i) {
        auto& pw = powers[i];
        if (pw.empty()) pw.push_back(field_.one());
        while (pw.size() <= m[i]) pw.push_back(pw.back() * point[i]);
      }
    FieldElement acc = field_.zero();
    for (const auto& [m, c] : terms_) {
      FieldElement t = c;
      for (std::size_t i = 0; i < n_; ++i)
        if (m[i]) t *= powers[i][m[i]];
      acc += t;
    }
    return acc;
  }

  /// Multiplies by a monomial.
  MultiPoly shifted(const Monomial& by) const {
    MultiPoly r(field_, n_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m * by, c);
    return r;
  }

  MultiPoly scaled(const FieldElement& s) const {
    MultiPoly r(field_, n_);
    for (const auto& [m, c] : terms_) r.add_term(m, c * s);
    return r;
  }

  MultiPoly pow(unsigned k) const {
    MultiPoly result = constant(field_, n_, field_.one()), base = *this;
    for (; k; k >>= 1) {
      if (k & 1) result = result * base;
      if (k > 1) base = base * base;
    }
    return result;
  }

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    same_ring(a, b);
    MultiPoly r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
  }
  friend MultiPoly operator-(const MultiPoly& a) { return a.scaled(-a.field_.one()); }
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    same_ring(a, b);
    MultiPoly r(a.field_, a.n_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
  }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.field_ == b.field_ && a.n_ == b.n_ && a.terms_ == b.terms_;
  }

 private:
  static void same_ring(const MultiPoly& a, const MultiPoly& b) {
    if (!(a.field_ == b.field_)) throw Error(Errc::MixedFields, "polynomials over different fields");
    if (a.n_ != b.n_) throw Error(Errc::DimensionMismatch, "polynomials in different numbers of variables");
  }

  FieldCtx field_;
  std::size_t n_;
  Terms terms_;
};

/// Multiplies f by X_1^{s_1 - k_1 - 1} ... X_n^{s_n - k_n - 1}, moving X^k to the
/// top grid monomial for factor sizes s.
inline MultiPoly raise_degree(const MultiPoly& f, std::span<const std::size_t> sizes, const Monomial& k) {
  if (sizes.size() != f.variables() || k.size() != f.variables())
    throw Error(Errc::DimensionMismatch, "grid, target and polynomial arity differ");
  Monomial shift(f.variables());
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (k[i] + 1 > sizes[i])
      throw Error(Errc::ExponentOutOfRange, "k_" + std::to_string(i + 1) + " = " + std::to_string(k[i]) +
                                                " exceeds |A_" + std::to_string(i + 1) + "| - 1");
    shift[i] = static_cast<unsigned>(sizes[i] - k[i] - 1);
  }
  return f.shifted(shift);
}

namespace detail {

// Coefficient text inside a term; `negative` is set when the sign is
// emitted separately (rationals only).
inline std::string coefficient_text(const FieldElement& c, bool& negative) {
  negative = false;
  const FieldCtx field = c.field();
  if (!field.is_finite() && c.rational() < 0) {
    negative = true;
    return (-c).to_string();
  }
  std::string s = c.to_string();
  if (field.kind() == FieldKind::Extension && s.find('+') != std::string::npos) return "(" + s + ")";
  return s;
}

inline std::string term_text(const FieldElement& c, bool is_constant, const std::string& mono, bool& negative) {
  std::string coeff = coefficient_text(c, negative);
  if (is_constant) return coeff;
  if (coeff == "1") return mono;
  return coeff + "*" + mono;
}

}  // namespace detail

inline std::string UniPoly::to_string(std::string_view var) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    if (coeffs_[k].is_zero()) continue;
    std::string mono(var);
    if (k > 1) mono += "^" + std::to_string(k);
    bool negative = false;
    const std::string t = detail::term_text(coeffs_[k], k == 0, mono, negative);
    if (out.empty())
      out = (negative ? "-" : "") + t;
    else
      out += (negative ? " - " : " + ") + t;
  }
  return out;
}

/// Terms in descending graded-lexicographic order: `-x1^3 + x1*x2`.
inline std::string format_poly(const MultiPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    std::string mono;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (!m[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(i + 1);
      if (m[i] > 1) mono += "^" + std::to_string(m[i]);
    }
    bool negative = false;
    const std::string t = detail::term_text(c, mono.empty(), mono, negative);
    if (out.empty())
      out = (negative ? "-" : "") + t;
    else
      out += (negative ? " - " : " + ") + t;
  }
  return out;
}

namespace detail {

// Recursive descent over:
//   expr    := ['+'|'-'] term (('+'|'-') term)*
//   term    := power (('*'|'/') power)*      ('/' only by nonzero constants)
//   power   := primary ['^' integer]
//   primary := integer | 'x' integer | 't' | '(' expr ')'
class PolyParser {
 public:
  PolyParser(std::string_view text, std::size_t n, FieldCtx field) : s_(text), n_(n), field_(field) {}

  MultiPoly parse() {
    skip_ws();
    if (pos_ >= s_.size()) fail("empty polynomial");
    MultiPoly f = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(Errc::SyntaxError, msg + " at position " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  std::string digits() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return std::string(s_.substr(start, pos_ - start));
  }

  MultiPoly expr() {
    MultiPoly acc(field_, n_);
    bool negative = false;
    if (accept('-'))
      negative = true;
    else
      accept('+');
    acc = negative ? -term() : term();
    for (;;) {
      if (accept('+'))
        acc = acc + term();
      else if (accept('-'))
        acc = acc - term();
      else
        return acc;
    }
  }

  MultiPoly term() {
    MultiPoly acc = power();
    for (;;) {
      if (accept('*')) {
        acc = acc * power();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        MultiPoly d = power();
        if (d.total_degree() != Degree(0)) {
          pos_ = at;
          fail(d.is_zero() ? "division by zero" : "division by a non-constant");
        }
        acc = acc.scaled(d.coefficient(Monomial(n_)).inv());
      } else {
        return acc;
      }
    }
  }

  MultiPoly power() {
    MultiPoly base = primary();
    if (accept('^')) {
      const std::string e = digits();
      if (e.size() > 6) fail("exponent too large");
      return base.pow(static_cast<unsigned>(std::stoul(e)));
    }
    return base;
  }

  MultiPoly primary() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      MultiPoly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)))
      return MultiPoly::constant(field_, n_, field_.from_mpz(mpz_class(digits())));
    if (c == 'x' || c == 'X') {
      const std::size_t at = pos_;
      ++pos_;
      if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected variable index");
      const std::string idx = digits();
      const unsigned long i = idx.size() > 6 ? 0 : std::stoul(idx);
      if (i < 1 || i > n_)
        throw Error(Errc::UnknownVariable, "x" + idx + " at position " + std::to_string(at) + " (polynomial has " +
                                               std::to_string(n_) + " variables)");
      return MultiPoly::variable(field_, n_, i - 1);
    }
    if (c == 't') {
      if (field_.kind() != FieldKind::Extension)
        throw Error(Errc::UnknownVariable, "'t' at position " + std::to_string(pos_) + " outside an extension field");
      ++pos_;
      return MultiPoly::constant(field_, n_, field_.generator());
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  std::size_t n_;
  FieldCtx field_;
};

}  // namespace detail

/// Parses the polynomial grammar: `x1*x2 - x1^3`, `1 - (x1+x2)^6`,
/// `(2*t+1)*x1^2`, `1/2*x1`.
inline MultiPoly parse_poly(std::string_view text, std::size_t n, FieldCtx field) {
  return detail::PolyParser(text, n, field).parse();
}

/// Largest variable index appearing in the text (`x3` -> 3), 0 when none.
inline std::size_t infer_variable_count(std::string_view text) {
  std::size_t best = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if ((text[i] != 'x' && text[i] != 'X') || i + 1 >= text.size() ||
        !std::isdigit(static_cast<unsigned char>(text[i + 1])))
      continue;
    std::size_t j = i + 1, v = 0;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) v = v * 10 + (text[j++] - '0');
    best = std::max(best, v);
  }
  return best;
}

}  // namespace gridnull
