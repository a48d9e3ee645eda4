#pragma once

// Command-line front end. run() takes the arguments after the program name
// and writes to the given streams, so tests can drive it in-process.
//
// Exit codes: 0 success / verdict true, 1 counterexample, 2 usage or input error.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gridnull/gridnull.hpp"
#include "gridnull/report_json.hpp"
#include "gridnull/suites.hpp"

namespace gridnull::cli {

inline constexpr const char* kFieldGrammar = "Q | F<p> | F<p>^<e> | F<p>^<e>/<c0>,<c1>,...,1";
inline constexpr const char* kSetGrammar =
    "{e1, e2, ...} | mul(d[,shift]) | add(g1;g2;...[,shift]) | tracezero | all | units";
inline constexpr const char* kGridGrammar = "factors joined by 'x', each {e1, e2, ...} | mul(d[,shift]) | "
                                            "add(g1;g2;...[,shift]) | tracezero | all | units";
inline constexpr const char* kPolyGrammar = "terms in x1..xn joined by +/-, e.g. 2*x1^2*x2 - (x1+x2)^3 + 5";

/// Input problem tied to one flag; reported with the grammar it must follow.
struct UsageError {
  std::string flag;
  std::string message;
  std::string grammar;
};

namespace detail {

inline std::string read_file(const std::string& path, const std::string& flag) {
  std::ifstream in(path);
  if (!in) throw UsageError{flag, "cannot read '" + path + "'", ""};
  std::stringstream ss;
  ss << in.rdbuf();
  std::string s = ss.str();
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
  return s;
}

template <class Fn>
auto guarded(const std::string& flag, const char* grammar, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Error& e) {
    throw UsageError{flag, e.what(), grammar};
  }
}

inline std::string join(const std::vector<std::string>& parts, const std::string& sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

template <class T>
std::string join_numbers(const std::vector<T>& v) {
  std::vector<std::string> parts;
  for (const auto& x : v) parts.push_back(std::to_string(x));
  return join(parts);
}

inline std::string elements_text(const std::vector<FieldElement>& v) {
  std::vector<std::string> parts;
  for (const auto& x : v) parts.push_back(x.to_string());
  return join(parts);
}

inline std::string point_text(const Point& a) { return "(" + elements_text(a) + ")"; }

inline std::string monomial_text(const Monomial& m) {
  std::vector<std::string> parts;
  for (auto e : m.exponents()) parts.push_back(std::to_string(e));
  return "(" + join(parts) + ")";
}

inline Json elements_json(const std::vector<FieldElement>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.to_string());
  return out;
}

inline std::string bool_text(bool b) { return b ? "true" : "false"; }

inline std::vector<std::string_view> comma_list(std::string_view s) {
  s = gridnull::detail::strip(s);
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  return gridnull::detail::split_top(s, ',');
}

// Key/value lines or a JSON object, filled in the same order.
class Emitter {
 public:
  explicit Emitter(bool json) : json_(json) { j_["schema_version"] = kSchemaVersion; }

  void kv(const std::string& key, const std::string& text) { kv(key, text, Json(text)); }
  void kv(const std::string& key, const std::string& text, Json value) {
    lines_.push_back(key + ": " + text);
    j_[key] = std::move(value);
  }
  void line(const std::string& text) { lines_.push_back(text); }  // text only
  void json_only(const std::string& key, Json value) { j_[key] = std::move(value); }

  void write(std::ostream& out) const {
    if (json_) {
      out << j_.dump(2) << "\n";
      return;
    }
    for (const auto& l : lines_) out << l << "\n";
  }

 private:
  bool json_;
  Json j_;
  std::vector<std::string> lines_;
};

inline void write_scan(const ScanReport& r, bool json, std::ostream& out) {
  if (json) {
    out << to_json(r).dump(2) << "\n";
    return;
  }
  out << "scan: " << r.name << "\n";
  for (const auto& [k, v] : r.parameters) out << k << ": " << v << "\n";
  out << "instances: " << r.instances << "\n";
  if (r.seed) out << "seed: " << *r.seed << "\n";
  for (const auto& [k, v] : r.verdicts) out << "verdict " << k << ": " << bool_text(v) << "\n";
  out << "counterexamples: " << r.counterexamples.size() << "\n";
  for (const auto& c : r.counterexamples) out << "counterexample: " << c << "\n";
  out << "result: " << (r.passed() ? "pass" : "fail") << "\n";
}

inline int scan_exit_code(const ScanReport& r) { return r.passed() ? 0 : 1; }

}  // namespace detail

/// Parses and dispatches one invocation.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Nullity of finite sets and polynomial theorems over structured grids", "gridnull"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Expand all help");

  std::string field_text = "Q", grid_text, grid_file, poly_text, poly_file, k_text, c_text, mode = "plain", scan;
  std::string values_file, set_text;
  std::vector<std::string> set_texts;
  std::optional<std::size_t> lambda, bound;
  std::optional<std::uint64_t> seed, p_opt, q_opt;
  std::size_t count = 0;
  bool json = false, show_weights = false;

  auto add_field = [&](CLI::App* sub) { sub->add_option("--field", field_text, std::string("Field: ") + kFieldGrammar); };
  auto add_grid = [&](CLI::App* sub) {
    auto* g = sub->add_option("--grid", grid_text, std::string("Grid: ") + kGridGrammar);
    auto* f = sub->add_option("--grid-file", grid_file, "File containing the grid spec");
    g->excludes(f);
  };
  auto add_poly = [&](CLI::App* sub) {
    auto* p = sub->add_option("--poly", poly_text, std::string("Polynomial: ") + kPolyGrammar);
    auto* f = sub->add_option("--poly-file", poly_file, "File containing the polynomial");
    p->excludes(f);
  };
  auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", json, "Emit a JSON object instead of key: value lines"); };

  auto* analyze_set = app.add_subcommand("analyze-set", "Characteristic polynomial, nullity and moments of a set");
  add_field(analyze_set);
  analyze_set->add_option("--set", set_text, std::string("Set: ") + kSetGrammar)->required();
  analyze_set->add_option("--bound", bound, "Largest moment index R (default |A|)");
  add_json(analyze_set);

  auto* analyze_grid = app.add_subcommand("analyze-grid", "Factor nullities, joint nullity and sizes of a grid");
  add_field(analyze_grid);
  add_grid(analyze_grid);
  analyze_grid->add_flag("--weights", show_weights, "List the weight of every grid point");
  add_json(analyze_grid);

  auto* cn = app.add_subcommand("cn-check", "Qualifying monomials and first non-vanishing grid point");
  add_field(cn);
  add_grid(cn);
  add_poly(cn);
  add_json(cn);

  auto* coeff = app.add_subcommand("coeff", "Top (or --k) coefficient from a weighted grid sum");
  add_field(coeff);
  add_grid(coeff);
  add_poly(coeff);
  coeff->add_option("--k", k_text, "Target exponents k1,...,kn (default: top grid monomial)");
  add_json(coeff);

  auto* interp = app.add_subcommand("interpolate", "Rebuild a polynomial of degree <= lambda from grid values");
  add_field(interp);
  add_grid(interp);
  add_poly(interp);
  interp->add_option("--values-file", values_file, "Lines '(a1, ..., an) = v' giving the value at every grid point");
  interp->add_option("--lambda", lambda, "Degree bound (default: joint nullity)");
  add_json(interp);

  auto* gsum = app.add_subcommand("grid-sum", "Plain or weighted sum of f over the grid");
  add_field(gsum);
  add_grid(gsum);
  add_poly(gsum);
  gsum->add_option("--mode", mode, "plain | weighted")->check(CLI::IsMember({"plain", "weighted"}));
  add_json(gsum);

  auto* sumset = app.add_subcommand("sumset-cd", "Sumset dichotomy for two subsets of F_p");
  add_field(sumset);
  sumset->add_option("--set", set_texts, "Give exactly twice: A then B")->required()->allow_extra_args(false);
  add_json(sumset);

  auto* plane = app.add_subcommand("plane-scan", "Plane/grid intersection counts over F_q");
  add_field(plane);
  add_grid(plane);
  plane->add_option("--c", c_text, "Single plane normal c1,...,cn (default: scan every plane)");
  add_json(plane);

  auto* oracle = app.add_subcommand("oracle-suite", "Exhaustive scans and seeded randomized batches");
  oracle->add_option("--scan", scan, "scd | redei | ore | " + detail::join(suite_names(), " | "))->required();
  oracle->add_option("--p", p_opt, "Prime for the scd scan");
  oracle->add_option("--q", q_opt, "Field order for the redei and ore scans");
  oracle->add_option("--seed", seed, "Seed for randomized batches (fallback: GRIDNULL_SEED)");
  oracle->add_option("--count", count, "Instance count for randomized batches (default per batch)");
  add_json(oracle);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    err << "run 'gridnull --help' for usage\n";
    return 2;
  }

  try {
    auto field = [&] {
      return detail::guarded("--field", kFieldGrammar, [&] { return FieldCtx::parse(field_text); });
    };
    auto grid = [&](const FieldCtx& f) {
      std::string text = grid_text;
      if (!grid_file.empty()) text = detail::read_file(grid_file, "--grid-file");
      if (text.empty()) throw UsageError{"--grid", "a grid is required (--grid or --grid-file)", kGridGrammar};
      return detail::guarded("--grid", kGridGrammar, [&] { return parse_grid(text, f); });
    };
    auto poly = [&](const FieldCtx& f, std::size_t n, bool required = true) -> std::optional<MultiPoly> {
      std::string text = poly_text;
      if (!poly_file.empty()) text = detail::read_file(poly_file, "--poly-file");
      if (text.empty()) {
        if (!required) return std::nullopt;
        throw UsageError{"--poly", "a polynomial is required (--poly or --poly-file)", kPolyGrammar};
      }
      return detail::guarded("--poly", kPolyGrammar, [&] { return parse_poly(text, n, f); });
    };

    if (analyze_set->parsed()) {
      const FieldCtx f = field();
      const FiniteSet set = detail::guarded("--set", kSetGrammar, [&] { return parse_factor(set_text, f); });
      const std::size_t r = bound.value_or(set.size());
      const MomentTable t = set.moments(r);
      detail::Emitter em(json);
      em.kv("field", f.to_string());
      em.kv("set", set.to_string(), detail::elements_json(set.elements()));
      em.kv("size", std::to_string(set.size()), set.size());
      em.kv("char_poly", set.char_poly().to_string());
      em.kv("nullity", std::to_string(nullity(set)), nullity(set));
      em.kv("vandermonde_degree", std::to_string(vandermonde_degree(set)), vandermonde_degree(set));
      em.kv("moment_bound", std::to_string(r), r);
      em.kv("e", detail::elements_text(t.e), detail::elements_json(t.e));
      em.kv("h", detail::elements_text(t.h), detail::elements_json(t.h));
      em.kv("p", detail::elements_text(t.p), detail::elements_json(t.p));
      em.write(out);
      return 0;
    }

    if (analyze_grid->parsed()) {
      const FieldCtx f = field();
      const Grid g = grid(f);
      detail::Emitter em(json);
      em.kv("field", f.to_string());
      em.kv("grid", g.to_string());
      em.kv("dimension", std::to_string(g.dimension()), g.dimension());
      em.kv("sizes", detail::join_numbers(g.sizes()), g.sizes());
      em.kv("points", std::to_string(g.point_count()), g.point_count());
      em.kv("factor_nullities", detail::join_numbers(g.factor_nullities()), g.factor_nullities());
      em.kv("joint_nullity", std::to_string(g.joint_nullity()), g.joint_nullity());
      em.kv("factor_vandermonde_degrees", detail::join_numbers(g.factor_vandermonde_degrees()),
            g.factor_vandermonde_degrees());
      em.kv("joint_vandermonde", std::to_string(g.joint_vandermonde()), g.joint_vandermonde());
      em.kv("top_monomial", detail::monomial_text(g.top_monomial()), g.top_monomial().exponents());
      em.kv("coefficient_degree_bound", std::to_string(g.top_degree() + static_cast<long long>(g.joint_nullity())),
            g.top_degree() + static_cast<long long>(g.joint_nullity()));
      em.kv("singleton_factor", detail::bool_text(g.has_singleton()), g.has_singleton());
      if (show_weights) {
        Json ws = Json::array();
        g.for_each_point([&](const Point& a, const std::vector<std::size_t>& idx) {
          const FieldElement w = g.weight_at(idx);
          em.line("weight " + detail::point_text(a) + ": " + w.to_string());
          ws.push_back({{"point", detail::elements_json(a)}, {"weight", w.to_string()}});
        });
        em.json_only("weights", ws);
      }
      em.write(out);
      return 0;
    }

    if (cn->parsed()) {
      const FieldCtx f = field();
      const Grid g = grid(f);
      const MultiPoly p = *poly(f, g.dimension());
      const WitnessReport r = detail::guarded("--poly", kPolyGrammar, [&] { return gcn_check(p, g); });
      if (json) {
        Json j = to_json(r, f);
        j["grid"] = g.to_string();
        j["poly"] = format_poly(p);
        out << j.dump(2) << "\n";
      } else {
        std::vector<std::string> monos;
        for (const auto& m : r.qualifying_monomials) monos.push_back(detail::monomial_text(m));
        out << "field: " << f.to_string() << "\n"
            << "grid: " << g.to_string() << "\n"
            << "poly: " << format_poly(p) << "\n"
            << "degree: " << r.degree.to_string() << "\n"
            << "factor_nullities: " << detail::join_numbers(r.factor_nullities) << "\n"
            << "joint_nullity: " << r.joint_nullity << "\n"
            << "qualifying_monomials: " << (monos.empty() ? "none" : detail::join(monos)) << "\n"
            << "hypothesis_ok: " << detail::bool_text(r.hypothesis_ok) << "\n"
            << "witness: " << (r.witness ? detail::point_text(*r.witness) : "none") << "\n"
            << "zero_count: " << r.zero_count << "\n"
            << "nonzero_count: " << r.nonzero_count << "\n";
        if (r.singleton_factor) out << "warning: grid has a singleton factor\n";
      }
      if (r.hypothesis_ok && r.nonzero_count == 0) {
        err << "counterexample: qualifying monomial but f vanishes on the whole grid\n";
        return 1;
      }
      return 0;
    }

    if (coeff->parsed()) {
      const FieldCtx f = field();
      const Grid g = grid(f);
      const MultiPoly p = *poly(f, g.dimension());
      if (!k_text.empty()) {
        Monomial k(g.dimension());
        const auto parts = detail::comma_list(k_text);
        if (parts.size() != g.dimension())
          throw UsageError{"--k", "expected " + std::to_string(g.dimension()) + " exponents", "k1,...,kn"};
        for (std::size_t i = 0; i < parts.size(); ++i)
          k[i] = static_cast<unsigned>(
              detail::guarded("--k", "k1,...,kn", [&] { return gridnull::detail::parse_u64(parts[i], "exponent"); }));
        const FieldElement extracted = extract_coefficient(p, g, k);
        const FieldElement direct = coefficient_oracle(p, k);
        detail::Emitter em(json);
        em.kv("field", f.to_string());
        em.kv("grid", g.to_string());
        em.kv("poly", format_poly(p));
        em.kv("target", detail::monomial_text(k), k.exponents());
        em.kv("raised", format_poly(raise_degree(p, g, k)));
        em.kv("weighted_sum", extracted.to_string());
        em.kv("direct_coefficient", direct.to_string());
        em.kv("matches", detail::bool_text(extracted == direct), extracted == direct);
        em.write(out);
        if (!(extracted == direct)) {
          err << "counterexample: extracted coefficient differs from the stored one\n";
          return 1;
        }
        return 0;
      }
      const CoefficientReport r = cct_coefficient(p, g);
      if (json) {
        Json j = to_json(r, f);
        j["grid"] = g.to_string();
        j["poly"] = format_poly(p);
        out << j.dump(2) << "\n";
      } else {
        out << "field: " << f.to_string() << "\n"
            << "grid: " << g.to_string() << "\n"
            << "poly: " << format_poly(p) << "\n"
            << "target: " << detail::monomial_text(r.target) << "\n"
            << "degree: " << r.degree.to_string() << "\n"
            << "degree_bound: " << r.degree_bound << "\n"
            << "degree_bound_ok: " << detail::bool_text(r.degree_bound_ok) << "\n"
            << "weighted_sum: " << r.weighted_sum << "\n"
            << "direct_coefficient: " << r.direct_coefficient << "\n"
            << "matches: " << detail::bool_text(r.matches()) << "\n";
      }
      if (r.degree_bound_ok && !r.matches()) {
        err << "counterexample: weighted sum differs from the coefficient within the degree bound\n";
        return 1;
      }
      return 0;
    }

    if (interp->parsed()) {
      const FieldCtx f = field();
      const Grid g = grid(f);
      const std::optional<MultiPoly> p = poly(f, g.dimension(), values_file.empty());
      if (p && !values_file.empty()) throw UsageError{"--values-file", "give either a polynomial or a values file", ""};
      std::map<Point, FieldElement> values;
      if (p) {
        g.for_each_point([&](const Point& a, const auto&) { values[a] = (*p)(a); });
      } else {
        std::istringstream in(detail::read_file(values_file, "--values-file"));
        std::string line;
        const char* grammar = "(a1, ..., an) = v per line";
        while (std::getline(in, line)) {
          const std::string_view s = gridnull::detail::strip(line);
          if (s.empty() || s.front() == '#') continue;
          const auto eq = s.rfind('=');
          if (eq == std::string_view::npos) throw UsageError{"--values-file", "missing '=' in '" + std::string(s) + "'", grammar};
          detail::guarded("--values-file", grammar, [&] {
            Point a;
            for (auto part : detail::comma_list(s.substr(0, eq))) a.push_back(f.parse_element(part));
            values[a] = f.parse_element(s.substr(eq + 1));
            return 0;
          });
        }
      }
      const std::size_t lam = lambda.value_or(g.joint_nullity());
      const MultiPoly result = interpolate(g, values, lam);
      bool reproduces = true;
      g.for_each_point([&](const Point& a, const auto&) { reproduces = reproduces && result(a) == values.at(a); });
      detail::Emitter em(json);
      em.kv("field", f.to_string());
      em.kv("grid", g.to_string());
      em.kv("lambda", std::to_string(lam), lam);
      em.kv("joint_nullity", std::to_string(g.joint_nullity()), g.joint_nullity());
      if (p) em.kv("input", format_poly(*p));
      em.kv("interpolated", format_poly(result));
      em.kv("reproduces_values", detail::bool_text(reproduces), reproduces);
      bool violated = false;
      if (p) {
        const bool in_bound = p->total_degree() <= Degree(static_cast<long long>(lam));
        em.kv("input_degree_within_lambda", detail::bool_text(in_bound), in_bound);
        em.kv("round_trip", detail::bool_text(result == *p), result == *p);
        violated = in_bound && !(result == *p);
      }
      em.write(out);
      if (violated) {
        err << "counterexample: polynomial of degree <= lambda not recovered\n";
        return 1;
      }
      return 0;
    }

    if (gsum->parsed()) {
      const FieldCtx f = field();
      const Grid g = grid(f);
      const MultiPoly p = *poly(f, g.dimension());
      const FieldElement s = grid_sum(p, g, mode == "weighted" ? SumMode::Weighted : SumMode::Plain);
      detail::Emitter em(json);
      em.kv("field", f.to_string());
      em.kv("grid", g.to_string());
      em.kv("poly", format_poly(p));
      em.kv("mode", mode);
      em.kv("points", std::to_string(g.point_count()), g.point_count());
      em.kv("joint_nullity", std::to_string(g.joint_nullity()), g.joint_nullity());
      em.kv("joint_vandermonde", std::to_string(g.joint_vandermonde()), g.joint_vandermonde());
      em.kv("sum", s.to_string());
      em.write(out);
      return 0;
    }

    if (sumset->parsed()) {
      if (set_texts.size() != 2) throw UsageError{"--set", "give --set exactly twice (A then B)", kSetGrammar};
      const FieldCtx f = field();
      const FiniteSet a = detail::guarded("--set", kSetGrammar, [&] { return parse_factor(set_texts[0], f); });
      const FiniteSet b = detail::guarded("--set", kSetGrammar, [&] { return parse_factor(set_texts[1], f); });
      const SumsetReport r = detail::guarded("--field", "F<p>", [&] { return cauchy_davenport(a, b); });
      detail::Emitter em(json);
      em.kv("field", f.to_string());
      em.kv("A", a.to_string(), detail::elements_json(a.elements()));
      em.kv("B", b.to_string(), detail::elements_json(b.elements()));
      em.kv("sumset", r.sumset.to_string(), detail::elements_json(r.sumset.elements()));
      em.kv("sizes", std::to_string(r.size_a) + ", " + std::to_string(r.size_b) + ", " + std::to_string(r.size_sum),
            Json::array({r.size_a, r.size_b, r.size_sum}));
      em.kv("nullities",
            std::to_string(r.nullity_a) + ", " + std::to_string(r.nullity_b) + ", " + std::to_string(r.nullity_sum),
            Json::array({r.nullity_a, r.nullity_b, r.nullity_sum}));
      em.kv("structured", detail::bool_text(r.structured), r.structured);
      em.kv("large", detail::bool_text(r.large), r.large);
      em.kv("verdict", detail::bool_text(r.verdict()), r.verdict());
      em.write(out);
      if (!r.verdict()) {
        err << "counterexample: A = " << a.to_string() << ", B = " << b.to_string() << "\n";
        return 1;
      }
      return 0;
    }

    if (plane->parsed()) {
      const FieldCtx f = field();
      const Grid g = grid(f);
      if (c_text.empty()) {
        const ScanReport r = detail::guarded("--field", "finite field", [&] { return plane_scan(g); });
        detail::write_scan(r, json, out);
        return detail::scan_exit_code(r);
      }
      std::vector<FieldElement> c;
      for (auto part : detail::comma_list(c_text))
        c.push_back(detail::guarded("--c", "c1,...,cn", [&] { return f.parse_element(part); }));
      const PlaneReport r = detail::guarded("--c", "c1,...,cn", [&] { return plane_grid_count(c, g); });
      detail::Emitter em(json);
      em.kv("field", f.to_string());
      em.kv("grid", g.to_string());
      em.kv("normal", "(" + detail::elements_text(c) + ")", detail::elements_json(c));
      em.kv("intersection_count", std::to_string(r.intersection_count), r.intersection_count);
      em.kv("pp", detail::bool_text(r.pp), r.pp);
      em.kv("pp_p", detail::bool_text(r.pp_p), r.pp_p);
      em.kv("condition_unstructured_pp", detail::bool_text(r.conditions.unstructured_pp), r.conditions.unstructured_pp);
      em.kv("condition_structured_pp", detail::bool_text(r.conditions.structured_pp), r.conditions.structured_pp);
      em.kv("condition_pp_p", detail::bool_text(r.conditions.pp_p), r.conditions.pp_p);
      em.write(out);
      const bool violated = (r.conditions.pp_guaranteed() && !r.pp) || (r.conditions.pp_p && !r.pp_p);
      if (violated) {
        err << "counterexample: plane (" << detail::elements_text(c) << ")\n";
        return 1;
      }
      return 0;
    }

    if (oracle->parsed()) {
      ScanReport r;
      if (scan == "scd") {
        if (!p_opt) throw UsageError{"--p", "the scd scan needs --p", "--p <prime <= 7>"};
        r = detail::guarded("--p", "--p <prime <= 7>", [&] {
          if (!gridnull::detail::is_prime(*p_opt)) throw Error(Errc::NonPrimeModulus, std::to_string(*p_opt) + " is not prime");
          return scd_scan(*p_opt);
        });
      } else if (scan == "redei" || scan == "ore") {
        if (!q_opt) throw UsageError{"--q", "the " + scan + " scan needs --q", "--q <prime power>"};
        r = detail::guarded("--q", "--q <prime power>", [&] { return scan == "redei" ? redei_scan(*q_opt) : ore_scan(*q_opt); });
      } else if (std::find(suite_names().begin(), suite_names().end(), scan) != suite_names().end()) {
        std::uint64_t s = OracleConfig{}.rng_seed;
        if (seed) {
          s = *seed;
        } else if (const char* env = std::getenv("GRIDNULL_SEED")) {
          s = detail::guarded("GRIDNULL_SEED", "unsigned integer",
                              [&] { return gridnull::detail::parse_u64(env, "GRIDNULL_SEED"); });
        }
        r = run_suite(scan, s, count);
      } else {
        throw UsageError{"--scan", "unknown scan '" + scan + "'",
                         "scd | redei | ore | " + detail::join(suite_names(), " | ")};
      }
      detail::write_scan(r, json, out);
      return detail::scan_exit_code(r);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.flag << ": " << e.message << "\n";
    if (!e.grammar.empty()) err << "expected: " << e.grammar << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace gridnull::cli
