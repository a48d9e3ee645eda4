#pragma once

// JSON encoding of the report types. Field elements travel as strings in the
// element grammar, together with the field spec so decoding can rebuild them.

#include <string>
#include <vector>

#include <json.hpp>

#include "gridnull/field.hpp"
#include "gridnull/report.hpp"
#include "gridnull/theorems.hpp"

namespace gridnull {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

namespace detail {

inline Json degree_json(Degree d) { return d.is_minus_infinity() ? Json(nullptr) : Json(d.value()); }
inline Degree degree_from_json(const Json& j) { return j.is_null() ? Degree::minus_infinity() : Degree(j.get<long long>()); }

inline Json point_json(const Point& a) {
  Json out = Json::array();
  for (const auto& x : a) out.push_back(x.to_string());
  return out;
}
inline Point point_from_json(const Json& j, const FieldCtx& field) {
  Point a;
  for (const auto& x : j) a.push_back(field.parse_element(x.get<std::string>()));
  return a;
}

inline void check_schema(const Json& j, const char* kind) {
  if (!j.contains("schema_version") || j["schema_version"] != kSchemaVersion)
    throw Error(Errc::SyntaxError, "unsupported schema_version");
  if (j.value("kind", "") != kind) throw Error(Errc::SyntaxError, std::string("expected a ") + kind + " report");
}

}  // namespace detail

inline Json to_json(const WitnessReport& r, const FieldCtx& field) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "witness";
  j["field"] = field.to_string();
  j["hypothesis_ok"] = r.hypothesis_ok;
  Json monos = Json::array();
  for (const auto& m : r.qualifying_monomials) monos.push_back(m.exponents());
  j["qualifying_monomials"] = monos;
  j["witness"] = r.witness ? detail::point_json(*r.witness) : Json(nullptr);
  j["zero_count"] = r.zero_count;
  j["nonzero_count"] = r.nonzero_count;
  j["degree"] = detail::degree_json(r.degree);
  j["joint_nullity"] = r.joint_nullity;
  j["factor_nullities"] = r.factor_nullities;
  j["singleton_factor"] = r.singleton_factor;
  return j;
}

inline WitnessReport witness_report_from_json(const Json& j) {
  detail::check_schema(j, "witness");
  const FieldCtx field = FieldCtx::parse(j.at("field").get<std::string>());
  WitnessReport r;
  r.hypothesis_ok = j.at("hypothesis_ok").get<bool>();
  for (const auto& m : j.at("qualifying_monomials")) r.qualifying_monomials.emplace_back(m.get<std::vector<unsigned>>());
  if (!j.at("witness").is_null()) r.witness = detail::point_from_json(j["witness"], field);
  r.zero_count = j.at("zero_count").get<std::uint64_t>();
  r.nonzero_count = j.at("nonzero_count").get<std::uint64_t>();
  r.degree = detail::degree_from_json(j.at("degree"));
  r.joint_nullity = j.at("joint_nullity").get<std::size_t>();
  r.factor_nullities = j.at("factor_nullities").get<std::vector<std::size_t>>();
  r.singleton_factor = j.at("singleton_factor").get<bool>();
  return r;
}

inline Json to_json(const CoefficientReport& r, const FieldCtx& field) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "coefficient";
  j["field"] = field.to_string();
  j["target"] = r.target.exponents();
  j["weighted_sum"] = r.weighted_sum.to_string();
  j["direct_coefficient"] = r.direct_coefficient.to_string();
  j["degree_bound_ok"] = r.degree_bound_ok;
  j["degree"] = detail::degree_json(r.degree);
  j["degree_bound"] = r.degree_bound;
  j["matches"] = r.matches();
  return j;
}

inline CoefficientReport coefficient_report_from_json(const Json& j) {
  detail::check_schema(j, "coefficient");
  const FieldCtx field = FieldCtx::parse(j.at("field").get<std::string>());
  CoefficientReport r;
  r.target = Monomial(j.at("target").get<std::vector<unsigned>>());
  r.weighted_sum = field.parse_element(j.at("weighted_sum").get<std::string>());
  r.direct_coefficient = field.parse_element(j.at("direct_coefficient").get<std::string>());
  r.degree_bound_ok = j.at("degree_bound_ok").get<bool>();
  r.degree = detail::degree_from_json(j.at("degree"));
  r.degree_bound = j.at("degree_bound").get<long long>();
  return r;
}

inline Json to_json(const ScanReport& r) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "scan";
  j["name"] = r.name;
  Json params = Json::object();
  for (const auto& [k, v] : r.parameters) params[k] = v;
  j["parameters"] = params;
  j["instances"] = r.instances;
  Json verdicts = Json::object();
  for (const auto& [k, v] : r.verdicts) verdicts[k] = v;
  j["verdicts"] = verdicts;
  j["counterexamples"] = r.counterexamples;
  j["seed"] = r.seed ? Json(*r.seed) : Json(nullptr);
  j["elapsed_seconds"] = r.elapsed_seconds;
  j["passed"] = r.passed();
  return j;
}

inline ScanReport scan_report_from_json(const Json& j) {
  detail::check_schema(j, "scan");
  ScanReport r;
  r.name = j.at("name").get<std::string>();
  for (const auto& [k, v] : j.at("parameters").items()) r.parameters.emplace_back(k, v.get<std::string>());
  r.instances = j.at("instances").get<std::uint64_t>();
  for (const auto& [k, v] : j.at("verdicts").items()) r.verdicts.emplace_back(k, v.get<bool>());
  r.counterexamples = j.at("counterexamples").get<std::vector<std::string>>();
  if (!j.at("seed").is_null()) r.seed = j["seed"].get<std::uint64_t>();
  r.elapsed_seconds = j.at("elapsed_seconds").get<double>();
  return r;
}

}  // namespace gridnull
