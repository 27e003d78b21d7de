#pragma once

/**
 * @file json_report.hpp
 * @brief Canonical JSON for reports. Keys keep insertion order and rationals
 *        are "p/q" strings, so equal inputs give byte-identical text.
 */

#include "json.hpp"

#include "mvlab/adjunction.hpp"
#include "mvlab/ideals.hpp"
#include "mvlab/report.hpp"

namespace mvlab {

using Json = nlohmann::ordered_json;

inline Json to_json(const Rational& q) { return q.str(); }

/// A rank-1 element is a string, a product element an array of strings.
inline Json to_json(const MvElement& x) {
  if (x.size() == 1) return x[0].str();
  Json a = Json::array();
  for (const auto& c : x) a.push_back(c.str());
  return a;
}

inline Json to_json(const Assignment& a) {
  Json o = Json::object();
  for (const auto& [name, v] : a) o[name] = to_json(v);
  return o;
}

inline Json to_json(const std::vector<std::string>& xs) {
  Json a = Json::array();
  for (const auto& x : xs) a.push_back(x);
  return a;
}

inline const char* verdict(bool pass) { return pass ? "pass" : "fail"; }

inline Json to_json(const LawCheck& c) {
  Json o;
  o["law"] = c.law;
  o["statement"] = c.statement;
  o["verdict"] = verdict(c.passed());
  o["cases"] = c.cases;
  o["exhaustive"] = c.exhaustive;
  if (c.counterexample) o["counterexample"] = to_json(*c.counterexample);
  return o;
}

inline Json to_json(const LawReport& r) {
  Json o;
  o["verdict"] = verdict(r.passed());
  o["cases"] = r.cases();
  o["seed"] = r.seed;
  o["instance"] = r.instance;
  o["exhaustive"] = r.exhaustive();
  Json laws = Json::array();
  Json cex = Json::array();
  for (const auto& l : r.laws) {
    laws.push_back(to_json(l));
    if (l.counterexample) cex.push_back(Json{{"law", l.law}, {"assignment", to_json(*l.counterexample)}});
  }
  o["laws"] = std::move(laws);
  o["counterexamples"] = std::move(cex);
  o["certificates"] = to_json(r.certificates);
  return o;
}

inline Json to_json(const DomainReport& r) {
  Json o;
  o["verdict"] = verdict(r.holds);
  o["cases"] = r.cases;
  o["seed"] = r.seed;
  o["instance"] = r.instance;
  o["property"] = r.property;
  o["holds"] = r.holds;
  o["status"] = r.status();
  o["exhaustive"] = r.exhaustive;
  if (r.witness) o["witness"] = to_json(*r.witness);
  o["certificates"] = to_json(r.certificates);
  return o;
}

inline Json to_json(const Ideal& i) {
  Json o;
  Json es = Json::array();
  for (const auto& x : i.elements) es.push_back(to_json(x));
  o["elements"] = std::move(es);
  o["maximal"] = i.maximal;
  return o;
}

inline Json to_json(const LinearMap& m) {
  Json o;
  o["map"] = m.describe();
  Json rows = Json::array();
  for (const auto& row : m.matrix()) {
    Json r = Json::array();
    for (const auto& q : row) r.push_back(q.str());
    rows.push_back(std::move(r));
  }
  o["matrix"] = std::move(rows);
  return o;
}

inline Json to_json(const LinearSpace& v) {
  Json o;
  o["field"] = v.field.describe();
  o["space"] = v.describe();
  Json u = Json::array();
  for (const auto& q : v.unit) u.push_back(q.str());
  o["unit"] = std::move(u);
  return o;
}

inline Json to_json(const AdjunctionReport& r) {
  Json o = to_json(r.laws);
  o["verdict"] = verdict(r.passed());
  o["instances"] = r.instances;
  o["valid"] = r.valid;
  o["vacuous"] = r.vacuous();
  o["invalid"] = to_json(r.invalid);
  o["failures"] = to_json(r.failures);
  return o;
}

/// Two-space indentation and a trailing newline.
inline std::string emit_report(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace mvlab
