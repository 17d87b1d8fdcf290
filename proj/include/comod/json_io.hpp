/*
 * Copyright 2026 The comod Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/**
 * \file comod/json_io.hpp
 *
 * \brief JSON for capacity files, transform files, reports and forms.
 *
 * Scalars are written as strings ("p/q" in rational mode). On input, strings
 * and JSON numbers are both accepted; numbers are read from their decimal
 * text, so 0.3 means 3/10 exactly.
 */

#ifndef COMOD_JSON_IO_HPP
#define COMOD_JSON_IO_HPP

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include <comod/axioms.hpp>
#include <comod/decompose.hpp>
#include <comod/error.hpp>
#include <comod/scalar.hpp>
#include <comod/set_function.hpp>
#include <comod/transform.hpp>

namespace comod {

using json = nlohmann::ordered_json;

template <Scalar S>
S scalar_from_json(const json& j) {
  if (j.is_string()) return parse_scalar<S>(j.get<std::string>());
  if (j.is_number()) return parse_scalar<S>(j.dump());
  throw error(errc::parse_error, "expected a number or rational string, got " + j.dump());
}

template <Scalar S>
json scalar_to_json(const S& s) {
  return to_string(s);
}

template <Scalar S>
json tuple_to_json(span_of<S> x) {
  json out = json::array();
  for (const S& v : x) out.push_back(scalar_to_json(v));
  return out;
}

template <Scalar S>
std::vector<S> tuple_from_json(const json& j) {
  if (!j.is_array()) throw error(errc::parse_error, "expected a JSON array, got " + j.dump());
  std::vector<S> out;
  for (const auto& v : j) out.push_back(scalar_from_json<S>(v));
  return out;
}

/// Accepts JSON ("[\"1/5\", 0.7]") and the bare form "[1/5,7/10]".
template <Scalar S>
std::vector<S> parse_tuple(const std::string& text) {
  std::string body = text;
  auto first = body.find_first_not_of(" \t");
  auto last = body.find_last_not_of(" \t");
  if (first == std::string::npos || body[first] != '[' || body[last] != ']')
    throw error(errc::parse_error, "tuple must look like [a,b,...], got '" + text + "'");
  body = body.substr(first + 1, last - first - 1);
  std::vector<S> out;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::string token;
    for (char c : item)
      if (c != ' ' && c != '\t' && c != '"') token += c;
    if (token.empty()) throw error(errc::parse_error, "empty entry in '" + text + "'");
    out.push_back(parse_scalar<S>(token));
  }
  return out;
}

template <Scalar S>
Interval<S> parse_interval(const std::string& text) {
  auto ends = parse_tuple<S>(text);
  if (ends.size() != 2) throw error(errc::parse_error, "interval needs two endpoints, got '" + text + "'");
  return Interval<S>(ends[0], ends[1]);
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error(errc::parse_error, "cannot read " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw error(errc::parse_error, path + ": " + e.what());
  }
}

template <Scalar S>
struct CapacityFile {
  SetFunction<S> function;
  Role role;
};

/// {"n", "values": [{"set": [...], "value": ...}], "role", "interval"}.
/// The declared role is validated; a table that fails it raises BadRole.
template <Scalar S>
CapacityFile<S> capacity_from_json(const json& j) {
  try {
    const std::size_t n = j.at("n").get<std::size_t>();
    if (n == 0) throw error(errc::dimension_mismatch, "n must be positive");
    if (n > max_criteria) throw error(errc::n_exceeds_limit, "n=" + std::to_string(n));
    std::vector<std::pair<Subset, S>> assignments;
    for (const auto& entry : j.at("values")) {
      std::vector<std::size_t> elements;
      for (const auto& e : entry.at("set")) {
        const long element = e.get<long>();
        if (element < 1 || element > static_cast<long>(n))
          throw error(errc::subset_out_of_range, "element " + std::to_string(element) + " for n=" + std::to_string(n));
        elements.push_back(static_cast<std::size_t>(element));
      }
      assignments.emplace_back(Subset::of(elements), scalar_from_json<S>(entry.at("value")));
    }
    SetFunction<S> sf = SetFunction<S>::from_assignments(n, assignments);
    const Role role = parse_role(j.value("role", std::string("signed")));
    std::optional<Interval<S>> interval;
    if (j.contains("interval")) {
      const auto& ends = j.at("interval");
      if (!ends.is_array() || ends.size() != 2) throw error(errc::parse_error, "interval must be [a,b]");
      interval = Interval<S>(scalar_from_json<S>(ends[0]), scalar_from_json<S>(ends[1]));
    }
    if (role == Role::ivalued && !interval) throw error(errc::bad_role, "ivalued role needs an interval");
    RoleVerdict verdict = validate(sf, role, interval);
    if (!verdict.pass) throw error(errc::bad_role, "table is not a valid " + std::string(role_name(role)) + ": " + verdict.reason);
    if (role == Role::ivalued) sf = sf.with_codomain(*interval);
    return {std::move(sf), role};
  } catch (const json::exception& e) {
    throw error(errc::parse_error, std::string("capacity file: ") + e.what());
  }
}

template <Scalar S>
json capacity_to_json(const SetFunction<S>& sf, Role role) {
  json j;
  j["n"] = sf.n();
  json values = json::array();
  for (std::uint32_t mask = 0; mask < sf.size(); ++mask) {
    json entry;
    entry["set"] = Subset(mask).elements();
    entry["value"] = scalar_to_json(sf.at(mask));
    values.push_back(std::move(entry));
  }
  j["values"] = std::move(values);
  j["role"] = std::string(role_name(role));
  if (role == Role::ivalued && sf.codomain())
    j["interval"] = json::array({scalar_to_json(sf.codomain()->lo()), scalar_to_json(sf.codomain()->hi())});
  return j;
}

/// {"breakpoints": [[x,y],...], "properties": [...]} or {"kind": "identity"|"cube"|"signed-square"}.
template <Scalar S>
TransformFn<S> transform_from_json(const json& j) {
  try {
    if (j.contains("kind")) {
      const std::string kind = j.at("kind").get<std::string>();
      if (kind == "identity") return TransformFn<S>::identity();
      if (kind == "cube") return TransformFn<S>::cube();
      if (kind == "signed-square") return TransformFn<S>::signed_square();
      if (kind != "piecewise-linear") throw error(errc::invalid_transform, "unknown transform kind '" + kind + "'");
    }
    std::vector<typename TransformFn<S>::Breakpoint> bps;
    for (const auto& bp : j.at("breakpoints")) {
      if (!bp.is_array() || bp.size() != 2) throw error(errc::invalid_transform, "breakpoint must be [x,y]");
      bps.emplace_back(scalar_from_json<S>(bp[0]), scalar_from_json<S>(bp[1]));
    }
    if (!j.contains("properties")) return TransformFn<S>::piecewise_linear(std::move(bps));
    PropertySet declared;
    for (const auto& p : j.at("properties")) declared.add(parse_property(p.get<std::string>()));
    return TransformFn<S>::piecewise_linear(std::move(bps), declared);
  } catch (const json::exception& e) {
    throw error(errc::parse_error, std::string("transform file: ") + e.what());
  }
}

template <Scalar S>
json transform_to_json(const TransformFn<S>& phi) {
  json j;
  if (phi.kind() != TransformKind::piecewise_linear) {
    j["kind"] = phi.describe();
  } else {
    json bps = json::array();
    for (const auto& [x, y] : phi.breakpoints()) bps.push_back(json::array({scalar_to_json(x), scalar_to_json(y)}));
    j["breakpoints"] = std::move(bps);
  }
  j["properties"] = phi.properties().names();
  return j;
}

template <Scalar S>
json operands_to_json(const Operands<S>& op) {
  json j = json::object();
  if (op.x) j["x"] = tuple_to_json<S>(*op.x);
  if (op.y) j["x'"] = tuple_to_json<S>(*op.y);
  if (op.t) j["t"] = scalar_to_json(*op.t);
  if (op.c) j["c"] = scalar_to_json(*op.c);
  if (op.subset) j["S"] = op.subset->elements();
  return j;
}

template <Scalar S>
json witness_to_json(const Witness<S>& w) {
  json j = operands_to_json(w.operands);
  j["lhs"] = scalar_to_json(w.lhs);
  j["rhs"] = scalar_to_json(w.rhs);
  j["relation"] = w.relation == Relation::equal ? "=" : "<=";
  return j;
}

template <Scalar S>
json report_to_json(const AxiomReport<S>& r) {
  json j;
  j["axiom"] = std::string(axiom_name(r.axiom));
  j["verdict"] = std::string(verdict_name(r.verdict));
  j["witness"] = r.witness ? witness_to_json(*r.witness) : json(nullptr);
  j["tested"] = r.tested;
  j["skipped"] = r.skipped;
  return j;
}

template <Scalar S>
json audit_to_json(const AuditResult<S>& a) {
  json j;
  j["reports"] = json::array();
  for (const auto& r : a.reports) j["reports"].push_back(report_to_json(r));
  j["summary"] = json::array();
  for (const auto& c : a.summary) j["summary"].push_back({{"class", c.label}, {"status", c.status}, {"note", c.note}});
  return j;
}

template <Scalar S>
json refusal_to_json(const Refusal<S>& r) {
  json j;
  j["refused"] = true;
  j["condition"] = r.condition;
  j["witness"] = r.witness ? witness_to_json(*r.witness) : json(nullptr);
  j["detail"] = r.detail;
  return j;
}

template <Scalar S>
json separation_to_json(const SeparationForm<S>& form) {
  json j;
  j["n"] = form.n;
  j["axis"] = tuple_to_json<S>(form.axis);
  j["f_zero"] = scalar_to_json(form.f_zero);
  auto table = [&](const auto& t) {
    json out = json::array();
    for (const auto& [key, value] : t)
      out.push_back({{"t", scalar_to_json(form.axis[key.first])}, {"S", Subset(key.second).elements()},
                     {"value", scalar_to_json(value)}});
    return out;
  };
  j["g_table"] = table(form.g_table);
  j["h_table"] = table(form.h_table);
  return j;
}

template <Scalar S>
json normal_form_to_json(const NormalForm<S>& form) {
  json j;
  j["mode"] = std::string(normal_mode_name(form.mode));
  j["n"] = form.n;
  j["interval"] = json::array({scalar_to_json(form.interval.lo()), scalar_to_json(form.interval.hi())});
  j["axis"] = tuple_to_json<S>(form.axis);
  json tables = json::array();
  for (std::uint32_t mask = 0; mask < form.phi_tables.size(); ++mask)
    tables.push_back({{"S", Subset(mask).elements()}, {"phi", tuple_to_json<S>(form.phi_tables[mask])}});
  j["phi_tables"] = std::move(tables);
  return j;
}

template <Scalar S>
json quasi_sugeno_form_to_json(const QuasiSugenoForm<S>& form) {
  json j;
  j["n"] = form.n;
  j["domain"] = json::array({scalar_to_json(form.domain.lo()), scalar_to_json(form.domain.hi())});
  j["codomain"] = json::array({scalar_to_json(form.codomain.lo()), scalar_to_json(form.codomain.hi())});
  j["axis"] = tuple_to_json<S>(form.axis);
  j["mu_values"] = tuple_to_json<S>(form.mu_values);
  j["phi"] = tuple_to_json<S>(form.phi_values);
  return j;
}

}  // namespace comod

#endif  // COMOD_JSON_IO_HPP
