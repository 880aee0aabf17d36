// Copyright 2026 The hcover Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hcover/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "hcover/errors.hpp"

namespace hcover::io {

namespace {

template <class T>
T field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ShapeError(std::string("missing field \"") + key + "\"");
  }
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ShapeError(std::string("bad field \"") + key + "\": " + e.what());
  }
}

std::vector<Knot> knots_from_json(const json& j) {
  std::vector<Knot> knots;
  for (const auto& pair : field<json>(j, "knots")) {
    if (!pair.is_array() || pair.size() != 2) {
      throw ShapeError("knots must be [t, value] pairs");
    }
    knots.push_back({pair[0].get<double>(), pair[1].get<double>()});
  }
  return knots;
}

json knots_to_json(const std::vector<Knot>& knots) {
  json out = json::array();
  for (const Knot& k : knots) out.push_back({number(k.t), number(k.value)});
  return out;
}

json witness_member(const CoverMember& m, const FiniteMetricSpace* space) {
  if (const auto* set = std::get_if<PointSet>(&m.set)) {
    json labels = json::array();
    for (std::size_t i : set->members()) {
      if (space != nullptr) {
        labels.push_back(space->label(i));
      } else {
        labels.push_back(i);
      }
    }
    return labels;
  }
  if (const auto* cell = std::get_if<Cell>(&m.set)) return cell->prefix;
  const auto& iv = std::get<Interval>(m.set);
  return {number(iv.lo), number(iv.hi)};
}

}  // namespace

json number(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::isnan(x)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", kOutputDigits, x);
  return std::strtod(buf, nullptr);
}

FiniteMetricSpace space_from_json(const json& j, double tol) {
  auto dist = field<std::vector<std::vector<double>>>(j, "dist");
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    for (const auto& l : j.at("labels")) {
      labels.push_back(l.is_string() ? l.get<std::string>() : l.dump());
    }
  } else {
    for (std::size_t i = 0; i < dist.size(); ++i) labels.push_back(std::to_string(i));
  }
  FiniteMetricSpace space(std::move(labels), std::move(dist));
  for (const Violation& v : validate_metric(space, tol).violations) {
    if (v.axiom == Axiom::kSymmetry) {
      throw ShapeError("distance matrix is not symmetric at (" +
                       std::to_string(v.i) + ", " + std::to_string(v.j) + ")");
    }
  }
  return space;
}

json to_json(const FiniteMetricSpace& space) {
  json dist = json::array();
  for (std::size_t i = 0; i < space.size(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < space.size(); ++k) row.push_back(number(space(i, k)));
    dist.push_back(std::move(row));
  }
  return {{"labels", space.labels()}, {"dist", std::move(dist)}};
}

CantorSpace cantor_from_json(const json& j) {
  std::vector<std::uint32_t> branching;
  if (j.contains("branching")) {
    branching = field<std::vector<std::uint32_t>>(j, "branching");
  }
  const auto tail = j.contains("branching_tail")
                        ? field<std::uint32_t>(j, "branching_tail")
                        : (branching.empty() ? 0 : branching.back());
  auto radii = field<std::vector<double>>(j, "radii");
  const auto ratio = field<double>(j, "radius_tail_ratio");
  return CantorSpace(BranchingProfile(std::move(branching), tail),
                     RadiusSchedule(std::move(radii), ratio));
}

json to_json(const CantorSpace& space) {
  json radii = json::array();
  for (double r : space.schedule().explicit_radii()) radii.push_back(number(r));
  return {{"branching", space.profile().explicit_levels()},
          {"branching_tail", space.profile().tail()},
          {"radii", std::move(radii)},
          {"radius_tail_ratio", number(space.schedule().tail_ratio())}};
}

Gauge gauge_from_json(const json& j, const CantorSpace* context) {
  const auto form = field<std::string>(j, "form");
  if (form == "power") return Gauge::power(field<double>(j, "alpha"));
  if (form == "table") return Gauge::table(knots_from_json(j));
  if (form == "schedule" || form == "similarity") {
    if (context == nullptr) {
      throw ShapeError("gauge form \"" + form + "\" needs a Cantor space");
    }
    if (form == "similarity") {
      const auto alpha = similarity_exponent(*context);
      if (!alpha) {
        throw ShapeError(
            "similarity gauge needs constant branching and geometric radii");
      }
      return Gauge::power(*alpha);
    }
    auto values = field<std::vector<double>>(j, "values");
    std::vector<double> radii;
    for (std::size_t l = 0; l < values.size(); ++l) {
      radii.push_back(context->radius(l));
    }
    return Gauge::schedule(std::move(radii), std::move(values));
  }
  throw ShapeError("unknown gauge form \"" + form + "\"");
}

json to_json(const Gauge& h) {
  json out;
  switch (h.form()) {
    case Gauge::Form::kPower:
      out = {{"form", "power"}, {"alpha", number(h.alpha())}};
      break;
    case Gauge::Form::kTable:
      out = {{"form", "table"}, {"knots", knots_to_json(h.knots())}};
      break;
    case Gauge::Form::kSchedule: {
      json values = json::array();
      for (double v : h.schedule_values()) values.push_back(number(v));
      out = {{"form", "schedule"}, {"values", std::move(values)}};
      break;
    }
  }
  if (h.divisor() != 1.0) out["divisor"] = number(h.divisor());
  return out;
}

TransformSpec transform_from_json(const json& j) {
  const auto form = field<std::string>(j, "form");
  if (form == "power") return TransformSpec::power(field<double>(j, "a"));
  if (form == "table") return TransformSpec::table(knots_from_json(j));
  throw ShapeError("unknown transform form \"" + form + "\"");
}

json to_json(const ContentEstimate& e, const FiniteMetricSpace* space) {
  json witness = json::array();
  for (const CoverMember& m : e.witness.members) {
    witness.push_back(witness_member(m, space));
  }
  json out = {{"value", number(e.value)},
              {"exact", e.exact},
              {"witness", std::move(witness)},
              {"mode", mode_name(e.mode)},
              {"eps", e.eps ? number(*e.eps) : json(nullptr)}};
  if (e.witness.diameter_floor > 0.0) {
    out["diameter_floor"] = number(e.witness.diameter_floor);
  }
  if (e.mode == EstimateMode::kMeasure) {
    json trace = json::array();
    for (double v : e.trace) trace.push_back(number(v));
    out["trace"] = std::move(trace);
    out["stabilized"] = e.stabilized;
  }
  return out;
}

json to_json(const ValidationReport& report) {
  json violations = json::array();
  for (const Violation& v : report.violations) {
    violations.push_back({{"axiom", axiom_name(v.axiom)},
                          {"i", v.i},
                          {"j", v.j},
                          {"k", v.k},
                          {"lhs", number(v.lhs)},
                          {"rhs", number(v.rhs)}});
  }
  return {{"valid", report.ok()}, {"violations", std::move(violations)}};
}

json to_json(const IntegrationResult& r) {
  return {{"value", number(r.value)},
          {"achieved_depth", r.achieved_depth},
          {"certified", r.certified},
          {"stabilized", r.stabilized}};
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ShapeError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ShapeError("cannot parse " + path + ": " + e.what());
  }
}

}  // namespace hcover::io
