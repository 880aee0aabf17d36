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

// JSON schemas for spaces, gauges and results. Every double written by these
// functions is rounded to 12 significant digits; +inf is written as "inf".

#ifndef HCOVER_IO_HPP_
#define HCOVER_IO_HPP_

#include <string>

#include <nlohmann/json.hpp>

#include "hcover/cantor.hpp"
#include "hcover/gauge.hpp"
#include "hcover/hausdorff.hpp"
#include "hcover/integrate.hpp"
#include "hcover/lipschitz.hpp"
#include "hcover/metric.hpp"

namespace hcover::io {

using nlohmann::json;

inline constexpr int kOutputDigits = 12;

// x rounded to kOutputDigits significant digits, or "inf".
json number(double x);

// {"labels": [...], "dist": [[...]]}. Rejects non-square and asymmetric
// matrices with ShapeError.
FiniteMetricSpace space_from_json(const json& j, double tol = kDefaultMetricTol);
json to_json(const FiniteMetricSpace& space);

// {"branching": [...], "branching_tail": n, "radii": [...],
//  "radius_tail_ratio": rho}
CantorSpace cantor_from_json(const json& j);
json to_json(const CantorSpace& space);

// {"form": "power", "alpha": a} | {"form": "table", "knots": [[t, h], ...]} |
// {"form": "schedule", "values": [...]} | {"form": "similarity"}.
// The last two are resolved against `context`, which must then be non-null.
Gauge gauge_from_json(const json& j, const CantorSpace* context = nullptr);
json to_json(const Gauge& h);

// {"form": "power", "a": a} | {"form": "table", "knots": [[t, phi], ...]}
TransformSpec transform_from_json(const json& j);

// {"value", "exact", "witness", "mode", "eps"} plus "trace" and "stabilized"
// in measure mode. PointSet members are written as label lists (labels taken
// from `space` when given, indices otherwise), cells as digit arrays and
// intervals as [lo, hi].
json to_json(const ContentEstimate& e, const FiniteMetricSpace* space = nullptr);

json to_json(const ValidationReport& report);
json to_json(const IntegrationResult& r);

// Reads and parses a JSON file; ShapeError on I/O or parse failure.
json read_json_file(const std::string& path);

}  // namespace hcover::io

#endif  // HCOVER_IO_HPP_
