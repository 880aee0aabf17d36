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

// Hausdorff content, the premeasures H_{h,eps} and Hausdorff measure as
// covering optimizations over finite spaces, Cantor cells and intervals.

#ifndef HCOVER_HAUSDORFF_HPP_
#define HCOVER_HAUSDORFF_HPP_

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "hcover/cantor.hpp"
#include "hcover/errors.hpp"
#include "hcover/gauge.hpp"
#include "hcover/metric.hpp"
#include "hcover/rational.hpp"

namespace hcover {

// Closed interval [lo, hi] of the real line.
template <class T>
struct BasicInterval {
  T lo;
  T hi;

  friend bool operator==(const BasicInterval&, const BasicInterval&) = default;
};

using Interval = BasicInterval<double>;
using RationalInterval = BasicInterval<Rational>;

struct CoverMember {
  std::variant<PointSet, Cell, Interval> set;
  double diameter = 0.0;
};

// Members are priced at h(max(diameter, diameter_floor)).
struct Covering {
  std::vector<CoverMember> members;
  double diameter_floor = 0.0;
};

enum class EstimateMode { kContent, kPremeasure, kMeasure };

const char* mode_name(EstimateMode mode);

struct ContentEstimate {
  double value = 0.0;
  Covering witness;
  // value is the optimum of the stated problem, not just an upper bound.
  bool exact = false;
  EstimateMode mode = EstimateMode::kContent;
  std::optional<double> eps;
  // Measure mode only: premeasure values along the eps schedule and whether
  // the last two agree within tolerance.
  std::vector<double> trace;
  bool stabilized = false;
};

inline constexpr std::size_t kDefaultExactLimit = 16;
// Upper bound for FiniteSolverOptions::size_limit overrides.
inline constexpr std::size_t kHardExactLimit = 24;
inline constexpr double kMeasureStabilizationTol = 1e-12;

struct FiniteSolverOptions {
  // Not part of the mathematical definition: prices every member at least at
  // h(diameter_floor) so that finite sets have nonzero content. Off by default.
  double diameter_floor = 0.0;
  std::size_t size_limit = kDefaultExactLimit;
};

double covering_cost(const Covering& cov, const Gauge& h);

// The covering {E}, priced h(diam E). Never marked exact.
ContentEstimate trivial_upper_bound(const FiniteMetricSpace& space,
                                    const PointSet& subset, const Gauge& h);
ContentEstimate trivial_upper_bound(const CantorSpace& space, const Cell& cell,
                                    const Gauge& h);
ContentEstimate trivial_upper_bound(const Interval& iv, const Gauge& h);

// Exact minimum over coverings of E by subsets of E (members of diameter
// < eps when eps is set) via set-partition dynamic programming, O(3^|E|).
// Refuses when |E| exceeds options.size_limit.
ContentEstimate content_exact_finite(const FiniteMetricSpace& space,
                                     const PointSet& subset, const Gauge& h,
                                     std::optional<double> eps = {},
                                     const FiniteSolverOptions& options = {});

// Optimal covering of the union of `target` by cells of depth <= max_depth,
// computed on the cell tree: cost(c) = min(h(r_l), sum of children costs).
// With eps set only cells of diameter < eps may be used. The result is marked
// exact when h is self-similar on the space, where deepening cannot help.
ContentEstimate content_cells(const CantorSpace& space,
                              std::span<const Cell> target, const Gauge& h,
                              std::size_t max_depth,
                              std::optional<double> eps = {});

ContentEstimate premeasure(const FiniteMetricSpace& space,
                           const PointSet& subset, const Gauge& h, double eps,
                           const FiniteSolverOptions& options = {});
ContentEstimate premeasure(const CantorSpace& space,
                           std::span<const Cell> target, const Gauge& h,
                           double eps, std::size_t max_depth);
// One-dimensional premeasure of [a, b]: b - a, witnessed by an even
// subdivision into pieces shorter than eps.
ContentEstimate premeasure(const Interval& iv, double eps);

// One-dimensional content of [a, b] (with eps: the premeasure), equal to
// b - a. Witness is {[a, b]} for content.
ContentEstimate content_interval(const Interval& iv,
                                 std::optional<double> eps = {});

// sup of the premeasures over a strictly decreasing eps schedule.
ContentEstimate hausdorff_measure(const FiniteMetricSpace& space,
                                  const PointSet& subset, const Gauge& h,
                                  std::span<const double> eps_schedule,
                                  const FiniteSolverOptions& options = {},
                                  double tol = kMeasureStabilizationTol);
ContentEstimate hausdorff_measure(const CantorSpace& space,
                                  std::span<const Cell> target, const Gauge& h,
                                  std::span<const double> eps_schedule,
                                  std::size_t max_depth,
                                  double tol = kMeasureStabilizationTol);
ContentEstimate hausdorff_measure(const Interval& iv,
                                  std::span<const double> eps_schedule,
                                  double tol = kMeasureStabilizationTol);

template <class T>
T interval_content(const BasicInterval<T>& iv) {
  if (iv.lo > iv.hi) throw DomainError("interval endpoints out of order");
  return iv.hi - iv.lo;
}

template <class T>
struct IntervalCoverCheck {
  bool covers;
  T total_length;
};

// Sweep over the pieces sorted by left endpoint.
template <class T>
IntervalCoverCheck<T> verify_interval_cover(
    const BasicInterval<T>& target, std::span<const BasicInterval<T>> pieces) {
  IntervalCoverCheck<T> out{false, T(0)};
  std::vector<BasicInterval<T>> sorted;
  for (const auto& p : pieces) {
    if (p.lo > p.hi) throw DomainError("interval endpoints out of order");
    out.total_length += p.hi - p.lo;
    sorted.push_back(p);
  }
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& x, const auto& y) { return x.lo < y.lo; });
  std::optional<T> reach;  // [target.lo, *reach] is covered
  for (const auto& p : sorted) {
    if (p.hi < target.lo) continue;
    if (!reach) {
      if (p.lo > target.lo) break;
      reach = p.hi;
    } else if (p.lo <= *reach) {
      if (p.hi > *reach) reach = p.hi;
    } else {
      break;
    }
    if (*reach >= target.hi) break;
  }
  out.covers = reach.has_value() && *reach >= target.hi;
  return out;
}

struct SuperadditivityEntry {
  double eps;
  double union_value;
  double first_value;
  double second_value;
  bool holds;
};

struct SuperadditivityReport {
  double separation;
  std::vector<SuperadditivityEntry> entries;
  bool holds() const {
    return std::all_of(entries.begin(), entries.end(),
                       [](const auto& e) { return e.holds; });
  }
};

// Checks H_{h,eps}(E1 u E2) >= H_{h,eps}(E1) + H_{h,eps}(E2) for each eps in
// eps_values, all of which must be <= eta. Throws DomainError when some pair
// of points across E1, E2 is closer than eta.
SuperadditivityReport check_separated_superadditivity(
    const FiniteMetricSpace& space, const PointSet& first,
    const PointSet& second, const Gauge& h, double eta,
    std::span<const double> eps_values,
    const FiniteSolverOptions& options = {});
SuperadditivityReport check_separated_superadditivity(
    const CantorSpace& space, std::span<const Cell> first,
    std::span<const Cell> second, const Gauge& h, double eta,
    std::span<const double> eps_values, std::size_t max_depth);

}  // namespace hcover

#endif  // HCOVER_HAUSDORFF_HPP_
