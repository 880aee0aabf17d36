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

#include "hcover/hausdorff.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <tuple>
#include <string>

namespace hcover {

namespace {

constexpr double kRelativeSlack = 1e-12;

bool at_least(double lhs, double rhs) {
  return lhs >= rhs - kRelativeSlack * std::max(1.0, std::abs(rhs));
}

void check_eps(std::optional<double> eps) {
  if (eps && !(*eps > 0.0)) throw DomainError("eps must be positive");
}

void check_schedule(std::span<const double> eps_schedule) {
  if (eps_schedule.empty()) throw DomainError("eps schedule is empty");
  for (std::size_t i = 0; i < eps_schedule.size(); ++i) {
    check_eps(eps_schedule[i]);
    if (i > 0 && !(eps_schedule[i] < eps_schedule[i - 1])) {
      throw DomainError("eps schedule must be strictly decreasing");
    }
  }
}

template <class PremeasureFn>
ContentEstimate sup_over_schedule(std::span<const double> eps_schedule,
                                  double tol, PremeasureFn&& premeasure_at) {
  check_schedule(eps_schedule);
  ContentEstimate best;
  bool exact = true;
  std::vector<double> trace;
  for (double eps : eps_schedule) {
    ContentEstimate e = premeasure_at(eps);
    trace.push_back(e.value);
    exact = exact && e.exact;
    if (trace.size() == 1 || e.value >= best.value) best = std::move(e);
  }
  best.mode = EstimateMode::kMeasure;
  best.exact = exact;
  best.stabilized =
      trace.size() >= 2 &&
      std::abs(trace.back() - trace[trace.size() - 2]) <=
          tol * std::max(1.0, std::abs(trace.back()));
  best.trace = std::move(trace);
  return best;
}

// Cell-tree optimizer for content_cells.
class CellTreeSolver {
 public:
  CellTreeSolver(const CantorSpace& space, const Gauge& h, std::size_t max_depth,
                 std::optional<double> eps)
      : space_(space), h_(h), max_depth_(max_depth), eps_(eps) {}

  // Optimal cost of covering the part of `targets` inside c; appends the
  // arg-min cells to witness.
  double solve(const Cell& c, std::span<const Cell> targets,
               std::vector<Cell>& witness) {
    bool full = false;
    std::vector<Cell> inside;
    for (const Cell& t : targets) {
      switch (cell_relation(c, t)) {
        case CellRelation::kEqual:
        case CellRelation::kFirstInSecond:
          full = true;
          break;
        case CellRelation::kSecondInFirst:
          inside.push_back(t);
          break;
        case CellRelation::kDisjoint:
          break;
      }
      if (full) break;
    }
    if (!full && inside.empty()) return 0.0;

    const double own = own_cost(c.depth());
    if (c.depth() == max_depth_) {
      if (own < std::numeric_limits<double>::infinity()) witness.push_back(c);
      return own;
    }
    if (full && own <= full_cost(c.depth() + 1) * branching(c.depth())) {
      witness.push_back(c);
      return own;
    }

    std::vector<Cell> below;
    double split = 0.0;
    Cell child = c;
    child.prefix.push_back(0);
    const std::uint32_t n = space_.branching(c.depth() + 1);
    for (std::uint32_t d = 0; d < n; ++d) {
      child.prefix.back() = d;
      split += full ? solve(child, std::span<const Cell>(&child, 1), below)
                    : solve(child, inside, below);
    }
    if (own <= split) {
      witness.push_back(c);
      return own;
    }
    if (below.size() + witness.size() > kMaxEnumeratedCells) {
      throw SolverRefusal("optimal cell covering has more than " +
                          std::to_string(kMaxEnumeratedCells) + " members");
    }
    witness.insert(witness.end(), below.begin(), below.end());
    return split;
  }

 private:
  double branching(std::size_t depth) const {
    return static_cast<double>(space_.branching(depth + 1));
  }

  double own_cost(std::size_t depth) const {
    const double r = space_.radius(depth);
    if (eps_ && !(r < *eps_)) return std::numeric_limits<double>::infinity();
    return h_(r);
  }

  // Cost of optimally covering one whole cell of the given depth.
  double full_cost(std::size_t depth) {
    if (depth >= full_memo_.size()) {
      full_memo_.resize(depth + 1, -1.0);
    }
    if (full_memo_[depth] >= 0.0) return full_memo_[depth];
    double v = own_cost(depth);
    if (depth < max_depth_) {
      v = std::min(v, branching(depth) * full_cost(depth + 1));
    }
    full_memo_[depth] = v;
    return v;
  }

  const CantorSpace& space_;
  const Gauge& h_;
  std::size_t max_depth_;
  std::optional<double> eps_;
  std::vector<double> full_memo_;
};

// Compares two blocks as increasing member sequences (bit i = i-th point).
bool block_lex_less(std::uint32_t a, std::uint32_t b) {
  if (a == b) return false;
  const int x = std::countr_zero(a ^ b);
  // The sequences agree below x; the one holding x wins unless the other
  // stops there.
  const std::uint32_t above = ~((std::uint32_t{2} << x) - 1);
  if ((a >> x) & 1U) return (b & above) != 0;
  return (a & above) == 0;
}

double min_cross_distance(const FiniteMetricSpace& space, const PointSet& a,
                          const PointSet& b) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i : a.members()) {
    for (std::size_t j : b.members()) best = std::min(best, space(i, j));
  }
  return best;
}

double min_cross_distance(const CantorSpace& space, std::span<const Cell> a,
                          std::span<const Cell> b) {
  double best = std::numeric_limits<double>::infinity();
  for (const Cell& x : a) {
    for (const Cell& y : b) {
      if (cell_relation(x, y) != CellRelation::kDisjoint) return 0.0;
      std::size_t l = 0;
      while (x.prefix[l] == y.prefix[l]) ++l;
      best = std::min(best, space.radius(l));
    }
  }
  return best;
}

template <class Solve>
SuperadditivityReport superadditivity(double separation, double eta,
                                      std::span<const double> eps_values,
                                      Solve&& solve) {
  if (!(eta > 0.0)) throw DomainError("eta must be positive");
  if (separation < eta) {
    throw DomainError("sets are not eta-separated: closest cross distance " +
                      std::to_string(separation) + " < " + std::to_string(eta));
  }
  SuperadditivityReport report{separation, {}};
  for (double eps : eps_values) {
    if (!(eps > 0.0 && eps <= eta)) {
      throw DomainError("separated superadditivity needs 0 < eps <= eta");
    }
    const auto [u, a, b] = solve(eps);
    report.entries.push_back({eps, u, a, b, at_least(u, a + b)});
  }
  return report;
}

}  // namespace

const char* mode_name(EstimateMode mode) {
  switch (mode) {
    case EstimateMode::kContent:
      return "content";
    case EstimateMode::kPremeasure:
      return "premeasure";
    case EstimateMode::kMeasure:
      return "measure";
  }
  return "unknown";
}

double covering_cost(const Covering& cov, const Gauge& h) {
  double total = 0.0;
  for (const CoverMember& m : cov.members) {
    total += h(std::max(m.diameter, cov.diameter_floor));
  }
  return total;
}

ContentEstimate trivial_upper_bound(const FiniteMetricSpace& space,
                                    const PointSet& subset, const Gauge& h) {
  ContentEstimate e;
  if (!subset.empty()) {
    e.witness.members.push_back({subset, diameter(space, subset)});
  }
  e.value = covering_cost(e.witness, h);
  return e;
}

ContentEstimate trivial_upper_bound(const CantorSpace& space, const Cell& cell,
                                    const Gauge& h) {
  space.check(cell.prefix);
  ContentEstimate e;
  e.witness.members.push_back({cell, cell_diameter(space, cell)});
  e.value = covering_cost(e.witness, h);
  return e;
}

ContentEstimate trivial_upper_bound(const Interval& iv, const Gauge& h) {
  ContentEstimate e;
  e.witness.members.push_back({iv, interval_content(iv)});
  e.value = covering_cost(e.witness, h);
  return e;
}

ContentEstimate content_exact_finite(const FiniteMetricSpace& space,
                                     const PointSet& subset, const Gauge& h,
                                     std::optional<double> eps,
                                     const FiniteSolverOptions& options) {
  check_eps(eps);
  if (subset.universe() != space.size()) {
    throw ShapeError("subset does not belong to this space");
  }
  if (!(options.diameter_floor >= 0.0)) {
    throw DomainError("diameter floor must be nonnegative");
  }
  const std::vector<std::size_t> pts = subset.members();
  const std::size_t m = pts.size();
  if (m > options.size_limit || m > kHardExactLimit) {
    throw SolverRefusal("exact content needs |E| <= " +
                        std::to_string(std::min(options.size_limit, kHardExactLimit)) +
                        ", got " + std::to_string(m) +
                        "; use trivial_upper_bound for a bound");
  }

  ContentEstimate result;
  result.exact = true;
  result.mode = eps ? EstimateMode::kPremeasure : EstimateMode::kContent;
  result.eps = eps;
  result.witness.diameter_floor = options.diameter_floor;
  if (m == 0) return result;

  const std::uint32_t full = (std::uint32_t{1} << m) - 1;
  const std::size_t states = std::size_t{1} << m;
  constexpr double kInf = std::numeric_limits<double>::infinity();

  // diam[S] from diam[S minus its lowest point].
  std::vector<double> diam(states, 0.0);
  std::vector<double> block_cost(states, kInf);
  for (std::uint32_t s = 1; s <= full; ++s) {
    const int low = std::countr_zero(s);
    const std::uint32_t rest = s & (s - 1);
    double d = diam[rest];
    for (std::uint32_t r = rest; r != 0; r &= r - 1) {
      d = std::max(d, space(pts[static_cast<std::size_t>(low)],
                            pts[static_cast<std::size_t>(std::countr_zero(r))]));
    }
    diam[s] = d;
    if (!eps || d < *eps) block_cost[s] = h(std::max(d, options.diameter_floor));
  }

  // best[S]: cheapest partition of S; the block holding S's lowest point is
  // choice[S]. Blocks of a partition have distinct minima, so the sorted
  // member list starts with choice[S]; breaking exact ties on it, then
  // recursively on the rest, gives the lexicographically smallest witness.
  std::vector<double> best(states, kInf);
  std::vector<std::uint32_t> choice(states, 0);
  best[0] = 0.0;
  for (std::uint32_t s = 1; s <= full; ++s) {
    const std::uint32_t low = s & (~s + 1);
    const std::uint32_t rest = s ^ low;
    std::uint32_t t = rest;
    while (true) {
      const std::uint32_t block = t | low;
      const double c = block_cost[block] + best[s ^ block];
      if (c < best[s] || (c == best[s] && c < kInf && block_lex_less(block, choice[s]))) {
        best[s] = c;
        choice[s] = block;
      }
      if (t == 0) break;
      t = (t - 1) & rest;
    }
  }

  if (best[full] == kInf) {
    result.value = kInf;
    return result;
  }
  std::vector<PointSet> blocks;
  for (std::uint32_t s = full; s != 0; s ^= choice[s]) {
    PointSet block(space.size());
    for (std::uint32_t b = choice[s]; b != 0; b &= b - 1) {
      block.insert(pts[static_cast<std::size_t>(std::countr_zero(b))]);
    }
    blocks.push_back(std::move(block));
  }
  std::sort(blocks.begin(), blocks.end());
  for (PointSet& b : blocks) {
    const double d = diameter(space, b);
    result.witness.members.push_back({std::move(b), d});
  }
  result.value = covering_cost(result.witness, h);
  return result;
}

ContentEstimate content_cells(const CantorSpace& space,
                              std::span<const Cell> target, const Gauge& h,
                              std::size_t max_depth, std::optional<double> eps) {
  check_eps(eps);
  for (const Cell& c : target) {
    space.check(c.prefix);
    if (c.depth() > max_depth) {
      throw SolverRefusal("depth bound " + std::to_string(max_depth) +
                          " is shallower than target cell " + to_string(c));
    }
  }
  if (eps && !(space.radius(max_depth) < *eps)) {
    throw SolverRefusal("depth bound " + std::to_string(max_depth) +
                        " too small: cells of depth <= bound all have "
                        "diameter >= eps");
  }
  ContentEstimate result;
  result.mode = eps ? EstimateMode::kPremeasure : EstimateMode::kContent;
  result.eps = eps;
  CellTreeSolver solver(space, h, max_depth, eps);
  std::vector<Cell> cells;
  solver.solve(Cell::root(), target, cells);
  std::sort(cells.begin(), cells.end());
  for (Cell& c : cells) {
    const double d = cell_diameter(space, c);
    result.witness.members.push_back({std::move(c), d});
  }
  result.value = covering_cost(result.witness, h);
  const std::size_t explicit_depth =
      std::max(space.profile().explicit_levels().size(),
               space.schedule().explicit_radii().size());
  result.exact =
      is_self_similar_gauge(space, h, std::max(max_depth, explicit_depth) + 1);
  return result;
}

ContentEstimate premeasure(const FiniteMetricSpace& space,
                           const PointSet& subset, const Gauge& h, double eps,
                           const FiniteSolverOptions& options) {
  return content_exact_finite(space, subset, h, eps, options);
}

ContentEstimate premeasure(const CantorSpace& space,
                           std::span<const Cell> target, const Gauge& h,
                           double eps, std::size_t max_depth) {
  return content_cells(space, target, h, max_depth, eps);
}

ContentEstimate premeasure(const Interval& iv, double eps) {
  check_eps(eps);
  const double length = interval_content(iv);
  const double ratio = length / eps;
  if (!(ratio < 1e6)) {
    throw SolverRefusal("interval subdivision would need over 1e6 pieces");
  }
  auto pieces = static_cast<std::size_t>(std::floor(ratio)) + 1;
  while (length / static_cast<double>(pieces) >= eps) ++pieces;
  ContentEstimate result;
  result.mode = EstimateMode::kPremeasure;
  result.eps = eps;
  result.exact = true;
  double left = iv.lo;
  for (std::size_t k = 1; k <= pieces; ++k) {
    const double right =
        k == pieces ? iv.hi
                    : iv.lo + length * (static_cast<double>(k) /
                                        static_cast<double>(pieces));
    result.witness.members.push_back({Interval{left, right}, right - left});
    left = right;
  }
  result.value = length;
  return result;
}

ContentEstimate content_interval(const Interval& iv, std::optional<double> eps) {
  if (eps) return premeasure(iv, *eps);
  ContentEstimate result;
  result.exact = true;
  result.value = interval_content(iv);
  result.witness.members.push_back({iv, result.value});
  return result;
}

ContentEstimate hausdorff_measure(const FiniteMetricSpace& space,
                                  const PointSet& subset, const Gauge& h,
                                  std::span<const double> eps_schedule,
                                  const FiniteSolverOptions& options,
                                  double tol) {
  return sup_over_schedule(eps_schedule, tol, [&](double eps) {
    return premeasure(space, subset, h, eps, options);
  });
}

ContentEstimate hausdorff_measure(const CantorSpace& space,
                                  std::span<const Cell> target, const Gauge& h,
                                  std::span<const double> eps_schedule,
                                  std::size_t max_depth, double tol) {
  return sup_over_schedule(eps_schedule, tol, [&](double eps) {
    return premeasure(space, target, h, eps, max_depth);
  });
}

ContentEstimate hausdorff_measure(const Interval& iv,
                                  std::span<const double> eps_schedule,
                                  double tol) {
  return sup_over_schedule(eps_schedule, tol,
                           [&](double eps) { return premeasure(iv, eps); });
}

SuperadditivityReport check_separated_superadditivity(
    const FiniteMetricSpace& space, const PointSet& first,
    const PointSet& second, const Gauge& h, double eta,
    std::span<const double> eps_values, const FiniteSolverOptions& options) {
  return superadditivity(
      min_cross_distance(space, first, second), eta, eps_values,
      [&](double eps) {
        return std::tuple{premeasure(space, first | second, h, eps, options).value,
                          premeasure(space, first, h, eps, options).value,
                          premeasure(space, second, h, eps, options).value};
      });
}

SuperadditivityReport check_separated_superadditivity(
    const CantorSpace& space, std::span<const Cell> first,
    std::span<const Cell> second, const Gauge& h, double eta,
    std::span<const double> eps_values, std::size_t max_depth) {
  std::vector<Cell> both(first.begin(), first.end());
  both.insert(both.end(), second.begin(), second.end());
  return superadditivity(
      min_cross_distance(space, first, second), eta, eps_values,
      [&](double eps) {
        return std::tuple{premeasure(space, both, h, eps, max_depth).value,
                          premeasure(space, first, h, eps, max_depth).value,
                          premeasure(space, second, h, eps, max_depth).value};
      });
}

}  // namespace hcover
