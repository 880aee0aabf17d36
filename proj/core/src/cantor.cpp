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

#include "hcover/cantor.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hcover/errors.hpp"

namespace hcover {

BranchingProfile::BranchingProfile(std::vector<std::uint32_t> explicit_levels,
                                   std::uint32_t tail)
    : levels_(std::move(explicit_levels)), tail_(tail) {
  if (tail_ < 2) throw ShapeError("branching tail must be >= 2");
  for (std::uint32_t n : levels_) {
    if (n < 2) throw ShapeError("every branching number must be >= 2");
  }
}

std::uint32_t BranchingProfile::at(std::size_t level) const {
  if (level == 0) throw DomainError("branching levels start at 1");
  return level <= levels_.size() ? levels_[level - 1] : tail_;
}

std::optional<std::uint32_t> BranchingProfile::constant_value() const {
  for (std::uint32_t n : levels_) {
    if (n != tail_) return std::nullopt;
  }
  return tail_;
}

RadiusSchedule::RadiusSchedule(std::vector<double> radii, double tail_ratio)
    : radii_(std::move(radii)), tail_ratio_(tail_ratio) {
  if (radii_.empty()) throw ShapeError("radius schedule needs r_0");
  if (!(tail_ratio_ > 0.0 && tail_ratio_ < 1.0)) {
    throw ShapeError("radius tail ratio must lie in (0, 1)");
  }
  for (std::size_t l = 0; l < radii_.size(); ++l) {
    if (!(radii_[l] > 0.0) || !std::isfinite(radii_[l])) {
      throw ShapeError("radii must be positive and finite");
    }
    if (l > 0 && !(radii_[l] < radii_[l - 1])) {
      throw ShapeError("radii must be strictly decreasing");
    }
  }
}

RadiusSchedule RadiusSchedule::geometric(double r0, double ratio) {
  return RadiusSchedule({r0}, ratio);
}

double RadiusSchedule::at(std::size_t level) const {
  if (level < radii_.size()) return radii_[level];
  const auto extra = static_cast<double>(level - (radii_.size() - 1));
  return radii_.back() * std::pow(tail_ratio_, extra);
}

std::string to_string(const Cell& c) {
  if (c.prefix.empty()) return "root";
  std::string out;
  for (std::size_t j = 0; j < c.prefix.size(); ++j) {
    if (j > 0) out += '.';
    out += std::to_string(c.prefix[j]);
  }
  return out;
}

CantorSpace::CantorSpace(BranchingProfile profile, RadiusSchedule schedule)
    : profile_(std::move(profile)), schedule_(std::move(schedule)) {}

void CantorSpace::check(std::span<const Digit> digits) const {
  for (std::size_t j = 0; j < digits.size(); ++j) {
    if (digits[j] >= branching(j + 1)) {
      throw ShapeError("digit " + std::to_string(digits[j]) + " at level " +
                       std::to_string(j + 1) + " exceeds branching " +
                       std::to_string(branching(j + 1)));
    }
  }
}

Point CantorSpace::point(std::vector<Digit> digits) const {
  check(digits);
  return Point{std::move(digits)};
}

Cell CantorSpace::cell(std::vector<Digit> prefix) const {
  check(prefix);
  return Cell{std::move(prefix)};
}

BigInt CantorSpace::cell_count(std::size_t from, std::size_t to) const {
  BigInt count = 1;
  for (std::size_t i = from + 1; i <= to; ++i) count *= branching(i);
  return count;
}

Cell cell_of(const Point& x, std::size_t depth) {
  if (depth > x.depth()) {
    throw DomainError("cell depth " + std::to_string(depth) +
                      " exceeds the point's " + std::to_string(x.depth()) +
                      " digits");
  }
  return Cell{{x.digits.begin(), x.digits.begin() + static_cast<long>(depth)}};
}

double distance(const CantorSpace& space, const Point& x, const Point& y) {
  const std::size_t common = std::min(x.depth(), y.depth());
  for (std::size_t l = 0; l < common; ++l) {
    if (x.digits[l] != y.digits[l]) return space.radius(l);
  }
  return 0.0;
}

CellRelation cell_relation(const Cell& a, const Cell& b) {
  const std::size_t common = std::min(a.depth(), b.depth());
  if (!std::equal(a.prefix.begin(), a.prefix.begin() + static_cast<long>(common),
                  b.prefix.begin())) {
    return CellRelation::kDisjoint;
  }
  if (a.depth() == b.depth()) return CellRelation::kEqual;
  return a.depth() > b.depth() ? CellRelation::kFirstInSecond
                               : CellRelation::kSecondInFirst;
}

std::vector<Cell> children(const CantorSpace& space, const Cell& c,
                           std::size_t depth, std::size_t limit) {
  space.check(c.prefix);
  if (depth < c.depth()) {
    throw DomainError("children depth is shallower than the cell");
  }
  const BigInt count = space.cell_count(c.depth(), depth);
  if (count > limit) {
    throw SolverRefusal("refusing to enumerate " + count.str() +
                        " cells (limit " + std::to_string(limit) + ")");
  }
  std::vector<Cell> out;
  out.reserve(count.convert_to<std::size_t>());
  // Odometer over the digits below c, least significant digit last.
  std::vector<Digit> digits = c.prefix;
  digits.resize(depth, 0);
  while (true) {
    out.push_back(Cell{digits});
    std::size_t j = depth;
    while (true) {
      if (j == c.depth()) return out;
      --j;
      if (++digits[j] < space.branching(j + 1)) break;
      digits[j] = 0;
    }
  }
}

double cell_diameter(const CantorSpace& space, const Cell& c) {
  return space.radius(c.depth());
}

Rational cell_measure(const CantorSpace& space, const Cell& c) {
  return Rational(BigInt(1), space.cell_count(0, c.depth()));
}

bool is_self_similar_gauge(const CantorSpace& space, const Gauge& h,
                           std::size_t max_depth, double tol) {
  if (max_depth < 1) throw DomainError("self-similarity check needs depth >= 1");
  for (std::size_t l = 0; l < max_depth; ++l) {
    const double parent = h(space.radius(l));
    const double split = space.branching(l + 1) * h(space.radius(l + 1));
    if (!(std::abs(parent - split) <= tol * parent)) return false;
  }
  return true;
}

std::optional<double> similarity_exponent(const CantorSpace& space) {
  const auto n = space.profile().constant_value();
  if (!n) return std::nullopt;
  const RadiusSchedule& s = space.schedule();
  const auto& radii = s.explicit_radii();
  const double ratio = s.tail_ratio();
  for (std::size_t l = 1; l < radii.size(); ++l) {
    const double expected = radii[0] * std::pow(ratio, static_cast<double>(l));
    if (std::abs(radii[l] - expected) > 1e-12 * expected) return std::nullopt;
  }
  return solve_similarity_dimension(*n, ratio);
}

double exact_cell_content(const CantorSpace& space, const Cell& c,
                          const Gauge& h,
                          std::optional<std::size_t> working_depth) {
  space.check(c.prefix);
  const std::size_t depth = working_depth.value_or(c.depth() + 8);
  if (depth <= c.depth()) {
    throw DomainError("working depth must exceed the cell depth");
  }
  if (!is_self_similar_gauge(space, h, depth)) {
    throw SolverRefusal(
        "gauge is not self-similar on this space through depth " +
        std::to_string(depth) +
        "; exact cell content is unavailable, use content_cells for a bound");
  }
  return h(cell_diameter(space, c));
}

FiniteMetricSpace cantor_distance_space(const CantorSpace& space,
                                        std::size_t depth) {
  const std::vector<Cell> cells = children(space, Cell::root(), depth, 4096);
  std::vector<std::string> labels;
  std::vector<std::vector<double>> dist(cells.size(),
                                        std::vector<double>(cells.size(), 0.0));
  for (std::size_t i = 0; i < cells.size(); ++i) {
    labels.push_back(to_string(cells[i]));
    for (std::size_t j = 0; j < cells.size(); ++j) {
      dist[i][j] = distance(space, Point{cells[i].prefix}, Point{cells[j].prefix});
    }
  }
  return FiniteMetricSpace(std::move(labels), std::move(dist));
}

}  // namespace hcover
