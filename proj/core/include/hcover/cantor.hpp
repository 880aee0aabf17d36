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

// The sequence space X = X_1 x X_2 x ... with X_j = {0, ..., n_j - 1}, its
// cells (cylinders fixing a finite prefix), the ultrametric induced by a
// decreasing radius schedule, and the uniform cell measure.

#ifndef HCOVER_CANTOR_HPP_
#define HCOVER_CANTOR_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hcover/gauge.hpp"
#include "hcover/metric.hpp"
#include "hcover/rational.hpp"

namespace hcover {

using Digit = std::uint32_t;

inline constexpr std::size_t kMaxEnumeratedCells = std::size_t{1} << 22;
inline constexpr double kSelfSimilarTol = 1e-9;

// Branching numbers n_1, n_2, ..., given explicitly for the first levels and
// constant afterwards.
class BranchingProfile {
 public:
  BranchingProfile(std::vector<std::uint32_t> explicit_levels,
                   std::uint32_t tail);
  static BranchingProfile constant(std::uint32_t n) { return {{}, n}; }

  // n_level, level >= 1: the size of X_level, which is also the number of
  // children of a cell of depth level - 1.
  std::uint32_t at(std::size_t level) const;
  const std::vector<std::uint32_t>& explicit_levels() const { return levels_; }
  std::uint32_t tail() const { return tail_; }
  // Some n with n_j == n for every j, if the profile is constant.
  std::optional<std::uint32_t> constant_value() const;

 private:
  std::vector<std::uint32_t> levels_;
  std::uint32_t tail_;
};

// r_0 > r_1 > ... > 0. Past the explicit list the radii shrink geometrically
// by tail_ratio, so r_l -> 0.
class RadiusSchedule {
 public:
  RadiusSchedule(std::vector<double> radii, double tail_ratio);
  // r_l = r0 * ratio^l.
  static RadiusSchedule geometric(double r0, double ratio);

  double at(std::size_t level) const;
  const std::vector<double>& explicit_radii() const { return radii_; }
  double tail_ratio() const { return tail_ratio_; }

 private:
  std::vector<double> radii_;
  double tail_ratio_;
};

// A finite truncation of a sequence in X. Digits past depth() read as 0.
struct Point {
  std::vector<Digit> digits;

  std::size_t depth() const { return digits.size(); }
  Digit digit(std::size_t j) const { return j < digits.size() ? digits[j] : 0; }

  friend bool operator==(const Point&, const Point&) = default;
};

// N_l(x): all sequences with the given prefix. The empty prefix is X itself.
struct Cell {
  std::vector<Digit> prefix;

  static Cell root() { return {}; }
  std::size_t depth() const { return prefix.size(); }

  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

std::string to_string(const Cell& c);

class CantorSpace {
 public:
  CantorSpace(BranchingProfile profile, RadiusSchedule schedule);

  const BranchingProfile& profile() const { return profile_; }
  const RadiusSchedule& schedule() const { return schedule_; }
  std::uint32_t branching(std::size_t level) const { return profile_.at(level); }
  double radius(std::size_t level) const { return schedule_.at(level); }

  // Throw ShapeError if some digit is out of range for its level.
  void check(std::span<const Digit> digits) const;
  Point point(std::vector<Digit> digits) const;
  Cell cell(std::vector<Digit> prefix) const;

  // prod_{i=from+1}^{to} n_i: the number of depth-`to` cells inside a
  // depth-`from` cell.
  BigInt cell_count(std::size_t from, std::size_t to) const;

 private:
  BranchingProfile profile_;
  RadiusSchedule schedule_;
};

Cell cell_of(const Point& x, std::size_t depth);

// 0 when the points agree on their common depth; otherwise r_l, with l the
// length of their longest common prefix.
double distance(const CantorSpace& space, const Point& x, const Point& y);

enum class CellRelation { kEqual, kFirstInSecond, kSecondInFirst, kDisjoint };

CellRelation cell_relation(const Cell& a, const Cell& b);

// All depth-p cells inside c, lexicographically ordered. Refuses when the
// count exceeds `limit`.
std::vector<Cell> children(const CantorSpace& space, const Cell& c,
                           std::size_t depth,
                           std::size_t limit = kMaxEnumeratedCells);

double cell_diameter(const CantorSpace& space, const Cell& c);

// 1 / prod_{i=1}^{l} n_i.
Rational cell_measure(const CantorSpace& space, const Cell& c);

// |h(r_l) - n_{l+1} h(r_{l+1})| <= tol * h(r_l) for every l < max_depth.
bool is_self_similar_gauge(const CantorSpace& space, const Gauge& h,
                           std::size_t max_depth, double tol = kSelfSimilarTol);

// The exponent alpha for which t^alpha is self-similar, when branching is
// constant and radii are geometric (r_l = r_0 rho^l): n rho^alpha = 1.
std::optional<double> similarity_exponent(const CantorSpace& space);

// h(r_l) for a depth-l cell, which equals both its Hausdorff content and its
// Hausdorff measure when h is self-similar. Verifies self-similarity through
// working_depth (default: depth(c) + 8) and throws SolverRefusal otherwise.
double exact_cell_content(const CantorSpace& space, const Cell& c,
                          const Gauge& h,
                          std::optional<std::size_t> working_depth = {});

// The finite metric space of all depth-d cells, each represented by its
// zero-extended point. Labels are the digit strings.
FiniteMetricSpace cantor_distance_space(const CantorSpace& space,
                                        std::size_t depth);

}  // namespace hcover

#endif  // HCOVER_CANTOR_HPP_
