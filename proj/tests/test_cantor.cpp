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

#include <cmath>
#include <random>
#include <set>
#include <vector>

#include "doctest.h"
#include "hcover/cantor.hpp"
#include "hcover/errors.hpp"
#include "hcover/gauge.hpp"
#include "oracles.hpp"

namespace hcover {
namespace {

using testing::uniform_cantor;

CantorSpace mixed_space() {
  // n = 2, 3, then 2 forever; radii 1, 0.4, 0.1, then halving.
  return CantorSpace(BranchingProfile({2, 3}, 2), RadiusSchedule({1.0, 0.4, 0.1}, 0.5));
}

TEST_CASE("profiles and schedules") {
  const CantorSpace s = mixed_space();
  CHECK(s.branching(1) == 2);
  CHECK(s.branching(2) == 3);
  CHECK(s.branching(7) == 2);
  CHECK(s.radius(2) == 0.1);
  CHECK(s.radius(4) == doctest::Approx(0.025));
  CHECK(s.cell_count(0, 3) == 12);
  CHECK(s.cell_count(1, 2) == 3);
  CHECK_FALSE(s.profile().constant_value().has_value());
  CHECK(BranchingProfile::constant(3).constant_value() == 3u);

  CHECK_THROWS_AS(BranchingProfile({2, 1}, 2), ShapeError);
  CHECK_THROWS_AS(RadiusSchedule({1.0, 1.0}, 0.5), ShapeError);
  CHECK_THROWS_AS(RadiusSchedule({1.0}, 1.0), ShapeError);
  CHECK_THROWS_AS(s.point({0, 3}), ShapeError);
  CHECK_NOTHROW(s.point({1, 2, 1}));
}

TEST_CASE("distance and cells") {
  const CantorSpace s = uniform_cantor(2, 1.0 / 3.0);
  const Point x = s.point({0, 1, 1, 0});
  const Point y = s.point({0, 1, 0, 1});
  CHECK(distance(s, x, y) == doctest::Approx(1.0 / 9.0));
  CHECK(distance(s, x, x) == 0.0);
  CHECK(cell_of(x, 2) == s.cell({0, 1}));
  CHECK(cell_of(x, 0) == Cell::root());
  CHECK_THROWS_AS(cell_of(x, 5), DomainError);
  CHECK(to_string(s.cell({0, 1, 1})) == "0.1.1");
  CHECK(to_string(Cell::root()) == "root");

  CHECK(cell_relation(s.cell({0, 1}), s.cell({0})) == CellRelation::kFirstInSecond);
  CHECK(cell_relation(s.cell({0}), s.cell({0, 1})) == CellRelation::kSecondInFirst);
  CHECK(cell_relation(s.cell({0, 1}), s.cell({0, 1})) == CellRelation::kEqual);
  CHECK(cell_relation(s.cell({0, 1}), s.cell({1})) == CellRelation::kDisjoint);
  CHECK(cell_relation(Cell::root(), s.cell({1})) == CellRelation::kSecondInFirst);
}

TEST_CASE("children enumerate in lexicographic order") {
  const CantorSpace s = mixed_space();
  const auto kids = children(s, s.cell({1}), 3);
  REQUIRE(kids.size() == 6);
  CHECK(kids.front() == s.cell({1, 0, 0}));
  CHECK(kids[1] == s.cell({1, 0, 1}));
  CHECK(kids.back() == s.cell({1, 2, 1}));
  CHECK(std::is_sorted(kids.begin(), kids.end()));
  CHECK(children(s, s.cell({1}), 1).size() == 1);
  CHECK_THROWS_AS(children(s, s.cell({1, 0}), 1), DomainError);
  CHECK_THROWS_AS(children(uniform_cantor(2, 0.5), Cell::root(), 30), SolverRefusal);
}

TEST_CASE("cell measure is exact") {
  const CantorSpace s = mixed_space();
  CHECK(cell_measure(s, Cell::root()) == 1);
  CHECK(cell_measure(s, s.cell({1, 2})) == Rational(1, 6));
  CHECK(cell_measure(s, s.cell({1, 2, 0})) == Rational(1, 12));

  const CantorSpace ternary = uniform_cantor(3, 0.25);
  for (std::size_t d = 0; d <= 4; ++d) {
    Rational total = 0;
    for (const Cell& c : children(ternary, Cell::root(), d)) total += cell_measure(ternary, c);
    CHECK(total == 1);
  }
  // 3^40 overflows 64 bits; the rational stays exact.
  const Cell deep{std::vector<Digit>(40, 2)};
  CHECK(cell_measure(ternary, deep) * Rational(BigInt(pow(BigInt(3), 40))) == 1);
}

TEST_CASE("self-similar gauges") {
  const CantorSpace middle = uniform_cantor(2, 1.0 / 3.0);
  const double alpha = *similarity_exponent(middle);
  CHECK(alpha == doctest::Approx(std::log(2.0) / std::log(3.0)).epsilon(1e-14));
  CHECK(is_self_similar_gauge(middle, Gauge::power(alpha), 20));
  CHECK_FALSE(is_self_similar_gauge(middle, Gauge::power(1.0), 3));
  CHECK_FALSE(similarity_exponent(mixed_space()).has_value());

  // Non-uniform profile with a hand-built schedule gauge: h_l = 1 / (n_1...n_l).
  const CantorSpace s = mixed_space();
  std::vector<double> radii;
  std::vector<double> values;
  for (std::size_t l = 0; l <= 12; ++l) {
    radii.push_back(s.radius(l));
    values.push_back(cell_measure(s, Cell{std::vector<Digit>(l, 0)}).convert_to<double>());
  }
  const Gauge h = Gauge::schedule(radii, values);
  CHECK(is_self_similar_gauge(s, h, 12));
  CHECK(exact_cell_content(s, s.cell({1, 2}), h, 12) == doctest::Approx(1.0 / 6.0));
  CHECK_THROWS_AS(exact_cell_content(s, s.cell({1}), Gauge::power(1.0)), SolverRefusal);

  CHECK(exact_cell_content(middle, Cell::root(), Gauge::power(alpha)) ==
        doctest::Approx(1.0));
  CHECK(exact_cell_content(middle, middle.cell({0, 1}), Gauge::power(alpha)) ==
        doctest::Approx(0.25));
}

TEST_CASE("property: distance matrices are ultrametrics with nested balls") {
  std::mt19937_64 rng(3);
  for (std::uint32_t n : {2u, 3u, 4u}) {
    for (double ratio : {0.2, 1.0 / 3.0, 0.5, 0.9}) {
      const CantorSpace s = uniform_cantor(n, ratio);
      for (std::size_t depth = 1; depth <= 3; ++depth) {
        const FiniteMetricSpace m = cantor_distance_space(s, depth);
        CHECK(validate_ultrametric(m).ok());
        // Balls of radius r_l are exactly the depth-(l+1) cells.
        for (std::size_t c = 0; c < m.size(); ++c) {
          for (std::size_t l = 0; l < depth; ++l) {
            const PointSet b = ball(m, {c, s.radius(l), BallKind::kOpen});
            CHECK(b.count() == s.cell_count(l + 1, depth));
          }
        }
      }
      // Random deep points: d(x,z) <= max(d(x,y), d(y,z)).
      for (int trial = 0; trial < 50; ++trial) {
        std::vector<Point> p(3);
        for (auto& q : p) {
          for (int k = 0; k < 12; ++k) q.digits.push_back(static_cast<Digit>(rng() % n));
        }
        CHECK(distance(s, p[0], p[2]) <=
              std::max(distance(s, p[0], p[1]), distance(s, p[1], p[2])));
      }
    }
  }
}

}  // namespace
}  // namespace hcover
