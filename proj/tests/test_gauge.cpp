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
#include <vector>

#include "doctest.h"
#include "hcover/errors.hpp"
#include "hcover/gauge.hpp"
#include "oracles.hpp"

namespace hcover {
namespace {

std::vector<double> grid(double lo, double hi, int steps) {
  std::vector<double> g;
  for (int i = 0; i <= steps; ++i) g.push_back(lo + (hi - lo) * i / steps);
  return g;
}

TEST_CASE("eval_gauge") {
  CHECK(eval_gauge(Gauge::power(1.0), 0.5) == 0.5);
  CHECK(eval_gauge(Gauge::power(0.37), 0.0) == 0.0);
  CHECK(eval_gauge(Gauge::power(2.0), kInfinity) == kInfinity);
  CHECK_THROWS_AS(eval_gauge(Gauge::power(1.0), -1e-3), DomainError);
  CHECK_THROWS_AS(Gauge::power(0.0), DomainError);

  const Gauge table = Gauge::table({{1.0, 2.0}, {3.0, 3.0}});
  CHECK(eval_gauge(table, 0.0) == 0.0);  // anchored at (0, 0)
  CHECK(eval_gauge(table, 0.5) == 1.0);
  CHECK(eval_gauge(table, 2.0) == 2.5);
  CHECK(eval_gauge(table, 10.0) == 3.0);
  CHECK(eval_gauge(table, kInfinity) == 3.0);  // bounded: sup of the table
  CHECK_THROWS_AS(Gauge::table({{1.0, 1.0}, {1.0, 2.0}}), ShapeError);
}

TEST_CASE("check_gauge") {
  CHECK(check_gauge(Gauge::power(0.5), grid(0.0, 1.0, 10)).ok());

  const Gauge bumpy = Gauge::table({{0.0, 0.0}, {1.0, 2.0}, {2.0, 1.0}});
  const std::vector<double> g{0.0, 1.0, 2.0};
  const GaugeReport report = check_gauge(bumpy, g);
  REQUIRE(report.violations.size() == 1);
  CHECK(report.violations[0].kind == GaugeViolation::Kind::kDecreasing);
  CHECK(report.violations[0].t == 2.0);

  const Gauge lifted = Gauge::table({{0.0, 1.0}, {1.0, 2.0}});
  CHECK(check_gauge(lifted, g).violations.front().kind ==
        GaugeViolation::Kind::kNonzeroAtZero);

  // Schedule h_l = 2^-l on r_l = 2^-l, scanned on a fine grid.
  std::vector<double> radii;
  std::vector<double> values;
  for (int l = 0; l <= 8; ++l) {
    radii.push_back(std::ldexp(1.0, -l));
    values.push_back(std::ldexp(1.0, -l));
  }
  const Gauge sched = Gauge::schedule(radii, values);
  CHECK(check_gauge(sched, grid(0.0, 2.0, 400)).ok());
  CHECK(eval_gauge(sched, 0.25) == 0.25);
}

TEST_CASE("check_subadditive") {
  const std::vector<double> g = grid(0.05, 3.0, 40);
  TransformSpec id = TransformSpec::power(1.0);
  CHECK(check_subadditive(id, g));
  CHECK(id.subadditivity_checked);

  TransformSpec root = TransformSpec::power(0.5);
  CHECK(check_subadditive(root, g));

  TransformSpec square = TransformSpec::power(2.0);
  CHECK_FALSE(check_subadditive(square, std::vector<double>{1.0}));
  CHECK_FALSE(square.subadditivity_checked);
}

TEST_CASE("property: powers are subadditive exactly for a <= 1 on sampled grids") {
  const std::vector<double> g = grid(0.01, 5.0, 60);
  for (double a = 0.05; a <= 1.0 + 1e-12; a += 0.05) {
    TransformSpec phi = TransformSpec::power(std::min(a, 1.0));
    CHECK(check_subadditive(phi, g));
  }
  for (double a : {1.01, 1.1, 1.5, 2.0, 3.0}) {
    TransformSpec phi = TransformSpec::power(a);
    CHECK_FALSE(check_subadditive(phi, g));
  }
}

TEST_CASE("solve_similarity_dimension") {
  CHECK(solve_similarity_dimension(2, 0.5) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(solve_similarity_dimension(3, 1.0 / 3.0) ==
        doctest::Approx(1.0).epsilon(1e-15));
  const double alpha = solve_similarity_dimension(2, 1.0 / 3.0);
  CHECK(std::abs(alpha - testing::bisection_dimension(2, 1.0 / 3.0)) < 1e-12);
  CHECK(std::abs(alpha - 0.6309297536) < 1e-9);
  CHECK_THROWS_AS(solve_similarity_dimension(1, 0.5), DomainError);
  CHECK_THROWS_AS(solve_similarity_dimension(2, 1.0), DomainError);
  CHECK_THROWS_AS(solve_similarity_dimension(2, 0.0), DomainError);
}

TEST_CASE("property: similarity dimension residual below 1e-12") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.001, 0.999);
  for (int trial = 0; trial < 500; ++trial) {
    const long n = 2 + static_cast<long>(rng() % 200);
    const double r = u(rng);
    const double alpha = solve_similarity_dimension(n, r);
    CHECK(std::abs(n * std::pow(r, alpha) - 1.0) < 1e-12);
  }
}

TEST_CASE("rescaled_gauge") {
  const Gauge h = Gauge::power(0.7);
  const Gauge same = rescaled_gauge(h, 1.0);
  for (double t : grid(0.0, 4.0, 20)) CHECK(same(t) == h(t));

  CHECK(eval_gauge(rescaled_gauge(Gauge::power(1.0), 2.0), 4.0) == 2.0);

  const double alpha = 0.6309297536;
  const Gauge scaled = rescaled_gauge(Gauge::power(alpha), 2.0);
  for (double t : grid(0.0, 4.0, 20)) {
    CHECK(scaled(t) == doctest::Approx(std::pow(2.0, -alpha) * std::pow(t, alpha))
                           .epsilon(1e-14));
  }
  CHECK_THROWS_AS(rescaled_gauge(h, 0.0), DomainError);
  CHECK_THROWS_AS(rescaled_gauge(h, -2.0), DomainError);
}

TEST_CASE("property: gauges are monotone and rescalings compose") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(0.05, 3.0);
  const std::vector<double> g = grid(0.0, 6.0, 120);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Knot> knots;
    double t = 0.0;
    double v = 0.0;
    for (int k = 0; k < 5; ++k) {
      t += u(rng);
      v += u(rng);
      knots.push_back({t, v});
    }
    const std::vector<Gauge> gauges{Gauge::power(u(rng)), Gauge::table(knots),
                                    Gauge::schedule({4.0, 2.0, 1.0}, {3.0, 2.0, 0.5})};
    const double c1 = u(rng);
    const double c2 = u(rng);
    for (const Gauge& h : gauges) {
      for (std::size_t i = 1; i < g.size(); ++i) CHECK(h(g[i - 1]) <= h(g[i]));
      const Gauge twice = rescaled_gauge(rescaled_gauge(h, c1), c2);
      const Gauge once = rescaled_gauge(h, c1 * c2);
      for (double x : g) CHECK(twice(x) == doctest::Approx(once(x)).epsilon(1e-12));
    }
  }
}

}  // namespace
}  // namespace hcover
