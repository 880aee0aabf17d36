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
#include "hcover/lipschitz.hpp"
#include "oracles.hpp"

namespace hcover {
namespace {

FiniteMetricSpace line(const std::vector<double>& pos) {
  std::vector<std::vector<double>> d(pos.size(), std::vector<double>(pos.size()));
  for (std::size_t i = 0; i < pos.size(); ++i) {
    for (std::size_t j = 0; j < pos.size(); ++j) d[i][j] = std::abs(pos[i] - pos[j]);
  }
  return FiniteMetricSpace(std::move(d));
}

TEST_CASE("Lipschitz maps") {
  const FiniteMetricSpace src = line({0, 1, 2});
  const FiniteMetricSpace dst = line({0, 2, 4, 7});
  const LipschitzMap doubling(src, dst, {0, 1, 2}, 2.0);
  CHECK(lipschitz_constant(doubling) == 2.0);
  CHECK(doubling.image(PointSet::from_mask(3, 0b101)) == PointSet::from_mask(4, 0b0101));

  CHECK_THROWS_AS(LipschitzMap(src, dst, {0, 1, 2}, 1.5), DomainError);
  CHECK_THROWS_AS(LipschitzMap(src, dst, {0, 1}), ShapeError);
  CHECK_THROWS_AS(LipschitzMap(src, dst, {0, 1, 4}), ShapeError);

  const LipschitzMap constant(src, dst, {3, 3, 3});
  CHECK(lipschitz_constant(constant) == 0.0);
  const ImageContentReport r =
      check_image_content(constant, PointSet::full(3), Gauge::power(1.0));
  CHECK(r.c == 1.0);
  CHECK(r.holds());
}

TEST_CASE("image content bound with a floor") {
  const FiniteMetricSpace src = line({0, 1, 2, 3});
  const FiniteMetricSpace dst = line({0, 2, 4, 6});
  const LipschitzMap m(src, dst, {0, 1, 2, 3});
  FiniteSolverOptions opt;
  opt.diameter_floor = 1.0;
  const std::vector<double> eps{1.5, 0.9};
  const ImageContentReport r =
      check_image_content(m, PointSet::full(4), Gauge::power(1.0), eps, opt);
  CHECK(r.c == 2.0);
  REQUIRE(r.entries.size() == 3);
  CHECK_FALSE(r.entries[0].eps.has_value());
  CHECK(r.entries[0].source_value == 2.0);
  CHECK(r.entries[0].image_value == 2.0);  // isometric up to the factor 2
  CHECK(r.entries[2].image_value == 4.0);
  CHECK(r.holds());
}

TEST_CASE("real-valued Lipschitz functions") {
  const FiniteMetricSpace s = line({0, 1, 3});
  const std::vector<double> f{0.0, 1.0, 3.0};
  CHECK(check_real_lipschitz(s, f, 1.0));
  CHECK_FALSE(check_real_lipschitz(s, f, 0.9));
  const std::vector<double> short_values{0.0};
  CHECK_THROWS_AS(check_real_lipschitz(s, short_values, 1.0), ShapeError);
}

TEST_CASE("transforms") {
  const FiniteMetricSpace s = line({0, 1, 2});
  CHECK_THROWS_AS(transform_space(s, TransformSpec::power(0.5)), SolverRefusal);

  TransformSpec root = TransformSpec::power(0.5);
  REQUIRE(check_subadditive(root, distance_grid(s)));
  const TransformedSpace t = transform_space(s, root);
  CHECK_FALSE(t.base_is_ultrametric);
  CHECK(validate_metric(t.result).ok());
  CHECK(t.result(0, 2) == doctest::Approx(std::sqrt(2.0)));
  CHECK(same_ball_structure(s, t.result, root));

  // Squaring breaks the triangle inequality on a line, and the raw matrix
  // records where.
  const FiniteMetricSpace sq = transform_matrix(s, TransformSpec::power(2.0));
  const ValidationReport v = validate_metric(sq);
  REQUIRE_FALSE(v.ok());
  CHECK(v.violations.front().axiom == Axiom::kTriangle);
  CHECK(v.violations.front().lhs == 4.0);
  CHECK(v.violations.front().rhs == 2.0);

  // On an ultrametric any increasing map is allowed.
  const FiniteMetricSpace u = cantor_distance_space(testing::uniform_cantor(2, 0.5), 2);
  const TransformedSpace tu = transform_space(u, TransformSpec::power(2.0));
  CHECK(tu.base_is_ultrametric);
  CHECK(validate_ultrametric(tu.result).ok());

  const std::vector<PointSet> samples = testing::all_subsets(3);
  CHECK(transformed_diameter_check(s, root, samples).holds());

  const FiniteMetricSpace negative(std::vector<std::vector<double>>{{0.0, -1.0}, {-1.0, 0.0}});
  CHECK_THROWS_AS(transform_space(negative, TransformSpec::power(1.0)), SolverRefusal);
}

TEST_CASE("distance grid") {
  const FiniteMetricSpace s = line({0, 1, 2, 4});
  CHECK(distance_grid(s) == std::vector<double>{1.0, 2.0, 3.0, 4.0});
}

TEST_CASE("property: random maps respect the rescaled content bound") {
  std::mt19937_64 rng(123);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + rng() % 5;
    const std::size_t k = 1 + rng() % 5;
    const FiniteMetricSpace src = testing::random_metric(rng, n);
    const FiniteMetricSpace dst = testing::random_metric(rng, k);
    std::vector<std::size_t> a(n);
    for (auto& y : a) y = rng() % k;
    const LipschitzMap m(src, dst, a);
    FiniteSolverOptions opt;
    opt.diameter_floor = 0.05 * static_cast<double>(trial % 4);
    const std::vector<double> eps{1.0, 0.4};
    for (double alpha : {0.5, 1.0, 2.0}) {
      CHECK(check_image_content(m, testing::random_subset(rng, n), Gauge::power(alpha), eps,
                                opt)
                .holds());
    }
  }
}

}  // namespace
}  // namespace hcover
