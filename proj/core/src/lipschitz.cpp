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

#include "hcover/lipschitz.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hcover/errors.hpp"

namespace hcover {

namespace {

bool close_or_below(double lhs, double rhs, double tol) {
  return lhs <= rhs + tol * std::max(std::abs(lhs), std::abs(rhs));
}

void require_transform_preconditions(const FiniteMetricSpace& space,
                                     const TransformSpec& phi, double tol,
                                     bool& is_ultrametric) {
  const ValidationReport metric = validate_metric(space, tol);
  if (!metric.ok()) {
    throw SolverRefusal("base is not a metric (" +
                        std::string(axiom_name(metric.violations.front().axiom)) +
                        " violated)");
  }
  is_ultrametric = validate_ultrametric(space, tol).ok();
  if (!is_ultrametric && !phi.subadditivity_checked) {
    throw SolverRefusal(
        "base is not an ultrametric and phi has not passed a subadditivity "
        "check; run check_subadditive first");
  }
}

}  // namespace

LipschitzMap::LipschitzMap(FiniteMetricSpace source, FiniteMetricSpace target,
                           std::vector<std::size_t> assignment,
                           std::optional<double> declared_c)
    : source_(std::move(source)),
      target_(std::move(target)),
      assignment_(std::move(assignment)),
      declared_c_(declared_c) {
  if (assignment_.size() != source_.size()) {
    throw ShapeError("map assignment must cover every source point");
  }
  for (std::size_t y : assignment_) {
    if (y >= target_.size()) throw ShapeError("map sends a point off the target");
  }
  if (declared_c_) {
    if (!(*declared_c_ >= 0.0)) {
      throw DomainError("Lipschitz constant must be nonnegative");
    }
    for (std::size_t x = 0; x < source_.size(); ++x) {
      for (std::size_t y = x + 1; y < source_.size(); ++y) {
        if (!close_or_below(target_(assignment_[x], assignment_[y]),
                            *declared_c_ * source_(x, y), kDefaultMetricTol)) {
          throw DomainError("map is not " + std::to_string(*declared_c_) +
                            "-Lipschitz at points " + source_.label(x) + ", " +
                            source_.label(y));
        }
      }
    }
  }
}

PointSet LipschitzMap::image(const PointSet& subset) const {
  if (subset.universe() != source_.size()) {
    throw ShapeError("subset does not belong to the source space");
  }
  PointSet out(target_.size());
  for (std::size_t x : subset.members()) out.insert(assignment_[x]);
  return out;
}

double lipschitz_constant(const LipschitzMap& m) {
  const FiniteMetricSpace& src = m.source();
  double best = 0.0;
  for (std::size_t x = 0; x < src.size(); ++x) {
    for (std::size_t y = x + 1; y < src.size(); ++y) {
      if (src(x, y) > 0.0) {
        best = std::max(best, m.target()(m(x), m(y)) / src(x, y));
      }
    }
  }
  return best;
}

bool ImageContentReport::holds() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const auto& e) { return e.holds; });
}

ImageContentReport check_image_content(const LipschitzMap& m,
                                       const PointSet& subset, const Gauge& h,
                                       std::span<const double> eps_values,
                                       const FiniteSolverOptions& options) {
  const double measured = lipschitz_constant(m);
  const double c = measured > 0.0 ? measured : 1.0;
  const Gauge rescaled = rescaled_gauge(h, c);
  const PointSet image = m.image(subset);
  FiniteSolverOptions image_options = options;
  image_options.diameter_floor = c * options.diameter_floor;

  ImageContentReport report{c, {}};
  const auto compare = [&](std::optional<double> eps) {
    const std::optional<double> image_eps =
        eps ? std::optional<double>(c * *eps) : std::nullopt;
    const double lhs =
        content_exact_finite(m.target(), image, rescaled, image_eps, image_options)
            .value;
    const double rhs =
        content_exact_finite(m.source(), subset, h, eps, options).value;
    report.entries.push_back({eps, lhs, rhs, close_or_below(lhs, rhs, 1e-12)});
  };
  compare(std::nullopt);
  for (double eps : eps_values) compare(eps);
  return report;
}

bool check_real_lipschitz(const FiniteMetricSpace& space,
                          std::span<const double> values, double c,
                          double tol) {
  if (values.size() != space.size()) {
    throw ShapeError("need one value per point");
  }
  for (std::size_t x = 0; x < space.size(); ++x) {
    for (std::size_t y = 0; y < space.size(); ++y) {
      if (!close_or_below(values[x], values[y] + c * space(x, y), tol)) {
        return false;
      }
    }
  }
  return true;
}

FiniteMetricSpace transform_matrix(const FiniteMetricSpace& space,
                                   const TransformSpec& phi) {
  std::vector<std::vector<double>> out = space.matrix();
  for (auto& row : out) {
    for (double& v : row) v = phi(v);
  }
  return FiniteMetricSpace(space.labels(), std::move(out));
}

TransformedSpace transform_space(const FiniteMetricSpace& space,
                                 const TransformSpec& phi, double tol) {
  bool ultra = false;
  require_transform_preconditions(space, phi, tol, ultra);
  return {space, phi, transform_matrix(space, phi), ultra};
}

std::vector<double> distance_grid(const FiniteMetricSpace& space) {
  std::vector<double> grid;
  for (std::size_t i = 0; i < space.size(); ++i) {
    for (std::size_t j = i + 1; j < space.size(); ++j) {
      if (space(i, j) > 0.0) grid.push_back(space(i, j));
    }
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

bool DiameterCheckReport::holds() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const auto& e) { return e.holds; });
}

DiameterCheckReport transformed_diameter_check(
    const FiniteMetricSpace& space, const TransformSpec& phi,
    std::span<const PointSet> samples, double tol) {
  bool ultra = false;
  require_transform_preconditions(space, phi, tol, ultra);
  const FiniteMetricSpace transformed = transform_matrix(space, phi);
  DiameterCheckReport report;
  for (const PointSet& a : samples) {
    const double lhs = diameter(transformed, a);
    const double rhs = phi(diameter(space, a));
    report.entries.push_back({a, lhs, rhs,
                              close_or_below(lhs, rhs, tol) &&
                                  close_or_below(rhs, lhs, tol)});
  }
  return report;
}

bool same_ball_structure(const FiniteMetricSpace& base,
                         const FiniteMetricSpace& transformed,
                         const TransformSpec& phi) {
  if (base.size() != transformed.size()) return false;
  std::vector<double> radii = distance_grid(base);
  const std::size_t distinct = radii.size();
  for (std::size_t i = 0; i + 1 < distinct; ++i) {
    radii.push_back(0.5 * (radii[i] + radii[i + 1]));
  }
  if (distinct > 0) radii.push_back(2.0 * radii[distinct - 1]);
  for (std::size_t p = 0; p < base.size(); ++p) {
    for (double r : radii) {
      for (BallKind kind : {BallKind::kOpen, BallKind::kClosed}) {
        if (ball(base, {p, r, kind}) != ball(transformed, {p, phi(r), kind})) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace hcover
