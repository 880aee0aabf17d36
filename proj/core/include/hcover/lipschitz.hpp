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

// Lipschitz maps between finite spaces, the content bound for their images,
// and metric transforms d -> phi(d).

#ifndef HCOVER_LIPSCHITZ_HPP_
#define HCOVER_LIPSCHITZ_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "hcover/gauge.hpp"
#include "hcover/hausdorff.hpp"
#include "hcover/metric.hpp"

namespace hcover {

class LipschitzMap {
 public:
  // assignment[i] is the image in `target` of source point i. If declared_c is
  // set the map must satisfy it (within the metric tolerance).
  LipschitzMap(FiniteMetricSpace source, FiniteMetricSpace target,
               std::vector<std::size_t> assignment,
               std::optional<double> declared_c = {});

  const FiniteMetricSpace& source() const { return source_; }
  const FiniteMetricSpace& target() const { return target_; }
  std::size_t operator()(std::size_t x) const { return assignment_[x]; }
  const std::vector<std::size_t>& assignment() const { return assignment_; }
  std::optional<double> declared_c() const { return declared_c_; }

  PointSet image(const PointSet& subset) const;

 private:
  FiniteMetricSpace source_;
  FiniteMetricSpace target_;
  std::vector<std::size_t> assignment_;
  std::optional<double> declared_c_;
};

// max over x != y of rho(f(x), f(y)) / d(x, y); 0 for constant maps.
double lipschitz_constant(const LipschitzMap& m);

struct ImageContentEntry {
  std::optional<double> eps;  // source eps; the image side uses c * eps
  double image_value;
  double source_value;
  bool holds;
};

struct ImageContentReport {
  // The constant used for the rescaled gauge. A constant map is C-Lipschitz
  // for every C, and uses C = 1.
  double c;
  std::vector<ImageContentEntry> entries;
  bool holds() const;
};

// content of f(E) under h(t / C) <= content of E under h, and the same for
// the premeasures at (c * eps, eps) for each eps in eps_values. A source
// diameter floor is carried to the image as c * floor.
ImageContentReport check_image_content(const LipschitzMap& m,
                                       const PointSet& subset, const Gauge& h,
                                       std::span<const double> eps_values = {},
                                       const FiniteSolverOptions& options = {});

// values(x) <= values(y) + c d(x, y) for all ordered pairs.
bool check_real_lipschitz(const FiniteMetricSpace& space,
                          std::span<const double> values, double c,
                          double tol = kDefaultMetricTol);

struct TransformedSpace {
  FiniteMetricSpace base;
  TransformSpec phi;
  FiniteMetricSpace result;
  bool base_is_ultrametric;
};

// phi applied entrywise, with no checks on phi or the base.
FiniteMetricSpace transform_matrix(const FiniteMetricSpace& space,
                                   const TransformSpec& phi);

// Any monotone phi keeps an ultrametric an ultrametric; a general metric needs
// phi.subadditivity_checked, otherwise this throws SolverRefusal. The base must
// be a valid metric.
TransformedSpace transform_space(const FiniteMetricSpace& space,
                                 const TransformSpec& phi,
                                 double tol = kDefaultMetricTol);

// Subadditivity grid for phi on this space: its distinct positive distances.
std::vector<double> distance_grid(const FiniteMetricSpace& space);

struct DiameterCheckEntry {
  PointSet subset;
  double transformed_diameter;
  double phi_of_diameter;
  bool holds;
};

struct DiameterCheckReport {
  std::vector<DiameterCheckEntry> entries;
  bool holds() const;
};

// diam under phi(d) == phi(diam under d) for each sample, up to the float
// evaluation of phi. Same preconditions as transform_space.
DiameterCheckReport transformed_diameter_check(
    const FiniteMetricSpace& space, const TransformSpec& phi,
    std::span<const PointSet> samples, double tol = kDefaultMetricTol);

// Ball order proxy for "same topology": for every center and every radius r
// taken from the distances, ball_d(p, r) == ball_{phi(d)}(p, phi(r)), both open
// and closed.
bool same_ball_structure(const FiniteMetricSpace& base,
                         const FiniteMetricSpace& transformed,
                         const TransformSpec& phi);

}  // namespace hcover

#endif  // HCOVER_LIPSCHITZ_HPP_
