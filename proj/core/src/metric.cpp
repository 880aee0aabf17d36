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

#include "hcover/metric.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "hcover/errors.hpp"

namespace hcover {

namespace {

std::size_t word_count(std::size_t universe) { return (universe + 63) / 64; }

// a exceeds b beyond the relative tolerance.
bool exceeds(double a, double b, double tol) {
  return a - b > tol * std::max(std::abs(a), std::abs(b));
}

void check_square(std::span<const std::vector<double>> matrix) {
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    if (matrix[i].size() != matrix.size()) {
      throw ShapeError("distance matrix is not square: row " +
                       std::to_string(i) + " has " +
                       std::to_string(matrix[i].size()) + " entries, expected " +
                       std::to_string(matrix.size()));
    }
  }
}

std::vector<Violation> pair_violations(
    std::span<const std::vector<double>> d, double tol) {
  std::vector<Violation> out;
  const std::size_t n = d.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double v = d[i][j];
      if (!(v >= 0.0)) {
        out.push_back({Axiom::kNonnegativity, i, j, i, v, 0.0});
        continue;
      }
      if (i == j && v != 0.0) {
        out.push_back({Axiom::kIdentity, i, j, i, v, 0.0});
      } else if (i < j && v == 0.0) {
        out.push_back({Axiom::kIdentity, i, j, i, v, 0.0});
      }
      if (i < j && (exceeds(v, d[j][i], tol) || exceeds(d[j][i], v, tol))) {
        out.push_back({Axiom::kSymmetry, i, j, i, v, d[j][i]});
      }
    }
  }
  return out;
}

}  // namespace

PointSet::PointSet(std::size_t universe)
    : universe_(universe), words_(word_count(universe), 0) {}

PointSet::PointSet(std::size_t universe, std::span<const std::size_t> members)
    : PointSet(universe) {
  for (std::size_t i : members) insert(i);
}

PointSet PointSet::full(std::size_t universe) {
  PointSet s(universe);
  for (std::size_t i = 0; i < universe; ++i) s.insert(i);
  return s;
}

PointSet PointSet::from_mask(std::size_t universe, std::uint64_t mask) {
  if (universe < 64 && (mask >> universe) != 0) {
    throw ShapeError("mask references points outside the space");
  }
  PointSet s(universe);
  if (!s.words_.empty()) s.words_[0] = mask;
  return s;
}

void PointSet::check_index(std::size_t i) const {
  if (i >= universe_) {
    throw ShapeError("point index " + std::to_string(i) +
                     " outside space of size " + std::to_string(universe_));
  }
}

void PointSet::check_universe(const PointSet& other) const {
  if (other.universe_ != universe_) {
    throw ShapeError("subsets belong to spaces of different sizes");
  }
}

bool PointSet::contains(std::size_t i) const {
  return i < universe_ && ((words_[i / 64] >> (i % 64)) & 1U) != 0;
}

void PointSet::insert(std::size_t i) {
  check_index(i);
  words_[i / 64] |= std::uint64_t{1} << (i % 64);
}

void PointSet::erase(std::size_t i) {
  check_index(i);
  words_[i / 64] &= ~(std::uint64_t{1} << (i % 64));
}

std::size_t PointSet::count() const {
  std::size_t c = 0;
  for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::vector<std::size_t> PointSet::members() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t bits = words_[w];
    while (bits != 0) {
      out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

bool PointSet::is_subset_of(const PointSet& other) const {
  check_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & ~other.words_[w]) != 0) return false;
  }
  return true;
}

PointSet PointSet::operator|(const PointSet& other) const {
  check_universe(other);
  PointSet out = *this;
  for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] |= other.words_[w];
  return out;
}

PointSet PointSet::operator&(const PointSet& other) const {
  check_universe(other);
  PointSet out = *this;
  for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] &= other.words_[w];
  return out;
}

namespace {

std::vector<std::string> index_labels(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return labels;
}

}  // namespace

FiniteMetricSpace::FiniteMetricSpace(std::vector<std::string> labels,
                                     std::vector<std::vector<double>> dist)
    : labels_(std::move(labels)) {
  check_square(dist);
  if (labels_.size() != dist.size()) {
    throw ShapeError("space has " + std::to_string(labels_.size()) +
                     " labels but a " + std::to_string(dist.size()) +
                     "x" + std::to_string(dist.size()) + " matrix");
  }
  dist_.reserve(dist.size() * dist.size());
  for (const auto& row : dist) {
    for (double v : row) {
      if (std::isnan(v)) throw ShapeError("distance matrix contains NaN");
      dist_.push_back(v);
    }
  }
}

FiniteMetricSpace::FiniteMetricSpace(std::vector<std::vector<double>> dist) {
  const std::size_t n = dist.size();
  *this = FiniteMetricSpace(index_labels(n), std::move(dist));
}

std::vector<std::vector<double>> FiniteMetricSpace::matrix() const {
  std::vector<std::vector<double>> out(size(), std::vector<double>(size()));
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = 0; j < size(); ++j) out[i][j] = (*this)(i, j);
  }
  return out;
}

PointSet FiniteMetricSpace::subset(
    std::initializer_list<std::size_t> members) const {
  return PointSet(size(),
                  std::span<const std::size_t>(members.begin(), members.size()));
}

const char* axiom_name(Axiom a) {
  switch (a) {
    case Axiom::kNonnegativity:
      return "nonnegativity";
    case Axiom::kIdentity:
      return "identity";
    case Axiom::kSymmetry:
      return "symmetry";
    case Axiom::kTriangle:
      return "triangle";
    case Axiom::kUltrametric:
      return "ultrametric";
  }
  return "unknown";
}

ValidationReport validate_metric(std::span<const std::vector<double>> d,
                                 double tol) {
  check_square(d);
  ValidationReport report{pair_violations(d, tol)};
  const std::size_t n = d.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        const double via = d[i][k] + d[k][j];
        if (exceeds(d[i][j], via, tol)) {
          report.violations.push_back({Axiom::kTriangle, i, j, k, d[i][j], via});
        }
      }
    }
  }
  return report;
}

ValidationReport validate_metric(const FiniteMetricSpace& space, double tol) {
  return validate_metric(space.matrix(), tol);
}

ValidationReport validate_ultrametric(std::span<const std::vector<double>> d,
                                      double tol) {
  check_square(d);
  ValidationReport report;
  const std::size_t n = d.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        const double bound = std::max(d[i][k], d[k][j]);
        if (exceeds(d[i][j], bound, tol)) {
          report.violations.push_back(
              {Axiom::kUltrametric, i, j, k, d[i][j], bound});
        }
      }
    }
  }
  return report;
}

ValidationReport validate_ultrametric(const FiniteMetricSpace& space,
                                      double tol) {
  return validate_ultrametric(space.matrix(), tol);
}

double diameter(const FiniteMetricSpace& space, const PointSet& subset) {
  const auto pts = subset.members();
  double diam = 0.0;
  for (std::size_t a = 0; a < pts.size(); ++a) {
    for (std::size_t b = a + 1; b < pts.size(); ++b) {
      diam = std::max(diam, space(pts[a], pts[b]));
    }
  }
  return diam;
}

PointSet ball(const FiniteMetricSpace& space, const BallSpec& spec) {
  if (spec.center >= space.size()) {
    throw ShapeError("ball center outside the space");
  }
  if (!(spec.radius > 0.0)) throw DomainError("ball radius must be positive");
  PointSet out(space.size());
  for (std::size_t x = 0; x < space.size(); ++x) {
    const double d = space(x, spec.center);
    const bool in =
        spec.kind == BallKind::kOpen ? d < spec.radius : d <= spec.radius;
    if (in || x == spec.center) out.insert(x);
  }
  return out;
}

PointSet neighborhood(const FiniteMetricSpace& space, const PointSet& subset,
                      double radius) {
  if (!(radius > 0.0)) {
    throw DomainError("neighborhood radius must be positive");
  }
  PointSet out(space.size());
  if (subset.empty()) return out;
  for (std::size_t x = 0; x < space.size(); ++x) {
    if (subset.contains(x) || dist_to_set(space, x, subset) < radius) {
      out.insert(x);
    }
  }
  return out;
}

double dist_to_set(const FiniteMetricSpace& space, std::size_t x,
                   const PointSet& subset) {
  if (x >= space.size()) throw ShapeError("point outside the space");
  if (subset.universe() != space.size()) {
    throw ShapeError("subset does not belong to this space");
  }
  double best = kInfinity;
  for (std::size_t y : subset.members()) best = std::min(best, space(x, y));
  if (best == kInfinity) throw DomainError("distance to the empty set");
  return best;
}

}  // namespace hcover
