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

// Finite metric spaces and the set operations every other module builds on:
// axiom validation, diameters, balls, r-neighborhoods, distance to a set.

#ifndef HCOVER_METRIC_HPP_
#define HCOVER_METRIC_HPP_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

namespace hcover {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();
inline constexpr double kDefaultMetricTol = 1e-9;

// Subset of the points {0, ..., universe-1} of a finite space.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::size_t universe);
  PointSet(std::size_t universe, std::span<const std::size_t> members);

  static PointSet full(std::size_t universe);
  static PointSet from_mask(std::size_t universe, std::uint64_t mask);

  std::size_t universe() const { return universe_; }
  bool contains(std::size_t i) const;
  void insert(std::size_t i);
  void erase(std::size_t i);
  std::size_t count() const;
  bool empty() const { return count() == 0; }
  std::vector<std::size_t> members() const;

  bool is_subset_of(const PointSet& other) const;
  PointSet operator|(const PointSet& other) const;
  PointSet operator&(const PointSet& other) const;

  friend bool operator==(const PointSet&, const PointSet&) = default;
  friend auto operator<=>(const PointSet& a, const PointSet& b) {
    return a.members() <=> b.members();
  }

 private:
  void check_index(std::size_t i) const;
  void check_universe(const PointSet& other) const;

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

// Labeled points with a dense distance matrix. Construction only checks
// shape; use validate_metric for the axioms.
class FiniteMetricSpace {
 public:
  FiniteMetricSpace() = default;
  FiniteMetricSpace(std::vector<std::string> labels,
                    std::vector<std::vector<double>> dist);
  // Labels default to "0", "1", ...
  explicit FiniteMetricSpace(std::vector<std::vector<double>> dist);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  double operator()(std::size_t i, std::size_t j) const {
    return dist_[i * size() + j];
  }
  std::vector<std::vector<double>> matrix() const;

  PointSet all() const { return PointSet::full(size()); }
  PointSet subset(std::span<const std::size_t> members) const {
    return PointSet(size(), members);
  }
  PointSet subset(std::initializer_list<std::size_t> members) const;

 private:
  std::vector<std::string> labels_;
  std::vector<double> dist_;
};

enum class Axiom {
  kNonnegativity,
  kIdentity,  // d(i,i) = 0 and d(i,j) > 0 for i != j
  kSymmetry,
  kTriangle,
  kUltrametric,
};

const char* axiom_name(Axiom a);

// For kTriangle/kUltrametric: lhs = d(i,j) and rhs = d(i,k) + d(k,j) (resp.
// max of the two), with k the intermediate point. For pair axioms k == i.
struct Violation {
  Axiom axiom;
  std::size_t i;
  std::size_t j;
  std::size_t k;
  double lhs;
  double rhs;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

// Reports every violated axiom, not just the first. Comparisons are relative:
// a > b counts only when a - b > tol * max(|a|, |b|).
ValidationReport validate_metric(std::span<const std::vector<double>> matrix,
                                 double tol = kDefaultMetricTol);
ValidationReport validate_metric(const FiniteMetricSpace& space,
                                 double tol = kDefaultMetricTol);

ValidationReport validate_ultrametric(
    std::span<const std::vector<double>> matrix,
    double tol = kDefaultMetricTol);
ValidationReport validate_ultrametric(const FiniteMetricSpace& space,
                                      double tol = kDefaultMetricTol);

// 0 for empty and singleton sets.
double diameter(const FiniteMetricSpace& space, const PointSet& subset);

enum class BallKind { kOpen, kClosed };

struct BallSpec {
  std::size_t center;
  double radius;
  BallKind kind = BallKind::kOpen;
};

PointSet ball(const FiniteMetricSpace& space, const BallSpec& spec);

// A(r) = {x : d(x, a) < r for some a in A}.
PointSet neighborhood(const FiniteMetricSpace& space, const PointSet& subset,
                      double radius);

double dist_to_set(const FiniteMetricSpace& space, std::size_t x,
                   const PointSet& subset);

}  // namespace hcover

#endif  // HCOVER_METRIC_HPP_
