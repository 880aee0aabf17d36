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

// Riemann sums and integrals of functions on the sequence space against the
// uniform cell measure, where every depth-l cell has mass 1 / prod n_i.

#ifndef HCOVER_INTEGRATE_HPP_
#define HCOVER_INTEGRATE_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "hcover/cantor.hpp"

namespace hcover {

inline constexpr std::size_t kDefaultRandomTail = 16;
inline constexpr std::uint64_t kDefaultSeed = 0x5eedULL;

class EvaluationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class SampleStrategy { kLexicographicMin, kSeededRandom };

// One representative point per depth-l cell, in lexicographic cell order,
// stored as a flat digit array with point_depth digits per point.
class SampleSet {
 public:
  SampleSet(std::size_t depth, std::size_t point_depth,
            std::vector<Digit> digits);

  std::size_t depth() const { return depth_; }
  std::size_t point_depth() const { return point_depth_; }
  std::size_t size() const;
  Point representative(std::size_t i) const;

 private:
  std::size_t depth_;
  std::size_t point_depth_;
  std::vector<Digit> digits_;
};

// Lexicographic-min representatives are the depth-l prefixes themselves
// (zeros beyond). Seeded-random ones extend each prefix by `random_tail`
// digits drawn from a generator seeded by (seed, l).
SampleSet sample_set(const CantorSpace& space, std::size_t depth,
                     SampleStrategy strategy, std::uint64_t seed = kDefaultSeed,
                     std::size_t random_tail = kDefaultRandomTail,
                     std::size_t limit = kMaxEnumeratedCells);

struct FunctionSpec {
  std::function<double(const Point&)> evaluator;
  // The function depends only on the first declared_depth digits.
  std::optional<std::size_t> declared_depth;
  // modulus(l) bounds the oscillation of the function on every depth-l cell.
  std::function<double(std::size_t)> modulus;
};

// (1 / prod_{i<=l} n_i) * sum of f over the representatives, compensated
// summation in representative order.
double riemann_sum(const CantorSpace& space, const FunctionSpec& f,
                   const SampleSet& samples);

struct IntegrationResult {
  double value = 0.0;
  std::size_t achieved_depth = 0;
  // The error is bounded by tol: either exact (declared depth) or bounded by
  // the supplied modulus.
  bool certified = false;
  // Lexicographic and random sums agreed at the final depth and with the
  // previous depth, within tol.
  bool stabilized = false;
};

IntegrationResult integrate(const CantorSpace& space, const FunctionSpec& f,
                            double tol, std::size_t max_depth,
                            std::uint64_t seed = kDefaultSeed);

// Built-in function families.
FunctionSpec constant_function(double value);
// x_level, level >= 1.
FunctionSpec digit_projection(std::size_t level);
FunctionSpec cell_indicator(const Cell& cell);
// sum_j x_j base^{-j}; with n == 2 and base 2 this is the binary expansion.
FunctionSpec expansion_value(const CantorSpace& space, double base = 2.0);

}  // namespace hcover

#endif  // HCOVER_INTEGRATE_HPP_
