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

#include "hcover/integrate.hpp"

#include <cmath>
#include <random>
#include <string>

#include "hcover/errors.hpp"

namespace hcover {

namespace {

// Neumaier's variant of Kahan summation; order-dependent but deterministic.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      carry_ += (sum_ - t) + x;
    } else {
      carry_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

std::size_t checked_cell_count(const CantorSpace& space, std::size_t depth,
                               std::size_t limit) {
  const BigInt count = space.cell_count(0, depth);
  if (count > limit) {
    throw SolverRefusal("depth " + std::to_string(depth) + " has " +
                        count.str() + " cells, over the limit of " +
                        std::to_string(limit));
  }
  return count.convert_to<std::size_t>();
}

// Calls fn(point) for one representative per depth-l cell, in lexicographic
// cell order.
template <class Fn>
void for_each_representative(const CantorSpace& space, std::size_t depth,
                             SampleStrategy strategy, std::uint64_t seed,
                             std::size_t random_tail, Fn&& fn) {
  const bool random = strategy == SampleStrategy::kSeededRandom;
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(depth)};
  std::mt19937_64 rng(seq);
  Point p;
  p.digits.assign(depth + (random ? random_tail : 0), 0);
  while (true) {
    if (random) {
      for (std::size_t j = depth; j < p.digits.size(); ++j) {
        p.digits[j] = static_cast<Digit>(rng() % space.branching(j + 1));
      }
    }
    fn(p);
    std::size_t j = depth;
    while (true) {
      if (j == 0) return;
      --j;
      if (++p.digits[j] < space.branching(j + 1)) break;
      p.digits[j] = 0;
    }
  }
}

double evaluate(const FunctionSpec& f, const Point& p, std::size_t depth) {
  try {
    return f.evaluator(p);
  } catch (const std::exception& e) {
    throw EvaluationError("evaluator failed on cell " +
                          to_string(cell_of(p, depth)) + ": " + e.what());
  }
}

double normalize(const CantorSpace& space, std::size_t depth, double sum) {
  // The weight 1 / prod n_i is applied once, as a division by the exact count.
  const Rational weight = Rational(BigInt(1), space.cell_count(0, depth));
  return sum * to_double(boost::multiprecision::numerator(weight)) /
         to_double(boost::multiprecision::denominator(weight));
}

double streamed_sum(const CantorSpace& space, const FunctionSpec& f,
                    std::size_t depth, SampleStrategy strategy,
                    std::uint64_t seed) {
  checked_cell_count(space, depth, kMaxEnumeratedCells);
  CompensatedSum acc;
  for_each_representative(space, depth, strategy, seed, kDefaultRandomTail,
                          [&](const Point& p) { acc.add(evaluate(f, p, depth)); });
  return normalize(space, depth, acc.value());
}

}  // namespace

SampleSet::SampleSet(std::size_t depth, std::size_t point_depth,
                     std::vector<Digit> digits)
    : depth_(depth), point_depth_(point_depth), digits_(std::move(digits)) {
  if (point_depth_ < depth_) {
    throw ShapeError("representatives must be at least as deep as the cells");
  }
  if (point_depth_ == 0 ? !digits_.empty() : digits_.size() % point_depth_ != 0) {
    throw ShapeError("sample digit array does not split into whole points");
  }
}

std::size_t SampleSet::size() const {
  return point_depth_ == 0 ? 1 : digits_.size() / point_depth_;
}

Point SampleSet::representative(std::size_t i) const {
  const auto first = digits_.begin() + static_cast<long>(i * point_depth_);
  return Point{{first, first + static_cast<long>(point_depth_)}};
}

SampleSet sample_set(const CantorSpace& space, std::size_t depth,
                     SampleStrategy strategy, std::uint64_t seed,
                     std::size_t random_tail, std::size_t limit) {
  const std::size_t count = checked_cell_count(space, depth, limit);
  const std::size_t point_depth =
      depth + (strategy == SampleStrategy::kSeededRandom ? random_tail : 0);
  std::vector<Digit> digits;
  digits.reserve(count * point_depth);
  for_each_representative(space, depth, strategy, seed, random_tail,
                          [&](const Point& p) {
                            digits.insert(digits.end(), p.digits.begin(),
                                          p.digits.end());
                          });
  return SampleSet(depth, point_depth, std::move(digits));
}

double riemann_sum(const CantorSpace& space, const FunctionSpec& f,
                   const SampleSet& samples) {
  const BigInt expected = space.cell_count(0, samples.depth());
  if (expected != samples.size()) {
    throw ShapeError("sample set has " + std::to_string(samples.size()) +
                     " representatives for " + expected.str() + " cells");
  }
  CompensatedSum acc;
  std::vector<Digit> previous;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const Point p = samples.representative(i);
    space.check(p.digits);
    const Cell c = cell_of(p, samples.depth());
    if (i > 0 && !(previous < c.prefix)) {
      throw ShapeError("sample set must hold one point per cell in "
                       "lexicographic order");
    }
    previous = c.prefix;
    acc.add(evaluate(f, p, samples.depth()));
  }
  return normalize(space, samples.depth(), acc.value());
}

IntegrationResult integrate(const CantorSpace& space, const FunctionSpec& f,
                            double tol, std::size_t max_depth,
                            std::uint64_t seed) {
  if (!(tol > 0.0)) throw DomainError("integration tolerance must be positive");
  if (!f.evaluator) throw DomainError("function has no evaluator");
  const auto lex = [&](std::size_t l) {
    return streamed_sum(space, f, l, SampleStrategy::kLexicographicMin, seed);
  };
  const auto rnd = [&](std::size_t l) {
    return streamed_sum(space, f, l, SampleStrategy::kSeededRandom, seed);
  };

  if (f.declared_depth) {
    const std::size_t d = *f.declared_depth;
    IntegrationResult r{lex(d), d, true, true};
    // A function that really depends on deeper digits shows up here.
    if (std::abs(r.value - rnd(d)) > tol) {
      r.certified = false;
      r.stabilized = false;
    }
    return r;
  }

  if (f.modulus) {
    for (std::size_t l = 0; l <= max_depth; ++l) {
      const double omega = f.modulus(l);
      if (!(omega <= tol)) continue;
      IntegrationResult r{lex(l), l, true, true};
      // Two Riemann sums at depth l differ by at most the modulus.
      if (std::abs(r.value - rnd(l)) > omega) {
        r.certified = false;
        r.stabilized = false;
      }
      return r;
    }
  }

  IntegrationResult best;
  double previous = 0.0;
  for (std::size_t l = 0; l <= max_depth; ++l) {
    const double a = lex(l);
    const double b = rnd(l);
    best.value = a;
    best.achieved_depth = l;
    if (l > 0 && std::abs(a - b) <= tol && std::abs(a - previous) <= tol) {
      best.stabilized = true;
      return best;
    }
    previous = a;
  }
  return best;
}

FunctionSpec constant_function(double value) {
  return {[value](const Point&) { return value; }, 0, {}};
}

FunctionSpec digit_projection(std::size_t level) {
  if (level == 0) throw DomainError("digit levels start at 1");
  return {[level](const Point& p) {
            return static_cast<double>(p.digit(level - 1));
          },
          level,
          {}};
}

FunctionSpec cell_indicator(const Cell& cell) {
  return {[cell](const Point& p) {
            if (p.depth() < cell.depth()) {
              throw DomainError("point too shallow for indicator of " +
                                to_string(cell));
            }
            return cell_relation(cell_of(p, cell.depth()), cell) ==
                           CellRelation::kEqual
                       ? 1.0
                       : 0.0;
          },
          cell.depth(),
          {}};
}

FunctionSpec expansion_value(const CantorSpace& space, double base) {
  if (!(base > 1.0)) throw DomainError("expansion base must exceed 1");
  const std::size_t explicit_levels = space.profile().explicit_levels().size();
  const double tail_digit = space.profile().tail() - 1.0;
  std::vector<double> explicit_max;
  for (std::size_t j = 1; j <= explicit_levels; ++j) {
    explicit_max.push_back(space.branching(j) - 1.0);
  }
  auto modulus = [=](std::size_t l) {
    // sum_{j > l} (n_j - 1) base^{-j}
    double total = 0.0;
    for (std::size_t j = l + 1; j <= explicit_levels; ++j) {
      total += explicit_max[j - 1] * std::pow(base, -static_cast<double>(j));
    }
    const std::size_t from = std::max(l, explicit_levels);
    total += tail_digit * std::pow(base, -static_cast<double>(from)) / (base - 1.0);
    return total;
  };
  return {[base](const Point& p) {
            double v = 0.0;
            double scale = 1.0;
            for (Digit d : p.digits) {
              scale /= base;
              v += d * scale;
            }
            return v;
          },
          std::nullopt,
          modulus};
}

}  // namespace hcover
