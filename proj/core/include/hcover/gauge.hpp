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

// Gauge functions h(t) that price a covering set by its diameter, and the
// transform functions phi(t) applied to metrics.

#ifndef HCOVER_GAUGE_HPP_
#define HCOVER_GAUGE_HPP_

#include <span>
#include <string>
#include <vector>

namespace hcover {

struct Knot {
  double t;
  double value;

  friend bool operator==(const Knot&, const Knot&) = default;
};

// A monotone function on [0, +inf] in one of three concrete forms:
//
//   power     h(t) = t^alpha
//   table     piecewise linear through the knots, anchored at (0, 0) and
//             constant past the last knot
//   schedule  values h_l attached to a decreasing radius sequence r_l;
//             piecewise linear in t through (0, 0), (r_L, h_L), ..., (r_0, h_0)
//
// Any form may carry an argument divisor C, giving t -> h(t / C).
class Gauge {
 public:
  enum class Form { kPower, kTable, kSchedule };

  static Gauge power(double alpha);
  // Knot abscissae must be nonnegative and strictly increasing. Values are not
  // checked here so that check_gauge can report on them.
  static Gauge table(std::vector<Knot> knots);
  // radii[l] = r_l, strictly decreasing and positive; values.size() == radii.size().
  static Gauge schedule(std::vector<double> radii, std::vector<double> values);

  Form form() const { return form_; }
  double alpha() const { return alpha_; }
  // Interpolation knots for table and schedule forms, ascending in t.
  const std::vector<Knot>& knots() const { return knots_; }
  const std::vector<double>& schedule_radii() const { return radii_; }
  const std::vector<double>& schedule_values() const { return values_; }
  double divisor() const { return divisor_; }

  // Unchecked evaluation; t must be >= 0 or +inf.
  double operator()(double t) const;

  // sup of h over [0, inf).
  double supremum() const;

 private:
  Gauge() = default;
  double base(double t) const;

  Form form_ = Form::kPower;
  double alpha_ = 1.0;
  std::vector<Knot> knots_;
  std::vector<double> radii_;
  std::vector<double> values_;
  double divisor_ = 1.0;

  friend Gauge rescaled_gauge(const Gauge& h, double c);
};

std::string form_name(Gauge::Form form);

// h(t), with h(+inf) = sup h. Throws DomainError for negative or NaN t.
double eval_gauge(const Gauge& h, double t);

// t -> h(t / c). Nested rescalings multiply their divisors.
Gauge rescaled_gauge(const Gauge& h, double c);

struct GaugeViolation {
  enum class Kind { kNonzeroAtZero, kNonPositive, kDecreasing };
  Kind kind;
  double t;
  double value;
  double previous;  // h at the preceding grid point, for kDecreasing
};

struct GaugeReport {
  std::vector<GaugeViolation> violations;
  bool ok() const { return violations.empty(); }
};

// Grid scan for h(0) = 0, h(t) > 0 for t > 0 and monotonicity. Continuity is
// not checked. grid must be ascending.
GaugeReport check_gauge(const Gauge& h, std::span<const double> grid);

// phi(t) used to transform a metric entrywise.
struct TransformSpec {
  Gauge fn = Gauge::power(1.0);
  // Set by check_subadditive; transform_space requires it on non-ultrametric
  // bases.
  bool subadditivity_checked = false;

  static TransformSpec power(double a) { return {Gauge::power(a), false}; }
  static TransformSpec table(std::vector<Knot> knots) {
    return {Gauge::table(std::move(knots)), false};
  }

  double operator()(double t) const { return fn(t); }
};

inline constexpr double kSubadditiveTol = 1e-12;

// Sampled check of phi(x + y) <= phi(x) + phi(y) over all pairs from grid.
// Records the outcome in phi.subadditivity_checked.
bool check_subadditive(TransformSpec& phi, std::span<const double> grid,
                       double tol = kSubadditiveTol);

// alpha with n * r^alpha = 1, i.e. log n / log(1/r).
double solve_similarity_dimension(long n, double r);

}  // namespace hcover

#endif  // HCOVER_GAUGE_HPP_
