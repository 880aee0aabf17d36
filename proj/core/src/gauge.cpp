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

#include "hcover/gauge.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "hcover/errors.hpp"

namespace hcover {

namespace {

double interpolate(const std::vector<Knot>& knots, double t) {
  if (t >= knots.back().t) return knots.back().value;
  auto hi = std::upper_bound(knots.begin(), knots.end(), t,
                             [](double v, const Knot& k) { return v < k.t; });
  if (hi == knots.begin()) return knots.front().value;
  auto lo = hi - 1;
  if (t == lo->t) return lo->value;
  const double w = (t - lo->t) / (hi->t - lo->t);
  return lo->value + w * (hi->value - lo->value);
}

}  // namespace

Gauge Gauge::power(double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw DomainError("power gauge exponent must be a positive real");
  }
  Gauge g;
  g.form_ = Form::kPower;
  g.alpha_ = alpha;
  return g;
}

Gauge Gauge::table(std::vector<Knot> knots) {
  if (knots.empty()) throw ShapeError("table gauge needs at least one knot");
  for (std::size_t i = 0; i < knots.size(); ++i) {
    if (!(knots[i].t >= 0.0) || !std::isfinite(knots[i].t) ||
        !std::isfinite(knots[i].value)) {
      throw ShapeError("table gauge knots must be finite with t >= 0");
    }
    if (i > 0 && !(knots[i].t > knots[i - 1].t)) {
      throw ShapeError("table gauge knots must be strictly increasing in t");
    }
  }
  if (knots.front().t > 0.0) knots.insert(knots.begin(), Knot{0.0, 0.0});
  Gauge g;
  g.form_ = Form::kTable;
  g.knots_ = std::move(knots);
  return g;
}

Gauge Gauge::schedule(std::vector<double> radii, std::vector<double> values) {
  if (radii.empty() || radii.size() != values.size()) {
    throw ShapeError("schedule gauge needs one value per radius");
  }
  std::vector<Knot> knots{{0.0, 0.0}};
  for (std::size_t l = radii.size(); l-- > 0;) {
    if (!(radii[l] > 0.0) || (l + 1 < radii.size() && !(radii[l] > radii[l + 1]))) {
      throw ShapeError("schedule radii must be positive and strictly decreasing");
    }
    if (!std::isfinite(values[l])) {
      throw ShapeError("schedule gauge values must be finite");
    }
    knots.push_back({radii[l], values[l]});
  }
  Gauge g;
  g.form_ = Form::kSchedule;
  g.knots_ = std::move(knots);
  g.radii_ = std::move(radii);
  g.values_ = std::move(values);
  return g;
}

double Gauge::base(double t) const {
  if (form_ == Form::kPower) return t == 0.0 ? 0.0 : std::pow(t, alpha_);
  if (std::isinf(t)) return supremum();
  return interpolate(knots_, t);
}

double Gauge::operator()(double t) const { return base(t / divisor_); }

double Gauge::supremum() const {
  if (form_ == Form::kPower) return std::numeric_limits<double>::infinity();
  double best = 0.0;
  for (const Knot& k : knots_) best = std::max(best, k.value);
  return best;
}

std::string form_name(Gauge::Form form) {
  switch (form) {
    case Gauge::Form::kPower:
      return "power";
    case Gauge::Form::kTable:
      return "table";
    case Gauge::Form::kSchedule:
      return "schedule";
  }
  return "unknown";
}

double eval_gauge(const Gauge& h, double t) {
  if (!(t >= 0.0)) throw DomainError("gauge evaluated at a negative argument");
  return h(t);
}

Gauge rescaled_gauge(const Gauge& h, double c) {
  if (!(c > 0.0) || !std::isfinite(c)) {
    throw DomainError("rescaling constant must be a positive real");
  }
  Gauge out = h;
  out.divisor_ = h.divisor_ * c;
  return out;
}

GaugeReport check_gauge(const Gauge& h, std::span<const double> grid) {
  GaugeReport report;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double t = grid[i];
    const double v = eval_gauge(h, t);
    if (t == 0.0 && v != 0.0) {
      report.violations.push_back(
          {GaugeViolation::Kind::kNonzeroAtZero, t, v, 0.0});
    }
    if (t > 0.0 && !(v > 0.0)) {
      report.violations.push_back({GaugeViolation::Kind::kNonPositive, t, v, 0.0});
    }
    if (i > 0) {
      const double prev = eval_gauge(h, grid[i - 1]);
      if (v < prev) {
        report.violations.push_back(
            {GaugeViolation::Kind::kDecreasing, t, v, prev});
      }
    }
  }
  return report;
}

bool check_subadditive(TransformSpec& phi, std::span<const double> grid,
                       double tol) {
  bool ok = true;
  for (std::size_t i = 0; i < grid.size() && ok; ++i) {
    for (std::size_t j = i; j < grid.size(); ++j) {
      const double sum = phi(grid[i]) + phi(grid[j]);
      if (phi(grid[i] + grid[j]) > sum + tol * std::max(1.0, sum)) {
        ok = false;
        break;
      }
    }
  }
  phi.subadditivity_checked = ok;
  return ok;
}

double solve_similarity_dimension(long n, double r) {
  if (n < 2) throw DomainError("similarity dimension needs n >= 2");
  if (!(r > 0.0 && r < 1.0)) {
    throw DomainError("similarity dimension needs r in (0, 1)");
  }
  const double nn = static_cast<double>(n);
  const double log_r = std::log(r);
  double alpha = std::log(nn) / -log_r;
  // One Newton step on g(a) = n r^a - 1 removes the last bits of rounding.
  const double g = nn * std::pow(r, alpha) - 1.0;
  alpha -= g / ((g + 1.0) * log_r);
  const double residual = std::abs(nn * std::pow(r, alpha) - 1.0);
  if (!(residual < 1e-12)) {
    throw SolverRefusal("similarity dimension residual " +
                        std::to_string(residual) + " exceeds 1e-12");
  }
  return alpha;
}

}  // namespace hcover
