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

#include "cli.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hcover/cantor.hpp"
#include "hcover/errors.hpp"
#include "hcover/gauge.hpp"
#include "hcover/hausdorff.hpp"
#include "hcover/integrate.hpp"
#include "hcover/io.hpp"
#include "hcover/lipschitz.hpp"
#include "hcover/metric.hpp"

namespace hcover::cli {

namespace {

using io::json;

constexpr const char* kDefaultGauge = R"({"form":"power","alpha":1})";
constexpr double kDefaultIntegrateTol = 1e-6;

struct GlobalOptions {
  std::optional<double> tol;
  std::uint64_t seed = kDefaultSeed;
  std::string format = "json";
  std::size_t max_depth = 8;
  std::string eps_schedule;
};

struct Outcome {
  json result;
  int code = kOk;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, sep)) {
    if (!item.empty()) parts.push_back(item);
  }
  return parts;
}

// Accepts plain reals and fractions "p/q".
double parse_real(const std::string& s) {
  try {
    std::size_t used = 0;
    const auto slash = s.find('/');
    if (slash != std::string::npos) {
      const double num = std::stod(s.substr(0, slash));
      const double den = std::stod(s.substr(slash + 1), &used);
      return num / den;
    }
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::logic_error&) {
    throw ShapeError("not a number: \"" + s + "\"");
  }
}

std::vector<double> parse_reals(const std::string& s) {
  std::vector<double> out;
  for (const auto& part : split(s, ',')) out.push_back(parse_real(part));
  return out;
}

// Inline JSON when the argument starts with '{' or '[', else a file path.
json parse_json_arg(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t");
  if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) {
    try {
      return json::parse(arg);
    } catch (const json::parse_error& e) {
      throw ShapeError(std::string("cannot parse JSON argument: ") + e.what());
    }
  }
  return io::read_json_file(arg);
}

// Point indices or labels, comma separated. Empty means the whole space.
PointSet parse_subset(const FiniteMetricSpace& space, const std::string& s) {
  if (s.empty()) return space.all();
  PointSet out(space.size());
  for (const auto& item : split(s, ',')) {
    bool found = false;
    for (std::size_t i = 0; i < space.size() && !found; ++i) {
      if (space.label(i) == item) {
        out.insert(i);
        found = true;
      }
    }
    if (!found) {
      try {
        out.insert(std::stoul(item));
      } catch (const std::logic_error&) {
        throw ShapeError("unknown point \"" + item + "\"");
      }
    }
  }
  return out;
}

// "root" or digits separated by '.', e.g. "0.1.1".
Cell parse_cell(const CantorSpace& space, const std::string& s) {
  if (s == "root" || s.empty()) return Cell::root();
  std::vector<Digit> digits;
  for (const auto& d : split(s, '.')) {
    try {
      digits.push_back(static_cast<Digit>(std::stoul(d)));
    } catch (const std::logic_error&) {
      throw ShapeError("bad cell \"" + s + "\"");
    }
  }
  return space.cell(std::move(digits));
}

std::vector<Cell> parse_cells(const CantorSpace& space,
                              const std::vector<std::string>& items) {
  std::vector<Cell> cells;
  for (const auto& item : items) cells.push_back(parse_cell(space, item));
  if (cells.empty()) cells.push_back(Cell::root());
  return cells;
}

std::string csv_field(const json& v) {
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

void emit(const json& result, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << result.dump(2) << "\n";
    return;
  }
  if (format == "csv") {
    std::string header;
    std::string row;
    for (auto it = result.begin(); it != result.end(); ++it) {
      if (!header.empty()) {
        header += ',';
        row += ',';
      }
      header += it.key();
      row += csv_field(it.value());
    }
    out << header << "\n" << row << "\n";
    return;
  }
  std::size_t width = 0;
  for (auto it = result.begin(); it != result.end(); ++it) {
    width = std::max(width, it.key().size());
  }
  for (auto it = result.begin(); it != result.end(); ++it) {
    out << it.key() << std::string(width + 2 - it.key().size(), ' ')
        << (it.value().is_string() ? it.value().get<std::string>()
                                   : it.value().dump())
        << "\n";
  }
}

struct TargetOptions {
  std::string space;
  std::string cantor;
  std::string interval;
  std::string subset;
  std::vector<std::string> cells;
  std::string gauge = kDefaultGauge;
  std::optional<double> eps;
  double floor = 0.0;
  std::size_t size_limit = kDefaultExactLimit;
};

void add_target_options(CLI::App* cmd, TargetOptions& t) {
  auto* space = cmd->add_option("--space", t.space, "Finite metric space JSON file");
  auto* cantor = cmd->add_option("--cantor", t.cantor, "Cantor space JSON file");
  auto* interval =
      cmd->add_option("--interval", t.interval, "Closed interval \"a,b\"");
  space->excludes(cantor)->excludes(interval);
  cantor->excludes(interval);
  cmd->add_option("--subset", t.subset,
                  "Points of the space (labels or indices, comma separated)");
  cmd->add_option("--cell", t.cells, "Target cell, e.g. 0.1 (repeatable)");
  cmd->add_option("--gauge", t.gauge, "Gauge JSON (inline or file)");
  cmd->add_option("--floor", t.floor, "Minimum priced diameter (finite spaces)");
  cmd->add_option("--size-limit", t.size_limit, "Exact solver point limit");
}

Interval parse_interval(const std::string& s) {
  const auto v = parse_reals(s);
  if (v.size() != 2) throw ShapeError("interval must be \"a,b\"");
  return {v[0], v[1]};
}

Outcome run_content(const TargetOptions& t, const GlobalOptions& g,
                    bool measure) {
  const int chosen = !t.space.empty() + !t.cantor.empty() + !t.interval.empty();
  if (chosen != 1) {
    throw ShapeError("give exactly one of --space, --cantor, --interval");
  }
  std::vector<double> schedule;
  if (measure) {
    schedule = parse_reals(g.eps_schedule);
    if (schedule.empty()) throw ShapeError("measure needs --eps-schedule");
  }
  const double tol = g.tol.value_or(kMeasureStabilizationTol);

  if (!t.space.empty()) {
    const FiniteMetricSpace space = io::space_from_json(io::read_json_file(t.space));
    const PointSet subset = parse_subset(space, t.subset);
    const Gauge h = io::gauge_from_json(parse_json_arg(t.gauge));
    const FiniteSolverOptions opts{t.floor, t.size_limit};
    const ContentEstimate e =
        measure ? hausdorff_measure(space, subset, h, schedule, opts, tol)
                : content_exact_finite(space, subset, h, t.eps, opts);
    return {io::to_json(e, &space)};
  }
  if (!t.cantor.empty()) {
    const CantorSpace space = io::cantor_from_json(io::read_json_file(t.cantor));
    const std::vector<Cell> cells = parse_cells(space, t.cells);
    const Gauge h = io::gauge_from_json(parse_json_arg(t.gauge), &space);
    const ContentEstimate e =
        measure ? hausdorff_measure(space, cells, h, schedule, g.max_depth, tol)
                : content_cells(space, cells, h, g.max_depth, t.eps);
    return {io::to_json(e)};
  }
  const Interval iv = parse_interval(t.interval);
  const Gauge h = io::gauge_from_json(parse_json_arg(t.gauge));
  if (h.form() != Gauge::Form::kPower || h.alpha() != 1.0) {
    throw ShapeError("interval mode computes one-dimensional content only; "
                     "use the gauge {\"form\":\"power\",\"alpha\":1}");
  }
  const ContentEstimate e = measure ? hausdorff_measure(iv, schedule, tol)
                                    : content_interval(iv, t.eps);
  return {io::to_json(e)};
}

Outcome run_check(const std::string& path, bool ultrametric,
                  const GlobalOptions& g) {
  const json raw = io::read_json_file(path);
  const auto matrix = raw.at("dist").get<std::vector<std::vector<double>>>();
  const double tol = g.tol.value_or(kDefaultMetricTol);
  const ValidationReport metric = validate_metric(matrix, tol);
  json result = {{"metric", io::to_json(metric)}};
  bool ok = metric.ok();
  if (ultrametric) {
    const ValidationReport ultra = validate_ultrametric(matrix, tol);
    result["ultrametric"] = io::to_json(ultra);
    ok = ok && ultra.ok();
  }
  result["valid"] = ok;
  return {result, ok ? kOk : kCheckFailed};
}

Outcome run_dimension(long n, const std::string& r) {
  const double ratio = parse_real(r);
  const double alpha = solve_similarity_dimension(n, ratio);
  const double residual =
      std::abs(static_cast<double>(n) * std::pow(ratio, alpha) - 1.0);
  return {{{"n", n},
           {"r", io::number(ratio)},
           {"alpha", io::number(alpha)},
           {"residual", residual}}};
}

FunctionSpec function_from_json(const CantorSpace& space, const json& j) {
  const auto family = j.at("family").get<std::string>();
  if (family == "constant") return constant_function(j.value("value", 1.0));
  if (family == "digit") return digit_projection(j.at("level").get<std::size_t>());
  if (family == "indicator") {
    return cell_indicator(space.cell(j.at("cell").get<std::vector<Digit>>()));
  }
  if (family == "expansion") return expansion_value(space, j.value("base", 2.0));
  throw ShapeError("unknown function family \"" + family +
                   "\" (constant, digit, indicator, expansion)");
}

Outcome run_cantor_cells(const std::string& path, std::size_t depth) {
  const CantorSpace space = io::cantor_from_json(io::read_json_file(path));
  json cells = json::array();
  for (const Cell& c : children(space, Cell::root(), depth, 4096)) {
    cells.push_back({{"cell", c.prefix},
                     {"diameter", io::number(cell_diameter(space, c))},
                     {"measure", to_string(cell_measure(space, c))}});
  }
  return {{{"depth", depth}, {"count", cells.size()}, {"cells", std::move(cells)}}};
}

Outcome run_cantor_content(const std::string& path,
                           const std::vector<std::string>& cell_args,
                           const std::string& gauge, const GlobalOptions& g) {
  const CantorSpace space = io::cantor_from_json(io::read_json_file(path));
  const Gauge h = io::gauge_from_json(parse_json_arg(gauge), &space);
  json cells = json::array();
  for (const Cell& c : parse_cells(space, cell_args)) {
    const std::size_t working = std::max(g.max_depth, c.depth() + 1);
    cells.push_back({{"cell", c.prefix},
                     {"value", io::number(exact_cell_content(space, c, h, working))},
                     {"measure", to_string(cell_measure(space, c))}});
  }
  return {{{"exact", true}, {"cells", std::move(cells)}}};
}

Outcome run_cantor_integrate(const std::string& path, const std::string& fn,
                             const GlobalOptions& g) {
  const CantorSpace space = io::cantor_from_json(io::read_json_file(path));
  const FunctionSpec f = function_from_json(space, parse_json_arg(fn));
  const double tol = g.tol.value_or(kDefaultIntegrateTol);
  return {io::to_json(integrate(space, f, tol, g.max_depth, g.seed))};
}

Outcome run_cantor_matrix(const std::string& path, std::size_t depth,
                          const std::string& out_path) {
  const CantorSpace space = io::cantor_from_json(io::read_json_file(path));
  const json matrix = io::to_json(cantor_distance_space(space, depth));
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw ShapeError("cannot write " + out_path);
    out << matrix.dump(2) << "\n";
    return {{{"written", out_path}, {"points", matrix["labels"].size()}}};
  }
  return {matrix};
}

Outcome run_transform(const std::string& path, const std::string& phi_arg,
                      const std::string& out_path, const GlobalOptions& g) {
  const double tol = g.tol.value_or(kDefaultMetricTol);
  const FiniteMetricSpace space = io::space_from_json(io::read_json_file(path), tol);
  TransformSpec phi = io::transform_from_json(parse_json_arg(phi_arg));
  json result;
  const bool ultra = validate_ultrametric(space, tol).ok();
  if (!ultra) {
    const std::vector<double> grid = distance_grid(space);
    result["subadditive_on_distances"] = check_subadditive(phi, grid);
  }
  const TransformedSpace t = transform_space(space, phi, tol);
  const bool metric_ok = validate_metric(t.result, tol).ok();
  const bool ultra_ok = validate_ultrametric(t.result, tol).ok();
  result["base_ultrametric"] = t.base_is_ultrametric;
  result["result_metric"] = metric_ok;
  result["result_ultrametric"] = ultra_ok;
  result["same_ball_structure"] = same_ball_structure(space, t.result, phi);
  if (out_path.empty()) {
    result["space"] = io::to_json(t.result);
  } else {
    std::ofstream out(out_path);
    if (!out) throw ShapeError("cannot write " + out_path);
    out << io::to_json(t.result).dump(2) << "\n";
    result["written"] = out_path;
  }
  const bool ok = metric_ok && (!t.base_is_ultrametric || ultra_ok);
  return {result, ok ? kOk : kCheckFailed};
}

struct LipschitzOptions {
  std::string source;
  std::string target;
  std::string map;
  std::string subset;
  std::string gauge = kDefaultGauge;
  double floor = 0.0;
};

Outcome run_lipschitz(const LipschitzOptions& o, const GlobalOptions& g) {
  FiniteMetricSpace source = io::space_from_json(io::read_json_file(o.source));
  FiniteMetricSpace target = io::space_from_json(io::read_json_file(o.target));
  std::vector<std::size_t> assignment;
  for (const auto& item : split(o.map, ',')) {
    try {
      assignment.push_back(std::stoul(item));
    } catch (const std::logic_error&) {
      throw ShapeError("bad map entry \"" + item + "\"");
    }
  }
  const PointSet subset = parse_subset(source, o.subset);
  const LipschitzMap m(std::move(source), std::move(target), std::move(assignment));
  const Gauge h = io::gauge_from_json(parse_json_arg(o.gauge));
  const std::vector<double> eps = parse_reals(g.eps_schedule);
  FiniteSolverOptions opts;
  opts.diameter_floor = o.floor;
  const ImageContentReport report = check_image_content(m, subset, h, eps, opts);
  json entries = json::array();
  for (const auto& e : report.entries) {
    entries.push_back({{"eps", e.eps ? io::number(*e.eps) : json(nullptr)},
                       {"image_value", io::number(e.image_value)},
                       {"source_value", io::number(e.source_value)},
                       {"holds", e.holds}});
  }
  return {{{"lipschitz_constant", io::number(lipschitz_constant(m))},
           {"rescale_constant", io::number(report.c)},
           {"holds", report.holds()},
           {"entries", std::move(entries)}},
          report.holds() ? kOk : kCheckFailed};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"hcover: Hausdorff content and measure by covering optimization"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_option("--tol", g.tol, "Tolerance (meaning depends on the command)");
  app.add_option("--seed", g.seed, "Seed for randomized sample sets");
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "table"}));
  app.add_option("--max-depth", g.max_depth, "Cell depth bound");
  app.add_option("--eps-schedule", g.eps_schedule,
                 "Comma separated, strictly decreasing eps values");

  std::function<Outcome()> action;

  std::string space_path;
  bool ultrametric = false;
  auto* check = app.add_subcommand("check", "Validate metric axioms");
  check->add_option("--space", space_path, "Space JSON file")->required();
  check->add_flag("--ultrametric", ultrametric, "Also require the ultrametric inequality");
  check->callback([&] { action = [&] { return run_check(space_path, ultrametric, g); }; });

  TargetOptions content_opts;
  auto* content = app.add_subcommand("content", "Hausdorff content (or H_{h,eps} with --eps)");
  add_target_options(content, content_opts);
  content->add_option("--eps", content_opts.eps, "Restrict to eps-coverings");
  content->callback([&] { action = [&] { return run_content(content_opts, g, false); }; });

  TargetOptions measure_opts;
  auto* measure = app.add_subcommand("measure", "Hausdorff measure over --eps-schedule");
  add_target_options(measure, measure_opts);
  measure->callback([&] { action = [&] { return run_content(measure_opts, g, true); }; });

  long dim_n = 0;
  std::string dim_r;
  auto* dimension = app.add_subcommand("dimension", "Solve n r^alpha = 1");
  dimension->add_option("--n", dim_n, "Branching number")->required();
  dimension->add_option("--r", dim_r, "Ratio in (0,1), decimal or p/q")->required();
  dimension->callback([&] { action = [&] { return run_dimension(dim_n, dim_r); }; });

  auto* cantor = app.add_subcommand("cantor", "Cantor sequence space operations");
  cantor->require_subcommand(1);
  std::string cantor_path;
  std::size_t cantor_depth = 0;
  std::vector<std::string> cantor_cells;
  std::string cantor_gauge = R"({"form":"similarity"})";
  std::string function_arg;
  std::string out_path;

  auto* cells = cantor->add_subcommand("cells", "List cells of a given depth");
  cells->add_option("--cantor", cantor_path, "Cantor space JSON file")->required();
  cells->add_option("--depth", cantor_depth, "Cell depth")->required();
  cells->callback([&] { action = [&] { return run_cantor_cells(cantor_path, cantor_depth); }; });

  auto* cell_content = cantor->add_subcommand("content", "Exact content of cells under a self-similar gauge");
  cell_content->add_option("--cantor", cantor_path, "Cantor space JSON file")->required();
  cell_content->add_option("--cell", cantor_cells, "Cell, e.g. 0.1 (repeatable)");
  cell_content->add_option("--gauge", cantor_gauge, "Gauge JSON");
  cell_content->callback([&] {
    action = [&] { return run_cantor_content(cantor_path, cantor_cells, cantor_gauge, g); };
  });

  auto* integ = cantor->add_subcommand("integrate", "Integrate a built-in function family");
  integ->add_option("--cantor", cantor_path, "Cantor space JSON file")->required();
  integ->add_option("--function", function_arg,
                    R"(Function JSON, e.g. {"family":"expansion","base":2})")
      ->required();
  integ->callback([&] { action = [&] { return run_cantor_integrate(cantor_path, function_arg, g); }; });

  auto* matrix = cantor->add_subcommand("matrix", "Distance matrix of the depth-d cells");
  matrix->add_option("--cantor", cantor_path, "Cantor space JSON file")->required();
  matrix->add_option("--depth", cantor_depth, "Cell depth")->required();
  matrix->add_option("--out", out_path, "Write the space JSON here");
  matrix->callback([&] { action = [&] { return run_cantor_matrix(cantor_path, cantor_depth, out_path); }; });

  std::string phi_arg;
  auto* transform = app.add_subcommand("transform", "Apply phi to a metric entrywise");
  transform->add_option("--space", space_path, "Space JSON file")->required();
  transform->add_option("--phi", phi_arg, "Transform JSON")->required();
  transform->add_option("--out", out_path, "Write the transformed space here");
  transform->callback([&] { action = [&] { return run_transform(space_path, phi_arg, out_path, g); }; });

  LipschitzOptions lip;
  auto* lipschitz = app.add_subcommand("lipschitz", "Lipschitz constant and image content bound");
  lipschitz->add_option("--source", lip.source, "Source space JSON")->required();
  lipschitz->add_option("--target", lip.target, "Target space JSON")->required();
  lipschitz->add_option("--map", lip.map, "Image index of each source point, comma separated")->required();
  lipschitz->add_option("--subset", lip.subset, "Source subset E (default: all)");
  lipschitz->add_option("--gauge", lip.gauge, "Gauge JSON");
  lipschitz->add_option("--floor", lip.floor, "Minimum priced diameter on the source");
  lipschitz->callback([&] { action = [&] { return run_lipschitz(lip, g); }; });

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    const Outcome outcome = action();
    emit(outcome.result, g.format, out);
    return outcome.code;
  } catch (const SolverRefusal& e) {
    err << "refused: " << e.what() << "\n";
    return kSolverRefused;
  } catch (const EvaluationError& e) {
    err << "evaluation failed: " << e.what() << "\n";
    return kSolverRefused;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
}

}  // namespace hcover::cli
