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

#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "doctest.h"
#include "hcover/io.hpp"

namespace hcover {
namespace {

using io::json;

const std::string kData = HCOVER_TEST_DATA_DIR;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "hcover");
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

TEST_CASE("content output matches the library byte for byte") {
  const Run r = run({"content", "--space", kData + "/six.json", "--floor", "1"});
  REQUIRE(r.code == cli::kOk);

  const FiniteMetricSpace s = io::space_from_json(io::read_json_file(kData + "/six.json"));
  FiniteSolverOptions opt;
  opt.diameter_floor = 1.0;
  const ContentEstimate e = content_exact_finite(s, s.all(), Gauge::power(1.0), {}, opt);
  CHECK(r.out == io::to_json(e, &s).dump(2) + "\n");
  CHECK(json::parse(r.out)["value"] == 4.0);
}

TEST_CASE("exit codes") {
  CHECK(run({"check", "--space", kData + "/line4.json"}).code == cli::kOk);
  const Run broken = run({"check", "--space", kData + "/broken.json"});
  CHECK(broken.code == cli::kCheckFailed);
  CHECK(json::parse(broken.out)["metric"]["violations"][0]["axiom"] == "triangle");

  CHECK(run({"content"}).code == cli::kUsageError);
  CHECK(run({"content", "--space", kData + "/missing.json"}).code == cli::kUsageError);
  CHECK(run({"bogus"}).code == cli::kUsageError);
  CHECK(run({"--format", "xml", "dimension", "--n", "2", "--r", "0.5"}).code ==
        cli::kUsageError);
  CHECK(run({"content", "--space", kData + "/six.json", "--size-limit", "3"}).code ==
        cli::kSolverRefused);
  CHECK(run({"cantor", "content", "--cantor", kData + "/cantor_binary.json", "--gauge",
             R"({"form":"power","alpha":2})"})
            .code == cli::kSolverRefused);
}

TEST_CASE("dimension") {
  const Run r = run({"dimension", "--n", "2", "--r", "1/3"});
  REQUIRE(r.code == cli::kOk);
  const json j = json::parse(r.out);
  CHECK(j["alpha"] == 0.630929753571);
  CHECK(j["residual"].get<double>() < 1e-12);

  const Run csv = run({"--format", "csv", "dimension", "--n", "2", "--r", "0.5"});
  CHECK(csv.out.rfind("alpha,n,r,residual\n1.0,2,0.5,", 0) == 0);
  const Run table = run({"--format", "table", "dimension", "--n", "4", "--r", "0.5"});
  CHECK(table.out.find("alpha     2.0\n") != std::string::npos);
}

TEST_CASE("measure and premeasure") {
  const Run p = run({"content", "--space", kData + "/line4.json", "--floor", "1", "--eps", "0.9"});
  CHECK(json::parse(p.out)["value"] == 4.0);
  CHECK(json::parse(p.out)["mode"] == "premeasure");

  const Run m = run({"--eps-schedule", "4,1.5,0.9", "measure", "--space",
                     kData + "/line4.json", "--floor", "1"});
  const json mj = json::parse(m.out);
  CHECK(mj["trace"] == json::parse("[2.0, 2.0, 4.0]"));
  CHECK(mj["value"] == 4.0);

  const Run iv = run({"content", "--interval", "0.5,2"});
  CHECK(json::parse(iv.out)["value"] == 1.5);
  CHECK(run({"content", "--interval", "0,1", "--gauge", R"({"form":"power","alpha":2})"})
            .code == cli::kUsageError);
  CHECK(run({"measure", "--space", kData + "/line4.json"}).code == cli::kUsageError);
}

TEST_CASE("cantor subcommands") {
  const std::string middle = kData + "/cantor_middle_third.json";
  const Run cells = run({"cantor", "cells", "--cantor", middle, "--depth", "2"});
  const json cj = json::parse(cells.out);
  CHECK(cj["count"] == 4);
  CHECK(cj["cells"][3]["cell"] == json::parse("[1, 1]"));
  CHECK(cj["cells"][3]["measure"] == "1/4");

  const Run content = run({"cantor", "content", "--cantor", middle, "--cell", "0.1"});
  REQUIRE(content.code == cli::kOk);
  CHECK(json::parse(content.out)["cells"][0]["value"] == 0.25);

  const Run cover = run({"--max-depth", "3", "content", "--cantor", kData + "/cantor_binary.json",
                         "--gauge", R"({"form":"power","alpha":2})"});
  CHECK(json::parse(cover.out)["value"] == 0.125);

  const Run integ = run({"cantor", "integrate", "--cantor", kData + "/cantor_binary.json",
                         "--function", R"({"family":"expansion"})", "--max-depth", "24"});
  REQUIRE(integ.code == cli::kOk);
  const json ij = json::parse(integ.out);
  CHECK(ij["achieved_depth"] == 20);
  CHECK(ij["certified"] == true);

  const Run matrix = run({"cantor", "matrix", "--cantor", middle, "--depth", "2"});
  const json mj = json::parse(matrix.out);
  CHECK(mj["labels"] == json::parse(R"(["0.0", "0.1", "1.0", "1.1"])"));
  CHECK(mj["dist"][0][3] == 1.0);
  CHECK(mj["dist"][0][1] == 0.333333333333);
}

TEST_CASE("transform and lipschitz") {
  const Run sq = run({"transform", "--space", kData + "/line4.json", "--phi",
                      R"({"form":"power","a":2})"});
  CHECK(sq.code == cli::kSolverRefused);
  const Run root = run({"transform", "--space", kData + "/line4.json", "--phi",
                        R"({"form":"power","a":0.5})"});
  REQUIRE(root.code == cli::kOk);
  const json rj = json::parse(root.out);
  CHECK(rj["subadditive_on_distances"] == true);
  CHECK(rj["result_metric"] == true);
  CHECK(rj["same_ball_structure"] == true);

  const Run lip = run({"--eps-schedule", "1.5", "lipschitz", "--source", kData + "/line4.json",
                       "--target", kData + "/six.json", "--map", "0,1,2,2", "--floor", "1"});
  REQUIRE(lip.code == cli::kOk);
  const json lj = json::parse(lip.out);
  CHECK(lj["lipschitz_constant"] == 1.0);
  CHECK(lj["entries"].size() == 2);
}

}  // namespace
}  // namespace hcover
