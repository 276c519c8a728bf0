// Copyright 2026 The nlqubit Authors
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

#include "commands.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

namespace nlqubit::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

double cell(const std::vector<std::vector<std::string>>& rows, std::size_t row,
            const std::string& column) {
  for (std::size_t i = 0; i < rows[0].size(); ++i) {
    if (rows[0][i] == column) return std::stod(rows[row][i]);
  }
  ADD_FAILURE() << "missing column " << column;
  return std::nan("");
}

TEST(CliTest, RotationRow) {
  const Result r = invoke({"rotation", "--delta", "1.5707963", "--beta", "1.0471976", "--schemes",
                           "rho3,rho1,sigma1"});
  ASSERT_EQ(r.code, kSuccess) << r.err;
  const auto rows = parse_csv(r.out);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"abscissa", "delta", "beta", "rho3", "rho1",
                                               "sigma1"}));
  EXPECT_NEAR(cell(rows, 1, "rho3"), 0.58333, 1e-4);
  EXPECT_NEAR(cell(rows, 1, "rho1"), 0.6111, 1e-4);
  EXPECT_NEAR(cell(rows, 1, "sigma1"), 0.666667, 1e-6);
}

TEST(CliTest, RotationBetaSweepEndpoints) {
  const Result r = invoke({"rotation", "--sweep-beta", "0:3.14159:9", "--delta", "1.5707963",
                           "--schemes", "quantum_optimal"});
  ASSERT_EQ(r.code, kSuccess) << r.err;
  const auto rows = parse_csv(r.out);
  ASSERT_EQ(rows.size(), 10u);
  EXPECT_EQ(rows[0].back(), "regime");
  EXPECT_NEAR(cell(rows, 1, "quantum_optimal"), 1.0, 1e-9);
  EXPECT_NEAR(cell(rows, 9, "quantum_optimal"), 1.0, 1e-9);
  EXPECT_NEAR(cell(rows, 1, "beta"), 0.0, 0.0);
  EXPECT_NEAR(cell(rows, 9, "beta"), 3.14159, 1e-12);
}

TEST(CliTest, ValidationFailuresExitTwoAndNameTheFlag) {
  struct Case {
    std::vector<std::string> args;
    std::string flag;
  };
  const std::vector<Case> cases = {
      {{"rotation", "--delta", "-1", "--beta", "0.5"}, "--delta"},
      {{"rotation", "--delta", "1"}, "--beta"},
      {{"orthog", "--delta", "2.0"}, "--delta"},
      {{"orthog", "--sweep-delta", "0:2:5"}, "--sweep-delta"},
      {{"orthog", "--sweep-delta", "0:1"}, "--sweep-delta"},
      {{"orthog", "--sweep-delta", "1:0:5"}, "--sweep-delta"},
      {{"orthog", "--delta", "1", "--schemes", "rho3"}, "--schemes"},
      {{"orthog", "--delta", "1", "--schemes", "bogus"}, "--schemes"},
      {{"orthog", "--delta", "1", "--quad-order", "2"}, "--quad-order"},
      {{"orthog", "--delta", "1", "--format", "xml"}, "--format"},
      {{"orthog", "--delta", "abc"}, "--delta"},
      {{"general", "--delta", "1"}, "--alpha"},
      {{"general", "--alpha", "1", "--delta", "1", "--crossovers"}, "--crossovers"},
      {{"rotation", "--delta", "1", "--sweep-delta", "0:1:3", "--beta", "1"}, "--delta"},
  };
  for (const auto& c : cases) {
    const Result r = invoke(c.args);
    EXPECT_EQ(r.code, kUsageError) << c.args[1];
    EXPECT_NE(r.err.find(c.flag), std::string::npos) << r.err;
  }
  EXPECT_EQ(invoke({}).code, kUsageError);
  EXPECT_EQ(invoke({"spiral"}).code, kUsageError);
}

TEST(CliTest, HelpExitsZero) {
  const Result r = invoke({"--help"});
  EXPECT_EQ(r.code, kSuccess);
  EXPECT_NE(r.out.find("rotation"), std::string::npos);
  EXPECT_EQ(invoke({"general", "--help"}).code, kSuccess);
}

TEST(CliTest, OrthogValues) {
  const Result half = invoke({"orthog", "--delta", "1.5707963", "--schemes", "quantum_optimal"});
  ASSERT_EQ(half.code, kSuccess) << half.err;
  EXPECT_NEAR(cell(parse_csv(half.out), 1, "quantum_optimal"), 2.0 / 3.0, 1e-6);
  const Result zero = invoke({"orthog", "--delta", "0", "--schemes", "quantum_optimal"});
  ASSERT_EQ(zero.code, kSuccess) << zero.err;
  EXPECT_NEAR(cell(parse_csv(zero.out), 1, "quantum_optimal"), 1.0, 1e-12);
}

TEST(CliTest, OrthogCrossovers) {
  const Result r = invoke({"orthog", "--crossovers"});
  ASSERT_EQ(r.code, kSuccess) << r.err;
  const auto rows = parse_csv(r.out);
  ASSERT_EQ(rows[0], (std::vector<std::string>{"kind", "from", "to", "location"}));
  bool quantum = false;
  bool measurement = false;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double at = std::stod(rows[i][3]);
    if (rows[i][1] == "identity" && rows[i][2] == "bit_flip") {
      quantum = true;
      EXPECT_NEAR(at, 0.932197, 1e-3);
    }
    if (rows[i][1] == "rho1" && rows[i][2] == "sigma2") {
      measurement = true;
      EXPECT_NEAR(at, 0.82, 2e-2);
    }
  }
  EXPECT_TRUE(quantum);
  EXPECT_TRUE(measurement);
}

TEST(CliTest, GeneralSwitchesAlongDelta) {
  const Result r = invoke({"general", "--alpha", "2.0943951", "--sweep-delta", "0:3.14159:97",
                           "--schemes", "rho1,rho2,sigma1,sigma2"});
  ASSERT_EQ(r.code, kSuccess) << r.err;
  const auto rows = parse_csv(r.out);
  ASSERT_EQ(rows.size(), 98u);
  std::vector<double> switches;
  std::string previous;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    std::string best;
    double best_value = -1.0;
    for (const char* s : {"rho1", "rho2", "sigma1", "sigma2"}) {
      if (cell(rows, i, s) > best_value + 1e-9) {
        best_value = cell(rows, i, s);
        best = s;
      }
    }
    if (!previous.empty() && best != previous) switches.push_back(cell(rows, i, "delta"));
    previous = best;
  }
  ASSERT_EQ(switches.size(), 2u);
  EXPECT_NEAR(switches[0], 1.05, 5e-2);
  EXPECT_NEAR(switches[1], 2.26, 5e-2);
}

TEST(CliTest, CompareUniversal) {
  const Result r = invoke({"general", "--delta", "3.14159", "--sweep-alpha", "0:3.14159:13",
                           "--schemes", "quantum_optimal", "--compare-universal"});
  ASSERT_EQ(r.code, kSuccess) << r.err;
  const auto rows = parse_csv(r.out);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double alpha = cell(rows, i, "alpha");
    const double opt = cell(rows, i, "quantum_optimal");
    const double universal = cell(rows, i, "universal");
    EXPECT_NEAR(universal, std::pow(std::cos(alpha / 2), 2), 1e-11);
    if (alpha < 0.70) EXPECT_NEAR(opt, universal, 1e-8);
    if (alpha > 1.0) EXPECT_GT(opt, universal + 1e-4);
  }
}

TEST(CliTest, GeneralTrivial) {
  const Result r = invoke({"general", "--alpha", "0", "--delta", "3.14159", "--schemes",
                           "quantum_optimal"});
  ASSERT_EQ(r.code, kSuccess) << r.err;
  EXPECT_NEAR(cell(parse_csv(r.out), 1, "quantum_optimal"), 1.0, 1e-12);
}

TEST(CliTest, BaselineDefaultSweep) {
  const Result r = invoke({"baseline"});
  ASSERT_EQ(r.code, kSuccess) << r.err;
  const auto rows = parse_csv(r.out);
  ASSERT_EQ(rows.size(), 98u);
  EXPECT_NEAR(cell(rows, 1, "sigma1"), 2.0 / 3.0, 1e-9);
  EXPECT_NEAR(cell(rows, 97, "sigma2"), 2.0 / 3.0, 1e-9);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    EXPECT_NEAR(cell(rows, i, "sigma1"), cell(rows, 98 - i, "sigma2"), 1e-9);
  }
}

TEST(CliTest, JsonMirrorsCsv) {
  const std::vector<std::string> base = {"orthog", "--sweep-delta", "0:1.5:4"};
  auto csv_args = base;
  auto json_args = base;
  json_args.insert(json_args.end(), {"--format", "json"});
  const Result csv = invoke(csv_args);
  const Result json = invoke(json_args);
  ASSERT_EQ(csv.code, kSuccess);
  ASSERT_EQ(json.code, kSuccess);
  const auto rows = parse_csv(csv.out);
  const auto doc = nlohmann::ordered_json::parse(json.out);
  ASSERT_TRUE(doc.is_array());
  ASSERT_EQ(doc.size(), rows.size() - 1);
  for (std::size_t i = 0; i < doc.size(); ++i) {
    std::size_t k = 0;
    for (const auto& [key, value] : doc[i].items()) {
      EXPECT_EQ(key, rows[0][k]);
      if (value.is_number()) {
        EXPECT_EQ(value.get<double>(), std::stod(rows[i + 1][k]));
      } else {
        EXPECT_EQ(value.get<std::string>(), rows[i + 1][k]);
      }
      ++k;
    }
  }
}

TEST(CliTest, ByteIdenticalReruns) {
  const std::vector<std::string> args = {"rotation", "--sweep-delta", "0:3.14159:17", "--beta",
                                         "1.0471976"};
  const Result a = invoke(args);
  const Result b = invoke(args);
  ASSERT_EQ(a.code, kSuccess);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out.find('\r'), std::string::npos);
}

TEST(CliTest, WritesOutputFile) {
  const auto path = std::filesystem::temp_directory_path() / "nlqubit_cli_test.csv";
  const Result r = invoke({"baseline", "--alpha", "0", "--output", path.string()});
  ASSERT_EQ(r.code, kSuccess) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::stringstream content;
  content << in.rdbuf();
  EXPECT_EQ(content.str(), "abscissa,alpha,sigma1,sigma2\n0,0,0.666666666667,0.333333333333\n");
  std::filesystem::remove(path);
  EXPECT_EQ(invoke({"baseline", "--alpha", "0", "--output", "/nonexistent/dir/x.csv"}).code,
            kUsageError);
}

TEST(ParseTest, SweepRangeAndFormatting) {
  const SweepRange r = parse_sweep_range("0:3.5:7");
  EXPECT_EQ(r.lo, 0.0);
  EXPECT_EQ(r.hi, 3.5);
  EXPECT_EQ(r.n, 7);
  EXPECT_THROW(parse_sweep_range("0:1:1"), std::invalid_argument);
  EXPECT_THROW(parse_sweep_range("0:1:2.5"), std::invalid_argument);
  EXPECT_THROW(parse_sweep_range("0:nan:3"), std::invalid_argument);
  EXPECT_EQ(format_value(-0.0), "0");
  EXPECT_EQ(format_value(2.0 / 3.0), "0.666666666667");
  EXPECT_EQ(parse_scheme_list("rho1,quantum_optimal").size(), 2u);
  EXPECT_THROW(parse_scheme_list("rho1,,rho2"), std::invalid_argument);
}

}  // namespace
}  // namespace nlqubit::cli
