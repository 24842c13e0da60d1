// Copyright 2026 The nmrlogic Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "nmrlogic/cli.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "gtest/gtest.h"
#include "json.hpp"
#include "nmrlogic/spin_sim.hpp"

using nlohmann::json;
using namespace nmrlogic;

namespace {

constexpr double kPi = std::numbers::pi;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string sequence(const char* name) { return std::string(NMRLOGIC_DATA_DIR) + "/sequences/" + name; }

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    for (std::string cell; std::getline(ls, cell, ',');) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

}  // namespace

TEST(cli, classify_radix3_table) {
  const auto r = run({"classify", "--radix", "3"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("classes: 84"), std::string::npos);
  EXPECT_NE(r.out.find("(agrees)"), std::string::npos);
  EXPECT_NE(r.out.find("self-check: ok"), std::string::npos);
}

TEST(cli, classify_radix2) {
  const auto r = run({"classify", "--radix", "2"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("classes: 4"), std::string::npos);
  EXPECT_NE(r.out.find("binary pc partition matches npn: yes"), std::string::npos);
}

TEST(cli, classify_json_document) {
  const auto r = run({"classify", "--radix", "3", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = json::parse(r.out);
  EXPECT_EQ(doc["class_count"], 84);
  ASSERT_EQ(doc["classes"].size(), 84u);
  std::size_t total = 0;
  for (const auto& c : doc["classes"]) total += c["size"].get<std::size_t>();
  EXPECT_EQ(total, 19683u);
  EXPECT_EQ(doc["burnside"]["class_count"], 84);
  EXPECT_TRUE(doc["checks"]["ok"].get<bool>());
  std::size_t pc_npn = 0;
  for (const auto& p : doc["pc"]["classes"]) pc_npn += p["npn_classes"].size();
  EXPECT_EQ(pc_npn, 84u);
  EXPECT_EQ(doc["classes"][0]["table"], json::parse("[[-1,-1,-1],[-1,-1,-1],[-1,-1,-1]]"));
}

TEST(cli, classify_is_deterministic) {
  const auto a = run({"classify", "--radix", "3", "--format", "json"});
  const auto b = run({"classify", "--radix", "3", "--format", "json"});
  EXPECT_EQ(a.out, b.out);
  const auto c = run({"classify", "--radix", "3", "--format", "csv"});
  EXPECT_EQ(parse_csv(c.out).size(), 85u);
}

TEST(cli, classify_writes_file) {
  const auto path = std::filesystem::temp_directory_path() / "nmrlogic_classify_test.json";
  const auto r = run({"classify", "--radix", "2", "--format", "json", "--out", path.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  EXPECT_EQ(json::parse(in)["class_count"], 4);
  std::filesystem::remove(path);

  EXPECT_EQ(run({"classify", "--out", "/nonexistent/dir/out.txt"}).code, 2);
}

TEST(cli, usage_errors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"classify", "--radix", "4"}).code, 2);
  EXPECT_EQ(run({"classify", "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"simulate", "--sequence", sequence("single_pulse.json")}).code, 2);
  EXPECT_EQ(run({"simulate", "--sequence", sequence("single_pulse.json"), "--grid-a", "", "--grid-b", "1"}).code, 2);
  EXPECT_EQ(run({"simulate", "--sequence", "/nonexistent.json", "--grid-a", "1,2", "--grid-b", "1"}).code, 2);
  EXPECT_EQ(run({"classify", "--help"}).code, 0);
}

TEST(cli, simulate_malformed_file) {
  const auto path = std::filesystem::temp_directory_path() / "nmrlogic_bad_sequence.json";
  std::ofstream(path) << R"({"peaks": [{"label": "A", "offset_rad_s": 0}], "sequence": [{"type": "wobble"}]})";
  const auto r = run({"simulate", "--sequence", path.string(), "--grid-a", "0,1", "--grid-b", "0,1"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("wobble"), std::string::npos);
  std::filesystem::remove(path);
}

TEST(cli, simulate_single_pulse_surface) {
  const auto r = run({"simulate", "--sequence", sequence("single_pulse.json"), "--grid-a",
                      "0:6.283185307179586:100", "--grid-b", "0:6.283185307179586:100"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = parse_csv(r.out);
  ASSERT_EQ(rows.size(), 101u);
  ASSERT_EQ(rows[0].size(), 101u);

  const auto step = 2.0 * kPi / 99.0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    for (std::size_t j = 1; j < rows[i].size(); ++j) {
      const double expected = std::sin(step * (i - 1)) * std::sin(step * (j - 1));
      ASSERT_NEAR(std::stod(rows[i][j]), expected, 1e-11);
    }
  }

  const auto peak = run({"simulate", "--sequence", sequence("single_pulse.json"), "--grid-a", "1.5707963267948966",
                         "--grid-b", "1.5707963267948966"});
  EXPECT_EQ(parse_csv(peak.out)[1][1], "1");
}

TEST(cli, simulate_two_pulse_grid) {
  const auto r = run({"simulate", "--sequence", sequence("two_pulse.json"), "--grid-a", "0:6.283185307179586:10",
                      "--grid-b", "0:6.283185307179586:10"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = parse_csv(r.out);
  ASSERT_EQ(rows.size(), 11u);
  const auto grid = two_pulse_grid(10, 3.0 * kPi / 2.0, kPi / 2.0);
  for (int i = 0; i < 10; ++i) {
    for (int j = 0; j < 10; ++j) EXPECT_NEAR(std::stod(rows[i + 1][j + 1]), grid[i][j], 1e-11);
  }
}

TEST(cli, search_multiplication) {
  const auto r = run({"search", "--sequence", sequence("single_pulse.json"), "--grid-a", "0:5.497787143782138:8",
                      "--grid-b", "0:5.497787143782138:8", "--target", "multiplication", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = json::parse(r.out);
  EXPECT_GT(doc["hit_count"].get<int>(), 0);
  bool exact = false;
  for (const auto& h : doc["hits"]) {
    const auto a = h["triple_a"].get<std::vector<double>>();
    exact = exact || (std::abs(a[0] - kPi / 2.0) < 1e-9 && std::abs(a[1] - kPi) < 1e-9 &&
                      std::abs(a[2] - 3.0 * kPi / 2.0) < 1e-9);
  }
  EXPECT_TRUE(exact);
}

TEST(cli, search_unreachable_target) {
  const auto r = run({"search", "--sequence", sequence("single_pulse.json"), "--grid-a", "0:5.890486225480862:16",
                      "--grid-b", "0:5.890486225480862:16", "--target", "selective-delay"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("hits: 0"), std::string::npos);
}

TEST(cli, search_all_and_bad_target) {
  const auto r = run({"search", "--sequence", sequence("single_pulse.json"), "--grid-a", "0:5.497787143782138:8",
                      "--grid-b", "0:5.497787143782138:8", "--target", "all", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(parse_csv(r.out).size(), 85u);
  EXPECT_EQ(run({"search", "--sequence", sequence("single_pulse.json"), "--grid-a", "0,1,2", "--grid-b", "0,1,2",
                 "--target", "division"})
                .code,
            2);
  EXPECT_EQ(run({"search", "--sequence", sequence("single_pulse.json"), "--grid-a", "0,1", "--grid-b", "0,1,2"}).code,
            2);
}

TEST(cli, complex_mul) {
  const auto r = run({"complex", "--format", "json", "mul", "1", "0", "0.5", "1.5707963"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = json::parse(r.out);
  EXPECT_NEAR(doc["product"]["r"].get<double>(), 0.5, 1e-15);
  EXPECT_NEAR(doc["product"]["theta"].get<double>(), 1.5707963, 1e-15);
  for (const auto& t : doc["roundtrip"]) {
    EXPECT_LT(t["magnitude_error"].get<double>(), 1e-9);
    EXPECT_LT(t["phase_error"].get<double>(), 1e-9);
  }
}

TEST(cli, complex_mul_annihilator) {
  const auto r = run({"complex", "mul", "0", "0", "1", "3.14159"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("product:   r = 0  theta = -"), std::string::npos);
}

TEST(cli, complex_truth) {
  const auto r = run({"complex", "truth", "1.5707963"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("ptruth: 0.500000008529"), std::string::npos);
}

TEST(cli, complex_errors) {
  EXPECT_EQ(run({"complex", "mul", "1.5", "0", "0.5", "0"}).code, 2);
  EXPECT_EQ(run({"complex", "--alpha", "1", "mul", "1", "0", "0.5", "0"}).code, 2);
  EXPECT_EQ(run({"complex", "mul", "1", "0"}).code, 2);
}

TEST(cli, parse_grid_forms) {
  EXPECT_EQ(cli::parse_grid("1,2.5,-3"), (std::vector<double>{1.0, 2.5, -3.0}));
  const auto r = cli::parse_grid("0:1:5");
  ASSERT_EQ(r.size(), 5u);
  EXPECT_EQ(r[2], 0.5);
  EXPECT_EQ(r.back(), 1.0);
  EXPECT_THROW(cli::parse_grid(""), std::invalid_argument);
  EXPECT_THROW(cli::parse_grid("1,,2"), std::invalid_argument);
  EXPECT_THROW(cli::parse_grid("0:1:1"), std::invalid_argument);
  EXPECT_THROW(cli::parse_grid("a,b"), std::invalid_argument);
}

TEST(cli, format_real) {
  EXPECT_EQ(cli::format_real(-0.0), "0");
  EXPECT_EQ(cli::format_real(1.0), "1");
  EXPECT_EQ(cli::format_real(kPi), "3.14159265359");
}
