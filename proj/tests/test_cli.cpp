/*
 * Copyright 2026 The ghnets Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "ghnets/cli.hpp"
#include "ghnets/io.hpp"

namespace ghnets {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("ghnets_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

  static std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  int call(std::vector<std::string> args) {
    out_.str("");
    err_.str("");
    return cli::run(args, out_, err_);
  }

  fs::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

TEST_F(CliTest, DistH) {
  const auto a = write("a.json", R"({"kind": "points", "coordinates": ["0"]})");
  const auto b = write("b.json", R"({"kind": "points", "coordinates": ["0", "2"]})");
  EXPECT_EQ(call({"dist-h", a, b}), 0);
  EXPECT_EQ(out_.str(), "2\n");
  const auto w = write("w.json", R"({"kind": "window", "lo": "-1", "hi": "1/2"})");
  EXPECT_EQ(call({"dist-h", a, w}), 0);
  EXPECT_EQ(out_.str(), "1\n");
}

TEST_F(CliTest, DistGhWithCertificate) {
  const auto x = write("x.json", R"({"kind": "points", "coordinates": ["0", "1"]})");
  const auto y = write("y.json", R"({"kind": "points", "coordinates": ["0", "2"]})");
  const std::string cert = (dir_ / "cert.json").string();
  EXPECT_EQ(call({"dist-gh", x, y, "--certificate", cert}), 0);
  EXPECT_EQ(out_.str(),
            "status exact\nmethod exhaustive\nlower 1/2\nupper 1/2\nexact 1/2\ndistortion 1\nwitness 0:0 1:1\n"
            "correspondence 0:0 1:1\ncertificate " + cert + "\n");
  EXPECT_EQ(io::recheck_certificate(io::parse_document(slurp(cert), cert)), "");

  EXPECT_EQ(call({"dist-gh", x, y, "--method", "bb"}), 0);
  EXPECT_NE(out_.str().find("exact 1/2\n"), std::string::npos);
  EXPECT_NE(out_.str().find("method branch-and-bound\n"), std::string::npos);
}

TEST_F(CliTest, DistGhBudgetExhaustionIsFlagged) {
  std::string rows;
  // Distances 1 and 2 only: every triangle holds, nothing is line-embedded.
  const int n = 6;
  for (int i = 0; i < n; ++i) {
    rows += i ? ", [" : "[";
    for (int j = 0; j < n; ++j) rows += std::string(j ? ", " : "") + "\"" + (i == j ? "0" : ((i + j) % 3 ? "1" : "2")) + "\"";
    rows += "]";
  }
  const auto x = write("x.json", R"({"kind": "matrix", "distances": [)" + rows + "]}");
  const auto y = write("y.json", R"({"kind": "grid", "lo": "0", "hi": "5", "step": "1"})");
  EXPECT_EQ(call({"dist-gh", x, y, "--method", "bb", "--budget", "1"}), 0);
  EXPECT_NE(out_.str().find("status bounds-only"), std::string::npos) << out_.str();
  EXPECT_NE(out_.str().find("exact none\n"), std::string::npos);
}

TEST_F(CliTest, TraceEndsOnTheWindow) {
  const auto x = write("x.json", R"({"kind": "points", "coordinates": ["0", "3"]})");
  EXPECT_EQ(call({"trace", x, "--grid", "0,1/4,1/2,3/4,1", "--window", "0,4"}), 0);
  const std::string csv = out_.str();
  EXPECT_EQ(csv.substr(0, csv.find('\n')),
            "lam,f_lam,num_intervals,d_H_to_window,step_d_H,certified_bound,lam_approx,d_H_to_window_approx");
  EXPECT_NE(csv.find("\n1,inf,1,0,"), std::string::npos);
  const std::string path = (dir_ / "t.csv").string();
  EXPECT_EQ(call({"trace", x, "--grid", "0,1/4,1/2,3/4,1", "--window", "0,4", "-o", path}), 0);
  EXPECT_EQ(out_.str(), "");
  EXPECT_EQ(slurp(path), csv);
}

TEST_F(CliTest, Contract) {
  const auto x = write("x.json", R"({"kind": "points", "coordinates": ["0", "3"]})");
  EXPECT_EQ(call({"contract", x, "--lam", "1/2", "--window", "-1,4"}), 0);
  EXPECT_EQ(io::parse_space(out_.str()), io::Space(IntervalUnion({{-1, 1}, {2, 4}})));
}

TEST_F(CliTest, ParseErrorsExitWithTwoAndALocation) {
  const auto bad = write("bad.json", R"({"kind": "points", "coordinates": ["0", "1/0"]})");
  const auto ok = write("ok.json", R"({"kind": "points", "coordinates": ["0"]})");
  EXPECT_EQ(call({"dist-h", bad, ok}), 2);
  EXPECT_NE(err_.str().find(bad + ".coordinates[1]"), std::string::npos) << err_.str();
  const auto broken = write("broken.json", "{\"kind\": ");
  EXPECT_EQ(call({"dist-h", broken, ok}), 2);
  EXPECT_NE(err_.str().find("byte"), std::string::npos);
  EXPECT_EQ(call({"dist-h", ok}), 2);
  EXPECT_EQ(call({"trace", ok, "--grid", "0,zz"}), 2);
  EXPECT_NE(err_.str().find("--grid"), std::string::npos);
  EXPECT_EQ(call({"trace", ok, "--grid", "1/2,1/4"}), 2);
  EXPECT_EQ(call({"contract", ok, "--lam", "2"}), 2);
  EXPECT_EQ(call({"verify", "no-such-suite"}), 2);
  EXPECT_EQ(call({"experiment", "nothing"}), 2);
  EXPECT_EQ(call({}), 2);
}

TEST_F(CliTest, VerifyAndExperiments) {
  EXPECT_EQ(call({"verify", "ultrametric-hausdorff", "continuity", "--cases", "30", "--seed", "4"}), 0);
  const io::Json doc = io::parse_document(out_.str(), "out");
  EXPECT_EQ(doc["status"], "pass");
  ASSERT_EQ(doc["reports"].size(), 2U);
  EXPECT_EQ(doc["reports"][1]["suite"], "continuity");
  EXPECT_EQ(doc["reports"][1]["seed"], 4);

  EXPECT_EQ(call({"experiment", "geometric-progression", "--k", "3"}), 0);
  EXPECT_EQ(out_.str(), "n,lower_2dgh,upper_2dgh,exact_2dgh,nodes\n1,0,0,0,2\n2,6,6,6,18\n3,24,24,24,186\n");
  EXPECT_EQ(call({"experiment", "homothety", "--lam", "2", "--sizes", "1"}), 0);
  EXPECT_EQ(out_.str(), "n,lower_2dgh,upper_2dgh,exact_2dgh,nodes\n1,1,1,1,0\n");
  EXPECT_EQ(call({"experiment", "lambda-bound-search", "--cases", "40"}), 0);
  EXPECT_EQ(io::parse_document(out_.str(), "out")["status"], "report");
}

TEST_F(CliTest, RerunsAreByteIdentical) {
  const auto x = write("x.json", R"({"kind": "points", "coordinates": ["0", "7/3", "5"]})");
  const auto y = write("y.json", R"({"kind": "points", "coordinates": ["1", "2", "9/2", "6"]})");
  const std::vector<std::vector<std::string>> commands{
      {"dist-h", x, y},
      {"dist-gh", x, y},
      {"contract", x, "--lam", "1/5"},
      {"trace", x, "--grid", "0,1/8,1/2,1"},
      {"verify", "all", "--cases", "20", "--seed", "11"},
      {"experiment", "homothety", "--sizes", "2,3,4"},
  };
  for (const auto& c : commands) {
    ASSERT_EQ(call(c), 0) << c[0];
    const std::string first = out_.str();
    ASSERT_EQ(call(c), 0);
    EXPECT_EQ(out_.str(), first) << c[0];
  }
}

}  // namespace
}  // namespace ghnets
