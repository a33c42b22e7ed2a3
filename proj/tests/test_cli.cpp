// Copyright 2026 The fockchan Authors
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

#include "cli.hpp"

#include "gtest/gtest.h"

#include <nlohmann/json.hpp>

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "validate.hpp"

using namespace fockchan;
using namespace fockchan::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) out.push_back(line);
  return out;
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream is(line);
  for (std::string cell; std::getline(is, cell, ',');) out.push_back(cell);
  return out;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(format_double, round_trip) {
  EXPECT_EQ(format_double(1.0), "1");
  EXPECT_EQ(format_double(-0.25), "-0.25");
  EXPECT_EQ(format_double(0.1), "0.1");
  const double x = 0.1 + 0.2;
  EXPECT_EQ(std::stod(format_double(x)), x);
}

TEST(check_config, rejects_bad_values) {
  RunConfig c;
  c.command = "witness";
  c.kappa = 0.5;
  c.noise = 0.0;
  EXPECT_NO_THROW(check_config(c));
  c.n = 0;
  EXPECT_THROW(check_config(c), UsageError);
  c.n = 3;
  c.tol = -1.0;
  EXPECT_THROW(check_config(c), UsageError);
}

TEST(cli_witness, identity_channel_csv) {
  const Result r = invoke({"witness", "--state", "noon", "--n", "5", "--channel", "att", "--kappa", "1", "--a", "0"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0], "family,n,kind,kappa,a,index,delta,entangled,x1,x2,x3,x4,x5");
  const auto cells = split(rows[1]);
  EXPECT_EQ(cells[5], "delta1");
  EXPECT_EQ(std::stod(cells[6]), -0.25);
  EXPECT_EQ(cells[7], "true");
}

TEST(cli_witness, json_and_full_ppt) {
  const Result r = invoke({"witness", "--state", "pnes", "--n", "5", "--channel", "amp", "--kappa", "1.2", "--a", "0",
                           "--format", "json", "--full-ppt"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["index"], "delta4");
  EXPECT_LT(j["delta"].get<double>(), 0.0);
  EXPECT_LT(j["full_ppt_min_eigenvalue"].get<double>(), 0.0);
  EXPECT_TRUE(j["entangled"].get<bool>());
}

TEST(cli_witness, separable_point) {
  const Result r = invoke({"witness", "--state", "noon", "--n", "1", "--channel", "att", "--kappa", "0.5", "--a", "3"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_EQ(split(lines(r.out)[1])[7], "false");
}

TEST(cli_errors, exit_codes) {
  const Result domain =
      invoke({"witness", "--state", "noon", "--n", "5", "--channel", "att", "--kappa", "1.3", "--a", "0"});
  EXPECT_EQ(domain.code, kExitUsage);
  EXPECT_EQ(domain.err.rfind("error: domain:", 0), 0u) << domain.err;
  EXPECT_EQ(lines(domain.err).size(), 1u);

  EXPECT_EQ(invoke({"witness", "--state", "fock", "--kappa", "0.5", "--a", "0"}).code, kExitUsage);
  EXPECT_EQ(invoke({"witness", "--kappa", "0.5"}).code, kExitUsage);
  EXPECT_EQ(invoke({"figure", "--id", "7"}).code, kExitUsage);
  EXPECT_EQ(invoke({"bogus"}).code, kExitUsage);
  EXPECT_EQ(invoke({"--help"}).code, kExitOk);
  EXPECT_EQ(invoke({"witness", "--kappa", "0.5", "--a", "-1"}).code, kExitUsage);
  EXPECT_EQ(invoke({"figure", "--id", "1", "--kappa-min", "0.9", "--kappa-max", "0.5"}).code, kExitUsage);
}

TEST(cli_errors, solver_failure) {
  const Result r = invoke({"sweep", "--state", "pnes", "--n", "5", "--channel", "amp", "--kappa-min", "1.5",
                           "--kappa-max", "1.6", "--steps", "3"});
  EXPECT_EQ(r.code, kExitFailure);
  EXPECT_NE(r.err.find("error: solver:"), std::string::npos) << r.err;
}

TEST(cli_figure, small_grid) {
  const Result r = invoke({"figure", "--id", "2", "--steps", "5"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 6u);
  EXPECT_EQ(rows[0], "kappa,a_curve,g_inf,g_1,margin");
  EXPECT_EQ(std::string(kCurveCsvHeader), rows[0]);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto c = split(rows[i]);
    ASSERT_EQ(c.size(), 5u);
    EXPECT_NEAR(std::stod(c[4]), std::stod(c[1]) - std::stod(c[2]), 1e-15);
  }
  EXPECT_EQ(split(rows[1])[0], "0.05");
  EXPECT_EQ(split(rows[5])[0], "1");
}

TEST(cli_figure, positive_margins) {
  for (const char* id : {"1", "4"}) {
    const Result r = invoke({"figure", "--id", id});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    int positive = 0;
    const auto rows = lines(r.out);
    for (std::size_t i = 1; i < rows.size(); ++i) positive += std::stod(split(rows[i])[4]) > 0.0;
    EXPECT_GT(positive, 0) << "figure " << id;
  }
}

TEST(cli_figure, failures_reported_on_stderr_and_meta) {
  const auto meta = std::filesystem::temp_directory_path() / "fockchan_test_meta.json";
  const Result r = invoke({"figure", "--id", "4", "--meta", meta.string()});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_EQ(lines(r.out).size() + lines(r.err).size(), 41u);
  EXPECT_EQ(r.err.rfind("warning: solver:", 0), 0u);
  const auto j = nlohmann::json::parse(slurp(meta));
  EXPECT_FALSE(j.empty());
  std::filesystem::remove(meta);
}

TEST(cli_figure, output_is_deterministic) {
  const auto a = std::filesystem::temp_directory_path() / "fockchan_test_fig_a.csv";
  const auto b = std::filesystem::temp_directory_path() / "fockchan_test_fig_b.csv";
  ASSERT_EQ(invoke({"figure", "--id", "3", "--out", a.string()}).code, kExitOk);
  ASSERT_EQ(invoke({"figure", "--id", "3", "--out", b.string()}).code, kExitOk);
  const std::string sa = slurp(a);
  EXPECT_FALSE(sa.empty());
  EXPECT_EQ(sa, slurp(b));
  std::filesystem::remove(a);
  std::filesystem::remove(b);
}

TEST(cli_sweep, json) {
  const Result r = invoke({"sweep", "--state", "noon", "--n", "3", "--channel", "amp", "--kappa-min", "1",
                           "--kappa-max", "1.5", "--steps", "4", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_FALSE(j.empty());
}

TEST(cli_evolve, reports_trace) {
  const Result r = invoke({"evolve", "--state", "pnes", "--n", "2", "--channel", "amp", "--kappa", "1.1", "--a", "0.1"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto rows = lines(r.out);
  ASSERT_GE(rows.size(), 3u);
  EXPECT_EQ(rows[0], "quantity,value");
  for (const auto& row : rows) {
    const auto c = split(row);
    if (c[0] == "trace") EXPECT_NEAR(std::stod(c[1]), 1.0, 1e-9);
  }
}

TEST(cli_validate, passes_and_can_fail) {
  const Result ok = invoke({"validate"});
  EXPECT_EQ(ok.code, kExitOk) << ok.out;
  EXPECT_TRUE(nlohmann::json::parse(ok.out)["passed"].get<bool>());

  const Result bad = invoke({"validate", "--quick", "--perturb", "1e-6"});
  EXPECT_EQ(bad.code, kExitFailure);
  EXPECT_FALSE(nlohmann::json::parse(bad.out)["passed"].get<bool>());
}

TEST(cli_validate, quick_is_fast) {
  const auto start = std::chrono::steady_clock::now();
  const Result r = invoke({"validate", "--quick"});
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_LT(seconds, 5.0);
}

TEST(run_validation, check_names) {
  const auto checks = run_validation({true, 0.0});
  ASSERT_EQ(checks.size(), 5u);
  for (const auto& c : checks) EXPECT_TRUE(c.passed) << c.name;
}
