// Copyright 2026 The Authors.
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

// End-to-end tests that drive the msk binary through a shell.

#include <sys/wait.h>
#include <unistd.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "gtest/gtest.h"
#include "json.hpp"

namespace {

using Json = nlohmann::json;
namespace fs = std::filesystem;

struct CliRun {
  int exit_code = -1;
  std::string out;
};

CliRun Invoke(const std::string& args) {
  const std::string command =
      std::string("\"") + MSK_CLI_PATH + "\" " + args + " 2>/dev/null";
  CliRun run;
  FILE* pipe = ::popen(command.c_str(), "r");
  if (pipe == nullptr) return run;
  char buffer[4096];
  std::size_t got;
  while ((got = std::fread(buffer, 1, sizeof(buffer), pipe)) > 0) {
    run.out.append(buffer, got);
  }
  const int status = ::pclose(pipe);
  run.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return run;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("msk_cli_test_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Write(const std::string& name, const std::string& text) {
    const fs::path path = dir_ / name;
    std::ofstream(path) << text;
    return path.string();
  }

  std::string Path(const std::string& name) { return (dir_ / name).string(); }

  fs::path dir_;
};

constexpr char kHeavyPair[] = R"({
  "format": "msk-instance", "version": 1, "n": 3,
  "weights": [8, 8, 1], "capacity": 16,
  "oracle": {"kind": "modular", "values": [8, 8, 2]}})";

TEST_F(CliTest, BadExampleReport) {
  const CliRun r = Invoke("bad-example --N 8");
  ASSERT_EQ(r.exit_code, 0);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["opt_value"], 16.0);
  EXPECT_EQ(j["opt_solution"], Json::parse("[0,1]"));
  EXPECT_EQ(j["enum1"]["value"], 10.0);
  EXPECT_EQ(j["enum1"]["ratio"], 0.625);
  EXPECT_EQ(j["enum1"]["below_threshold"], true);
  EXPECT_EQ(j["enum2"]["ratio"], 1.0);
  EXPECT_EQ(j["enum2"]["below_threshold"], false);
  EXPECT_EQ(Invoke("bad-example --N 1").exit_code, 2);
}

TEST_F(CliTest, RunAlgorithms) {
  const std::string in = Write("pair.json", kHeavyPair);
  CliRun r = Invoke("run --instance " + in + " --alg enum2");
  ASSERT_EQ(r.exit_code, 0);
  Json j = Json::parse(r.out);
  EXPECT_EQ(j["value"], 16.0);
  EXPECT_EQ(j["solution"], Json::parse("[0,1]"));

  r = Invoke("run --instance " + in + " --lazy --out " + Path("res.json"));
  ASSERT_EQ(r.exit_code, 0);
  std::ifstream res(Path("res.json"));
  j = Json::parse(res);
  EXPECT_EQ(j["value"], 10.0);
  EXPECT_EQ(j["trace"]["final_set"], Json::parse("[0,2]"));

  EXPECT_EQ(Invoke("run --instance " + in + " --alg enum7").exit_code, 2);
}

TEST_F(CliTest, EmptyGroundSet) {
  const std::string in = Write("empty.json", R"({
    "format": "msk-instance", "version": 1, "n": 0, "weights": [],
    "capacity": 1, "oracle": {"kind": "modular", "values": []}})");
  const CliRun r = Invoke("run --instance " + in + " --alg enum2");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_EQ(Json::parse(r.out)["value"], 0.0);
}

TEST_F(CliTest, ExitCodes) {
  EXPECT_EQ(Invoke("run --instance " + Write("junk.json", "{ not json")).exit_code, 2);
  EXPECT_EQ(Invoke("run --instance " + Path("missing.json")).exit_code, 2);
  EXPECT_EQ(Invoke("no-such-command").exit_code, 2);
  const std::string bad_weight = Write("w.json", R"({
    "format": "msk-instance", "version": 1, "n": 1, "weights": [-1],
    "capacity": 1, "oracle": {"kind": "modular", "values": [1]}})");
  EXPECT_EQ(Invoke("run --instance " + bad_weight).exit_code, 3);
  EXPECT_EQ(Invoke("gen-adversarial --epsilon 1e-5").exit_code, 4);
  EXPECT_EQ(Invoke("gen-adversarial --epsilon 0").exit_code, 2);
}

TEST_F(CliTest, AdversarialStructureOnlyRoundTrip) {
  const std::string out = Path("adv.json");
  CliRun r = Invoke("gen-adversarial --epsilon 1e-3 --structure-only --out " + out);
  ASSERT_EQ(r.exit_code, 0);
  Json summary = Json::parse(r.out);
  EXPECT_EQ(summary["checks"]["fits_ok"], true);
  EXPECT_EQ(summary["checks"]["blocks_ok"], false);
  r = Invoke("verify-adversarial --instance " + out);
  ASSERT_EQ(r.exit_code, 0);
  const Json report = Json::parse(r.out);
  EXPECT_EQ(report["trace_match"], true);
  EXPECT_LE(report["max_density_error"].get<double>(), 1e-9);

  // A plain instance has nothing to verify against.
  EXPECT_EQ(Invoke("verify-adversarial --instance " + Write("p.json", kHeavyPair))
                .exit_code,
            2);
}

TEST_F(CliTest, AdversarialFullRun) {
  const std::string out = Path("adv.json");
  ASSERT_EQ(Invoke("gen-adversarial --epsilon 8e-6 --out " + out).exit_code, 0);
  const CliRun r = Invoke("verify-adversarial --instance " + out);
  ASSERT_EQ(r.exit_code, 0);
  const Json report = Json::parse(r.out);
  EXPECT_EQ(report["trace_match"], true);
  EXPECT_LT(report["ratio"].get<double>(), 0.42945);
  EXPECT_NEAR(report["gps_value"].get<double>(), 1 - 2 * 0.62233 * 0.4584, 1e-6);
}

TEST_F(CliTest, SweepCsv) {
  const std::string csv = Path("s.csv");
  ASSERT_EQ(Invoke("sweep --family coverage --n 8 --trials 5 --seed 1 --algs "
                   "enum2,gps,greedy --csv " + csv)
                .exit_code,
            0);
  std::ifstream in(csv);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "trial,n,alg,alg_value,opt_value,ratio,oracle_calls");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, 15);

  const CliRun stdout_run = Invoke("sweep --family modular --n 6 --trials 2");
  ASSERT_EQ(stdout_run.exit_code, 0);
  EXPECT_NE(stdout_run.out.find("1,6,gps,"), std::string::npos);
  EXPECT_EQ(Invoke("sweep --n 23 --trials 1").exit_code, 2);
  EXPECT_EQ(Invoke("sweep --family nope").exit_code, 2);
}

TEST_F(CliTest, CheckOracle) {
  CliRun r = Invoke("check-oracle --instance " + Write("p.json", kHeavyPair));
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_EQ(Json::parse(r.out)["submodular"], true);

  // f({0}) = 0 < f(empty) = 1: not monotone.
  const std::string decreasing = Write("d.json", R"({
    "format": "msk-instance", "version": 1, "n": 1, "weights": [1],
    "capacity": 1, "oracle": {"kind": "table", "table": {"": 1, "0": 0}}})");
  r = Invoke("check-oracle --instance " + decreasing);
  EXPECT_EQ(r.exit_code, 3);
  EXPECT_EQ(Json::parse(r.out)["monotone"], false);
}

TEST_F(CliTest, VerifyBound) {
  const std::string in = Write("p.json", kHeavyPair);
  CliRun r = Invoke("verify-bound --instance " + in);
  ASSERT_EQ(r.exit_code, 0);
  Json j = Json::parse(r.out);
  EXPECT_EQ(j["ok"], true);
  EXPECT_EQ(j["X"], Json::parse("[0,1]"));

  r = Invoke("verify-bound --instance " + in + " --X 0,1 --G 0 --partition two-block");
  ASSERT_EQ(r.exit_code, 0);
  j = Json::parse(r.out);
  EXPECT_EQ(j["ok"], true);
  EXPECT_EQ(j["G"], Json::parse("[0]"));

  EXPECT_EQ(Invoke("verify-bound --instance " + in + " --X 0,9").exit_code, 2);
  EXPECT_EQ(Invoke("verify-bound --instance " + in + " --partition odd").exit_code, 2);
}

}  // namespace
