// Copyright 2026 The TMDP Lab Authors
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
#include "tmdp_lab/cli.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "tmdp/summary.hpp"

namespace tmdp::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "tmdp_lab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / name;
  std::filesystem::remove_all(p);
  return p;
}

TEST(Cli, ListPresets) {
  const auto r = invoke({"list-presets"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("ipd_qq"), std::string::npos);
  EXPECT_NE(r.out.find("foe_spatial_l2"), std::string::npos);
}

TEST(Cli, UnknownPresetIsConfigError) {
  const auto r = invoke({"run", "no_such_preset", "--quiet"});
  EXPECT_EQ(r.code, kExitConfig);
  EXPECT_NE(r.err.find("ipd_qq"), std::string::npos);
}

TEST(Cli, BadOverrideIsConfigError) {
  EXPECT_EQ(invoke({"run", "ipd_qq", "--set", "agent_a.bogus=1"}).code,
            kExitConfig);
  EXPECT_EQ(invoke({"run", "--bogus-flag"}).code, kExitConfig);
}

TEST(Cli, RunWritesArtifacts) {
  const auto dir = scratch("tmdp_cli_run");
  const auto r = invoke({"run", "ipd_qq", "--quiet", "--trace", "--out",
                         dir.string(), "--set", "steps=300",
                         "eval_window=100", "--seeds", "1,2"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("ipd_qq final 100-step mean: dm="), std::string::npos);
  EXPECT_TRUE(std::filesystem::exists(dir / "ipd_qq.csv"));
  EXPECT_TRUE(std::filesystem::exists(dir / "ipd_qq.config.json"));
  EXPECT_TRUE(std::filesystem::exists(dir / "ipd_qq.trace.csv"));
  EXPECT_EQ(read_csv(dir / "ipd_qq.csv").size(), 3u * 300u);

  // The saved config reproduces the run byte for byte.
  const auto again = invoke({"run", "--config",
                             (dir / "ipd_qq.config.json").string(), "--quiet",
                             "--out", (dir / "again").string()});
  ASSERT_EQ(again.code, kExitOk) << again.err;
  EXPECT_EQ(again.out, r.out);
  std::filesystem::remove_all(dir);
}

TEST(Cli, SweepRunsCartesianProduct) {
  const auto dir = scratch("tmdp_cli_sweep");
  const auto r = invoke({"sweep", "ish_qq", "--quiet", "--out", dir.string(),
                         "--set", "steps=100", "eval_window=50", "--seeds",
                         "1", "--grid", "agent_a.alpha=0.1,0.2", "--grid",
                         "agent_a.gamma=0.5,0.9"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  int lines = 0;
  for (char ch : r.out) lines += ch == '\n';
  EXPECT_EQ(lines, 4);
  std::filesystem::remove_all(dir);
}

TEST(Cli, VerifyPassesAndFlagsInjectedGamma) {
  EXPECT_EQ(invoke({"verify", "--specs", "5"}).code, kExitOk);
  const auto bad = invoke({"verify", "--specs", "5", "--inject-gamma", "1"});
  EXPECT_EQ(bad.code, kExitVerify);
  EXPECT_NE(bad.out.find("FAIL"), std::string::npos);
}

}  // namespace
}  // namespace tmdp::cli
