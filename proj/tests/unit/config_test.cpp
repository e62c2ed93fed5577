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
#include "tmdp/config.hpp"

#include <gtest/gtest.h>

#include <filesystem>

#include "tmdp/errors.hpp"
#include "tmdp/presets.hpp"

namespace tmdp {
namespace {

TEST(Config, JsonRoundTripForEveryPreset) {
  for (const auto& info : list_presets()) {
    const auto c = preset(info.name);
    const auto back = config_from_json(to_json(c));
    EXPECT_EQ(to_json(back), to_json(c)) << info.name;
  }
}

TEST(Config, FileRoundTrip) {
  const auto c = preset("chicken_wolf_l2");
  const auto path =
      std::filesystem::temp_directory_path() / "tmdp_config_test.json";
  save_config(c, path);
  const auto back = load_config(path);
  std::filesystem::remove(path);
  EXPECT_EQ(to_json(back), to_json(c));
  EXPECT_THROW(load_config("/nonexistent/cfg.json"), ConfigError);
}

TEST(Config, RejectsUnknownKeys) {
  auto j = to_json(preset("ipd_qq"));
  j["agent_a"]["alpah"] = 0.3;
  try {
    config_from_json(j);
    FAIL() << "expected ConfigError";
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("agent_a.alpah"), std::string::npos);
  }
}

TEST(Config, RejectsBadValues) {
  auto j = to_json(preset("ipd_qq"));
  j["agent_a"]["gamma"] = 1.0;
  EXPECT_THROW(config_from_json(j), ConfigError);
  j = to_json(preset("ipd_qq"));
  j["agent_a"]["kind"] = "nope";
  EXPECT_THROW(config_from_json(j), ConfigError);
  j = to_json(preset("ipd_qq"));
  j["steps"] = "many";
  EXPECT_THROW(config_from_json(j), ConfigError);
}

TEST(Config, CombinationRules) {
  auto c = preset("ipd_qq");
  c.agent_b.kind = agents::AgentKind::kTitForTat;
  EXPECT_THROW(validate(c), ConfigError);
  c.environment.kind = EnvKind::kMemory1;
  EXPECT_NO_THROW(validate(c));
  auto s = preset("foe_spatial_l2");
  s.agent_b.kind = agents::AgentKind::kIndependentQ;
  EXPECT_THROW(validate(s), ConfigError);
}

TEST(Override, DottedPathsAndTypes) {
  const auto c = preset("ipd_qq");
  auto o = apply_override(c, "agent_a.alpha=0.25");
  EXPECT_DOUBLE_EQ(o.agent_a.alpha, 0.25);
  o = apply_override(o, "agent_b.kind=fpq");
  EXPECT_EQ(o.agent_b.kind, agents::AgentKind::kFpq);
  o = apply_override(o, "agent_a.belief.kind=forget");
  EXPECT_EQ(o.agent_a.belief.kind, agents::BeliefKind::kForget);
  o = apply_overrides(o, {"steps=300", "name=x"});
  EXPECT_EQ(o.steps, 300);
  EXPECT_EQ(o.name, "x");
  EXPECT_THROW(apply_override(c, "agent_a.nope=1"), ConfigError);
  EXPECT_THROW(apply_override(c, "steps"), ConfigError);
  EXPECT_THROW(apply_override(c, "agent_a.alpha=2"), ConfigError);
}

TEST(Seeds, MasterPlusIndexOrExplicitList) {
  ExperimentConfig c;
  c.master_seed = 100;
  c.seeds = 3;
  EXPECT_EQ(c.resolved_seeds(), (std::vector<std::uint64_t>{100, 101, 102}));
  c.seed_list = {5, 9};
  EXPECT_EQ(c.resolved_seeds(), (std::vector<std::uint64_t>{5, 9}));
}

TEST(Presets, KnownNamesAndErrors) {
  EXPECT_TRUE(has_preset("ipd_qq"));
  EXPECT_FALSE(has_preset("nope"));
  EXPECT_THROW(preset("nope"), ConfigError);
  EXPECT_GE(list_presets().size(), 17u);
}

TEST(Bimatrix, CustomPayoffs) {
  EnvironmentConfig e;
  e.game = "custom";
  EXPECT_THROW(make_bimatrix(e), ConfigError);
  e.payoffs = {{{1, 2}, {3, 4}}, {{5, 6}, {7, 8}}};
  EXPECT_EQ(make_bimatrix(e).at(1, 0), std::make_pair(5.0, 6.0));
}

}  // namespace
}  // namespace tmdp
