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
#include "tmdp/presets.hpp"

#include <functional>

#include "tmdp/errors.hpp"

namespace tmdp {

namespace {

using agents::AgentConfig;
using agents::AgentKind;
using agents::BeliefKind;

constexpr std::uint64_t kPresetMasterSeed = 20260101;

AgentConfig learner(AgentKind kind, double alpha, double gamma,
                    double epsilon) {
  AgentConfig a;
  a.kind = kind;
  a.alpha = alpha;
  a.gamma = gamma;
  a.epsilon = epsilon;
  a.model_alpha = alpha;
  a.model_epsilon = epsilon;
  return a;
}

// Iterated social dilemmas: T = 20000, gamma = 0.96, alpha = 0.3,
// epsilon = 0.1, Beta(1,1) prior.
ExperimentConfig dilemma(const std::string& name, const std::string& game,
                         AgentKind dm, AgentKind opp) {
  ExperimentConfig c;
  c.name = name;
  c.environment.kind = EnvKind::kMatrix;
  c.environment.game = game;
  c.agent_a = learner(dm, 0.3, 0.96, 0.1);
  c.agent_b = learner(opp, 0.3, 0.96, 0.1);
  c.steps = 20000;
  c.seeds = 10;
  c.master_seed = kPresetMasterSeed;
  c.window = 100;
  c.eval_window = 2000;
  return c;
}

ExperimentConfig chicken_wolf(const std::string& name, AgentKind dm) {
  ExperimentConfig c = dilemma(name, "chicken", dm, AgentKind::kWolfPhc);
  c.agent_a.opponent_reward = agents::OpponentReward::kObserved;
  // Small policy steps keep the adversary mixed while it learns.
  c.agent_b.delta_win = 0.002;
  c.agent_b.delta_lose = 0.008;
  return c;
}

ExperimentConfig memory1(const std::string& name, bool memoryless) {
  ExperimentConfig c =
      dilemma(name, "ipd", AgentKind::kFpq, AgentKind::kTitForTat);
  c.environment.kind = EnvKind::kMemory1;
  c.agent_a.alpha = 0.05;
  c.agent_a.model_alpha = 0.05;
  c.agent_a.stateless = memoryless;
  return c;
}

// Stateless friend-or-foe: 5000 episodes, gamma = 0.8, epsilon = 0.1,
// alpha = 0.1, forget factor 0.8.
ExperimentConfig foe_stateless(const std::string& name, AgentKind dm) {
  ExperimentConfig c;
  c.name = name;
  c.environment.kind = EnvKind::kFoeStateless;
  c.agent_a = learner(dm, 0.1, 0.8, 0.1);
  c.agent_b.kind = AgentKind::kSmootherAdversary;
  c.steps = 5000;
  c.seeds = 10;
  c.master_seed = kPresetMasterSeed;
  c.window = 100;
  c.eval_window = 500;
  return c;
}

ExperimentConfig foe_scaling(const std::string& name,
                             env::AdversaryScaling scaling,
                             agents::OpponentReward model) {
  ExperimentConfig c = foe_stateless(name, AgentKind::kLevel2);
  c.environment.adversary_scaling = scaling;
  c.agent_a.opponent_reward = model;
  return c;
}

// Spatial friend-or-foe: 15000 episodes of at most 50 steps, gamma = 0.8,
// alpha = 0.05, epsilon 0.99 decayed every 10 episodes.
ExperimentConfig foe_spatial(const std::string& name, AgentKind dm) {
  ExperimentConfig c;
  c.name = name;
  c.environment.kind = EnvKind::kFoeSpatial;
  c.agent_a = learner(dm, 0.05, 0.8, 0.99);
  c.agent_a.epsilon_decay = 0.995;
  if (dm == AgentKind::kLevel2) {
    c.agent_a.model_epsilon_decay = 0.9;
    c.agent_a.opponent_timescale = agents::OpponentTimescale::kEpisode;
  }
  c.agent_b.kind = AgentKind::kSmootherAdversary;
  c.steps = 15000;
  c.decay_every = 10;
  c.seeds = 10;
  c.master_seed = kPresetMasterSeed;
  c.window = 100;
  c.eval_window = 1000;
  return c;
}

struct Entry {
  PresetInfo info;
  std::function<ExperimentConfig()> make;
};

const std::vector<Entry>& registry() {
  using K = AgentKind;
  static const std::vector<Entry> entries = [] {
    std::vector<Entry> e;
    auto add = [&e](std::string name, std::string description,
                    std::function<ExperimentConfig(const std::string&)> fn) {
      e.push_back({{name, std::move(description)},
                   [fn, name] { return fn(name); }});
    };
    add("ipd_qq", "prisoner's dilemma, Q-learner vs Q-learner",
        [](const std::string& n) { return dilemma(n, "ipd", K::kIndependentQ, K::kIndependentQ); });
    add("ipd_fpq", "prisoner's dilemma, FPQ-learner vs Q-learner",
        [](const std::string& n) { return dilemma(n, "ipd", K::kFpq, K::kIndependentQ); });
    add("ish_qq", "stag hunt, Q-learner vs Q-learner",
        [](const std::string& n) { return dilemma(n, "stag-hunt", K::kIndependentQ, K::kIndependentQ); });
    add("ish_fpq", "stag hunt, FPQ-learner vs Q-learner",
        [](const std::string& n) { return dilemma(n, "stag-hunt", K::kFpq, K::kIndependentQ); });
    add("chicken_qq", "chicken, Q-learner vs Q-learner",
        [](const std::string& n) { return dilemma(n, "chicken", K::kIndependentQ, K::kIndependentQ); });
    add("chicken_fpq", "chicken, FPQ-learner vs Q-learner",
        [](const std::string& n) { return dilemma(n, "chicken", K::kFpq, K::kIndependentQ); });
    add("chicken_wolf_l1", "chicken, level-1 (FPQ) vs WoLF-PHC",
        [](const std::string& n) { return chicken_wolf(n, K::kFpq); });
    add("chicken_wolf_l2", "chicken, level-2 vs WoLF-PHC",
        [](const std::string& n) { return chicken_wolf(n, K::kLevel2); });
    add("memory1_tft", "memory-1 prisoner's dilemma, FPQ vs tit-for-tat",
        [](const std::string& n) { return memory1(n, false); });
    add("memory1_tft_memoryless",
        "memory-1 prisoner's dilemma, memoryless FPQ vs tit-for-tat",
        [](const std::string& n) { return memory1(n, true); });
    add("foe_stateless_indq", "stateless friend-or-foe, Q-learner",
        [](const std::string& n) { return foe_stateless(n, K::kIndependentQ); });
    add("foe_stateless_l1forget",
        "stateless friend-or-foe, FPQ with forget factor 0.8",
        [](const std::string& n) {
          auto c = foe_stateless(n, K::kFpq);
          c.agent_a.belief.kind = BeliefKind::kForget;
          c.agent_a.belief.forget_lambda = 0.8;
          return c;
        });
    add("foe_stateless_l2", "stateless friend-or-foe, level-2",
        [](const std::string& n) { return foe_stateless(n, K::kLevel2); });
    add("foe_spatial_indq", "spatial friend-or-foe, Q-learner",
        [](const std::string& n) { return foe_spatial(n, K::kIndependentQ); });
    add("foe_spatial_l2", "spatial friend-or-foe, level-2",
        [](const std::string& n) { return foe_spatial(n, K::kLevel2); });
    add("foe_scalings_binary",
        "stateless friend-or-foe, level-2, adversary rewards in {0,1}",
        [](const std::string& n) {
          return foe_scaling(n, env::AdversaryScaling::kBinary,
                             agents::OpponentReward::kBinary);
        });
    add("foe_scalings_sign",
        "stateless friend-or-foe, level-2, adversary rewards in {-1,1}",
        [](const std::string& n) {
          return foe_scaling(n, env::AdversaryScaling::kSign,
                             agents::OpponentReward::kSign);
        });
    return e;
  }();
  return entries;
}

}  // namespace

const std::vector<PresetInfo>& list_presets() {
  static const std::vector<PresetInfo> infos = [] {
    std::vector<PresetInfo> out;
    for (const auto& e : registry()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

bool has_preset(std::string_view name) {
  for (const auto& e : registry()) {
    if (e.info.name == name) return true;
  }
  return false;
}

ExperimentConfig preset(std::string_view name) {
  for (const auto& e : registry()) {
    if (e.info.name == name) return e.make();
  }
  std::string known;
  for (const auto& e : registry()) {
    if (!known.empty()) known += ", ";
    known += e.info.name;
  }
  throw ConfigError("unknown preset '" + std::string(name) +
                    "'; known presets: " + known);
}

}  // namespace tmdp
