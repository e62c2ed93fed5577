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
#include "tmdp/agents/agent.hpp"

#include <string>

#include "tmdp/agents/fpq.hpp"
#include "tmdp/agents/independent_q.hpp"
#include "tmdp/agents/level_k.hpp"
#include "tmdp/agents/smoother_adversary.hpp"
#include "tmdp/agents/tit_for_tat.hpp"
#include "tmdp/agents/wolf_phc.hpp"
#include "tmdp/errors.hpp"
#include "tmdp/q_table.hpp"

namespace tmdp::agents {

std::string_view to_string(AgentKind kind) {
  switch (kind) {
    case AgentKind::kIndependentQ: return "independent-q";
    case AgentKind::kFpq: return "fpq";
    case AgentKind::kLevel2: return "level2";
    case AgentKind::kLevelK: return "levelk";
    case AgentKind::kWolfPhc: return "wolf-phc";
    case AgentKind::kTitForTat: return "tft";
    case AgentKind::kSmootherAdversary: return "smoother-adversary";
  }
  return "unknown";
}

AgentKind parse_agent_kind(std::string_view name) {
  for (auto kind : {AgentKind::kIndependentQ, AgentKind::kFpq,
                    AgentKind::kLevel2, AgentKind::kLevelK,
                    AgentKind::kWolfPhc, AgentKind::kTitForTat,
                    AgentKind::kSmootherAdversary}) {
    if (to_string(kind) == name) return kind;
  }
  throw ConfigError("unknown agent kind '" + std::string(name) + "'");
}

std::string_view to_string(OpponentReward model) {
  switch (model) {
    case OpponentReward::kObserved: return "observed";
    case OpponentReward::kZeroSum: return "zero-sum";
    case OpponentReward::kBinary: return "binary";
    case OpponentReward::kSign: return "sign";
  }
  return "unknown";
}

OpponentReward parse_opponent_reward(std::string_view name) {
  for (auto m : {OpponentReward::kObserved, OpponentReward::kZeroSum,
                 OpponentReward::kBinary, OpponentReward::kSign}) {
    if (to_string(m) == name) return m;
  }
  throw ConfigError("unknown opponent reward model '" + std::string(name) +
                    "'");
}

double model_opponent_reward(OpponentReward model, double own_reward,
                             double observed_opp_reward) {
  switch (model) {
    case OpponentReward::kObserved: return observed_opp_reward;
    case OpponentReward::kZeroSum: return -own_reward;
    case OpponentReward::kBinary: return own_reward < 0.0 ? 1.0 : 0.0;
    case OpponentReward::kSign:
      return own_reward < 0.0 ? 1.0 : (own_reward > 0.0 ? -1.0 : 0.0);
  }
  return observed_opp_reward;
}

std::string_view to_string(BeliefKind kind) {
  switch (kind) {
    case BeliefKind::kDirichlet: return "dirichlet";
    case BeliefKind::kForget: return "forget";
    case BeliefKind::kBloom: return "bloom";
    case BeliefKind::kMixture: return "mixture";
  }
  return "unknown";
}

BeliefKind parse_belief_kind(std::string_view name) {
  for (auto k : {BeliefKind::kDirichlet, BeliefKind::kForget,
                 BeliefKind::kBloom, BeliefKind::kMixture}) {
    if (to_string(k) == name) return k;
  }
  throw ConfigError("unknown belief kind '" + std::string(name) + "'");
}

int epsilon_greedy(std::span<const double> values, double epsilon, Rng& rng) {
  if (values.empty()) throw ContractViolation("epsilon_greedy on no actions");
  if (rng.uniform() < epsilon) {
    return rng.uniform_int(static_cast<int>(values.size()));
  }
  return argmax(values);
}

std::vector<double> epsilon_greedy_distribution(std::span<const double> values,
                                                double epsilon) {
  const int n = static_cast<int>(values.size());
  std::vector<double> p(n, epsilon / n);
  p[argmax(values)] += 1.0 - epsilon;
  return p;
}

AgentHandle make_agent(const AgentConfig& config, const AgentContext& ctx) {
  switch (config.kind) {
    case AgentKind::kIndependentQ:
      return std::make_unique<IndependentQAgent>(config, ctx);
    case AgentKind::kFpq:
      return std::make_unique<FpqAgent>(config, ctx);
    case AgentKind::kLevel2:
      return std::make_unique<Level2Agent>(config, ctx);
    case AgentKind::kLevelK:
      return levelk_build(config.level, config, ctx);
    case AgentKind::kWolfPhc:
      return std::make_unique<WolfPhcAgent>(config, ctx);
    case AgentKind::kTitForTat:
      return std::make_unique<TitForTatAgent>(ctx);
    case AgentKind::kSmootherAdversary:
      return std::make_unique<SmootherAdversaryAgent>(config, ctx);
  }
  throw ContractViolation("unknown agent kind");
}

AgentHandle levelk_build(int k, const AgentConfig& config,
                         const AgentContext& ctx) {
  if (k < 1) {
    throw ContractViolation("level-k needs k >= 1, got " + std::to_string(k));
  }
  if (k == 1) return std::make_unique<FpqAgent>(config, ctx);
  return std::make_unique<LevelKAgent>(k, config, ctx);
}

}  // namespace tmdp::agents
