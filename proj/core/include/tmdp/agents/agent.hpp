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
#ifndef TMDP_AGENTS_AGENT_HPP_
#define TMDP_AGENTS_AGENT_HPP_

#include <array>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tmdp/bloom.hpp"
#include "tmdp/rng.hpp"

namespace tmdp::agents {

enum class AgentKind {
  kIndependentQ,
  kFpq,
  kLevel2,
  kLevelK,
  kWolfPhc,
  kTitForTat,
  kSmootherAdversary,
};

std::string_view to_string(AgentKind kind);
// Accepts the names used in config files: independent-q, fpq, level2,
// levelk, wolf-phc, tft, smoother-adversary.
AgentKind parse_agent_kind(std::string_view name);

// One round as seen by the observing agent: action is its own move,
// opp_action the counterpart's; reward/opp_reward follow the same split.
struct Transition {
  int state = 0;
  int action = 0;
  int opp_action = 0;
  double reward = 0.0;
  double opp_reward = 0.0;
  int next_state = 0;
  bool terminal = false;

  // Same round from the counterpart's side. States are left untouched; the
  // environment decides how the counterpart indexes states.
  Transition swapped() const {
    return {state, opp_action, action, opp_reward, reward, next_state,
            terminal};
  }
};

// Summary of a finished episode in the spatial game, in absolute roles.
struct EpisodeOutcome {
  int dm_target = -1;  // target the DM reached, -1 if none
  int adversary_target = 0;
  double dm_return = 0.0;
  double adversary_return = 0.0;
};

// How a level-k learner models the rewards of the opponent it simulates.
enum class OpponentReward {
  kObserved,  // use the reward the environment reports for the opponent
  kZeroSum,   // r_B = -r_A
  kBinary,    // r_B = 1 if r_A < 0 else 0
  kSign,      // r_B = -sign(r_A)
};

std::string_view to_string(OpponentReward model);
OpponentReward parse_opponent_reward(std::string_view name);
double model_opponent_reward(OpponentReward model, double own_reward,
                             double observed_opp_reward);

// Which events drive a level-k agent's model of its opponent.
enum class OpponentTimescale {
  kStep,     // the opponent moves every round (matrix games)
  kEpisode,  // the opponent commits once per episode (spatial game)
};

enum class BeliefKind { kDirichlet, kForget, kBloom, kMixture };
std::string_view to_string(BeliefKind kind);
BeliefKind parse_belief_kind(std::string_view name);

struct BeliefConfig {
  BeliefKind kind = BeliefKind::kDirichlet;
  double prior = 1.0;
  double forget_lambda = 1.0;
  BloomParams bloom;
  std::array<double, 3> mixture_weights{1.0 / 3, 1.0 / 3, 1.0 / 3};
};

// Everything needed to build any of the seven agents. Fields irrelevant to
// a kind are ignored.
struct AgentConfig {
  AgentKind kind = AgentKind::kIndependentQ;
  double alpha = 0.1;
  double gamma = 0.9;
  double epsilon = 0.1;
  // Multipliers applied by the harness on the decay cadence.
  double epsilon_decay = 1.0;
  double model_epsilon_decay = 1.0;
  // Agent sees a single state regardless of the environment's state.
  bool stateless = false;

  BeliefConfig belief;

  // level2 / levelk
  int level = 2;
  double model_alpha = 0.1;
  double model_gamma = -1.0;  // < 0 means "same as gamma"
  double model_epsilon = 0.1;
  OpponentReward opponent_reward = OpponentReward::kZeroSum;
  OpponentTimescale opponent_timescale = OpponentTimescale::kStep;

  // wolf-phc
  double delta_win = 0.05;
  double delta_lose = 0.2;

  // smoother-adversary
  double smoother_alpha = 0.8;
};

// Sizes the environment exposes to an agent, from that agent's side.
struct AgentContext {
  int n_states = 1;
  int n_actions = 2;
  int n_opp_actions = 2;
  // Distinct episode outcomes the counterpart can realize (spatial game).
  int n_outcomes = 2;
  std::uint64_t seed = 0;
};

class Agent {
 public:
  virtual ~Agent() = default;

  virtual AgentKind kind() const = 0;
  virtual int n_actions() const = 0;
  virtual int act(int state) = 0;
  virtual void observe(const Transition& t) = 0;
  virtual void end_episode(const EpisodeOutcome&) {}

  // Current own exploration rate (0 for agents that do not explore).
  virtual double epsilon() const { return 0.0; }
  // own scales the agent's exploration; model scales the exploration rates
  // it attributes to the levels of its opponent model.
  virtual void scale_exploration(double /*own*/, double /*model*/) {}
};

using AgentHandle = std::unique_ptr<Agent>;

// argmax with probability 1-epsilon (lowest-index ties), uniform otherwise.
// Always consumes exactly one uniform draw, plus one integer draw when
// exploring.
int epsilon_greedy(std::span<const double> values, double epsilon, Rng& rng);
// The distribution epsilon_greedy samples from.
std::vector<double> epsilon_greedy_distribution(std::span<const double> values,
                                                double epsilon);

AgentHandle make_agent(const AgentConfig& config, const AgentContext& ctx);

// Level-k stack: k = 1 is a fictitious-play Q-learner, k >= 2 keeps its own
// joint Q table plus a level-(k-1) model of the opponent.
AgentHandle levelk_build(int k, const AgentConfig& config,
                         const AgentContext& ctx);

}  // namespace tmdp::agents

#endif  // TMDP_AGENTS_AGENT_HPP_
