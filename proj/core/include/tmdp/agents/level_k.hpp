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
#ifndef TMDP_AGENTS_LEVEL_K_HPP_
#define TMDP_AGENTS_LEVEL_K_HPP_

#include <memory>
#include <vector>

#include "tmdp/agents/agent.hpp"
#include "tmdp/agents/fpq.hpp"
#include "tmdp/q_table.hpp"

namespace tmdp::agents {

// Level-2 DM. Keeps Q_A(s,a,b) and a level-1 model of the opponent: an FPQ
// learner Q_B(s,b,a) whose own level-0 view of the DM is a plain Dirichlet
// belief. Each observed round runs, in order:
//   1. Q_B update at (s,b,a) with the modeled opponent reward,
//   2. p_A(b|s') := epsilon_B-greedy distribution over B's expected values,
//   3. Q_A update at (s,a,b) against p_A(.|s').
//
// With OpponentTimescale::kEpisode the opponent is taken to commit once per
// episode: its model is a single-context game over (committed target, DM's
// realized target) updated from end_episode, and p_A(b|s) is the same for
// every state. Within an episode the committed target persists, so the Q_A
// update bootstraps from the observed target rather than from p_A.
class Level2Agent : public Agent {
 public:
  Level2Agent(const AgentConfig& config, const AgentContext& ctx);

  AgentKind kind() const override { return AgentKind::kLevel2; }
  int n_actions() const override { return q_.n_actions(); }
  int act(int state) override;
  void observe(const Transition& t) override;
  void end_episode(const EpisodeOutcome& outcome) override;
  double epsilon() const override { return epsilon_; }
  double model_epsilon() const { return model_epsilon_; }
  void scale_exploration(double own, double model) override;

  // p_A(b|s): predicted opponent policy at s.
  std::vector<double> opponent_policy(int state) const;
  std::vector<double> values(int state) const;

  const JointQTable& q() const { return q_; }
  const FpqLearner& opponent_model() const { return opponent_; }

 private:
  int model_state(int state) const;

  JointQTable q_;
  LearningParams params_;
  FpqLearner opponent_;
  double epsilon_;
  double model_epsilon_;
  OpponentReward reward_model_;
  OpponentTimescale timescale_;
  Rng rng_;
};

struct LevelSettings {
  LearningParams params;
  double epsilon = 0.0;
};

// One level of a level-k hierarchy, seen from the side it plays. Level 1 is
// an FPQ learner; level k >= 2 owns Q_k and a level-(k-1) model of its
// opponent with the roles swapped.
class LevelModel {
 public:
  // settings[0] belongs to this level, settings[i] to the level i below.
  LevelModel(int level, int n_states, int n_actions, int n_opp_actions,
             std::span<const LevelSettings> settings);

  int level() const { return level_; }
  // Predicted opponent distribution at state.
  std::vector<double> opponent_prediction(int state) const;
  std::vector<double> values(int state) const;
  // epsilon-greedy distribution over values() with this level's epsilon.
  std::vector<double> policy(int state) const;
  // t is from this level's side with opp_reward already modeled.
  void observe(const Transition& t);

  double epsilon() const { return settings_.epsilon; }
  void set_epsilon(double e) { settings_.epsilon = e; }
  // Scales epsilon of every level below this one.
  void scale_model_epsilon(double factor);

  const LevelModel* inner() const { return inner_.get(); }
  const JointQTable& q() const;

 private:
  int level_;
  LevelSettings settings_;
  // Level 1 only.
  std::unique_ptr<FpqLearner> basis_;
  // Level >= 2 only.
  JointQTable q_;
  std::unique_ptr<LevelModel> inner_;
};

// Level-k DM for k >= 2: acts epsilon-greedily on the top level of a
// LevelModel stack. The top level applies the configured opponent reward
// model; lower levels see the rewards handed down to them.
class LevelKAgent : public Agent {
 public:
  LevelKAgent(int k, const AgentConfig& config, const AgentContext& ctx);

  AgentKind kind() const override { return AgentKind::kLevelK; }
  int n_actions() const override { return n_actions_; }
  int act(int state) override;
  void observe(const Transition& t) override;
  double epsilon() const override { return top_.epsilon(); }
  void scale_exploration(double own, double model) override;

  const LevelModel& model() const { return top_; }

 private:
  int n_actions_;
  LevelModel top_;
  OpponentReward reward_model_;
  Rng rng_;
};

}  // namespace tmdp::agents

#endif  // TMDP_AGENTS_LEVEL_K_HPP_
