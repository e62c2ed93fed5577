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
#include "tmdp/agents/level_k.hpp"

#include "tmdp/errors.hpp"

namespace tmdp::agents {

namespace {

double model_gamma(const AgentConfig& config) {
  return config.model_gamma < 0.0 ? config.gamma : config.model_gamma;
}

Transition opponent_view(const Transition& t, OpponentReward model) {
  Transition v = t.swapped();
  v.reward = model_opponent_reward(model, t.reward, t.opp_reward);
  return v;
}

}  // namespace

Level2Agent::Level2Agent(const AgentConfig& config, const AgentContext& ctx)
    : q_(ctx.n_states, ctx.n_actions, ctx.n_opp_actions),
      params_(config.alpha, config.gamma, config.epsilon),
      opponent_(
          config.opponent_timescale == OpponentTimescale::kEpisode
              ? FpqLearner(1, ctx.n_opp_actions, ctx.n_outcomes,
                           LearningParams(config.model_alpha,
                                          model_gamma(config),
                                          config.model_epsilon),
                           BeliefConfig{})
              : FpqLearner(ctx.n_states, ctx.n_opp_actions, ctx.n_actions,
                           LearningParams(config.model_alpha,
                                          model_gamma(config),
                                          config.model_epsilon),
                           BeliefConfig{})),
      epsilon_(config.epsilon),
      model_epsilon_(config.model_epsilon),
      reward_model_(config.opponent_reward),
      timescale_(config.opponent_timescale),
      rng_(ctx.seed) {}

int Level2Agent::model_state(int state) const {
  return timescale_ == OpponentTimescale::kEpisode ? 0 : state;
}

std::vector<double> Level2Agent::opponent_policy(int state) const {
  return opponent_.policy(model_state(state), model_epsilon_);
}

std::vector<double> Level2Agent::values(int state) const {
  const auto p = opponent_policy(state);
  std::vector<double> psi(q_.n_actions());
  for (int a = 0; a < q_.n_actions(); ++a) psi[a] = expected_q(q_, p, state, a);
  return psi;
}

int Level2Agent::act(int state) {
  return epsilon_greedy(values(state), epsilon_, rng_);
}

void Level2Agent::observe(const Transition& t) {
  if (timescale_ == OpponentTimescale::kStep) {
    opponent_.observe(opponent_view(t, reward_model_));
  }
  // An opponent that committed for the episode keeps its target at s'.
  std::vector<double> next_policy;
  if (timescale_ == OpponentTimescale::kEpisode) {
    next_policy.assign(q_.n_opp_actions(), 0.0);
    next_policy.at(t.opp_action) = 1.0;
  } else {
    next_policy = opponent_policy(t.next_state);
  }
  q_update_joint(q_, t.state, t.action, t.opp_action, t.reward, t.next_state,
                 next_policy, params_, t.terminal);
}

void Level2Agent::end_episode(const EpisodeOutcome& outcome) {
  if (timescale_ != OpponentTimescale::kEpisode) {
    opponent_.reset_context();
    return;
  }
  if (outcome.dm_target < 0) return;
  Transition round;
  round.state = 0;
  round.next_state = 0;
  round.action = outcome.adversary_target;
  round.opp_action = outcome.dm_target;
  round.reward = model_opponent_reward(reward_model_, outcome.dm_return,
                                       outcome.adversary_return);
  round.opp_reward = outcome.dm_return;
  opponent_.observe(round);
}

void Level2Agent::scale_exploration(double own, double model) {
  epsilon_ *= own;
  model_epsilon_ *= model;
}

LevelModel::LevelModel(int level, int n_states, int n_actions,
                       int n_opp_actions,
                       std::span<const LevelSettings> settings)
    : level_(level) {
  if (level < 1) throw ContractViolation("level must be >= 1");
  if (static_cast<int>(settings.size()) < level) {
    throw ContractViolation("need one LevelSettings per level");
  }
  settings_ = settings.front();
  if (level == 1) {
    basis_ = std::make_unique<FpqLearner>(n_states, n_actions, n_opp_actions,
                                          settings_.params, BeliefConfig{});
  } else {
    q_ = JointQTable(n_states, n_actions, n_opp_actions);
    inner_ = std::make_unique<LevelModel>(level - 1, n_states, n_opp_actions,
                                          n_actions, settings.subspan(1));
  }
}

const JointQTable& LevelModel::q() const {
  return basis_ ? basis_->q() : q_;
}

std::vector<double> LevelModel::opponent_prediction(int state) const {
  return basis_ ? basis_->opponent_belief(state) : inner_->policy(state);
}

std::vector<double> LevelModel::values(int state) const {
  if (basis_) return basis_->values(state);
  const auto p = inner_->policy(state);
  std::vector<double> psi(q_.n_actions());
  for (int a = 0; a < q_.n_actions(); ++a) psi[a] = expected_q(q_, p, state, a);
  return psi;
}

std::vector<double> LevelModel::policy(int state) const {
  return epsilon_greedy_distribution(values(state), settings_.epsilon);
}

void LevelModel::observe(const Transition& t) {
  if (basis_) {
    basis_->observe(t);
    return;
  }
  // The simulated opponent is told the rewards this level actually knows.
  inner_->observe(t.swapped());
  const auto next_policy = inner_->policy(t.next_state);
  q_update_joint(q_, t.state, t.action, t.opp_action, t.reward, t.next_state,
                 next_policy, settings_.params, t.terminal);
}

void LevelModel::scale_model_epsilon(double factor) {
  for (LevelModel* m = inner_.get(); m != nullptr; m = m->inner_.get()) {
    m->settings_.epsilon *= factor;
  }
}

namespace {

std::vector<LevelSettings> level_settings(int k, const AgentConfig& config) {
  std::vector<LevelSettings> out;
  out.push_back({LearningParams(config.alpha, config.gamma, config.epsilon),
                 config.epsilon});
  for (int i = 1; i < k; ++i) {
    out.push_back({LearningParams(config.model_alpha, model_gamma(config),
                                  config.model_epsilon),
                   config.model_epsilon});
  }
  return out;
}

}  // namespace

LevelKAgent::LevelKAgent(int k, const AgentConfig& config,
                         const AgentContext& ctx)
    : n_actions_(ctx.n_actions),
      top_(k, ctx.n_states, ctx.n_actions, ctx.n_opp_actions,
           level_settings(k, config)),
      reward_model_(config.opponent_reward),
      rng_(ctx.seed) {
  if (k < 2) throw ContractViolation("LevelKAgent needs k >= 2");
  if (config.opponent_timescale != OpponentTimescale::kStep) {
    throw ContractViolation(
        "levelk agents model a per-round opponent; use level2 for the "
        "episode timescale");
  }
}

int LevelKAgent::act(int state) {
  return epsilon_greedy(top_.values(state), top_.epsilon(), rng_);
}

void LevelKAgent::observe(const Transition& t) {
  Transition own = t;
  own.opp_reward = model_opponent_reward(reward_model_, t.reward, t.opp_reward);
  top_.observe(own);
}

void LevelKAgent::scale_exploration(double own, double model) {
  top_.set_epsilon(top_.epsilon() * own);
  top_.scale_model_epsilon(model);
}

}  // namespace tmdp::agents
