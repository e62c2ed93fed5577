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
#ifndef TMDP_AGENTS_FPQ_HPP_
#define TMDP_AGENTS_FPQ_HPP_

#include <variant>
#include <vector>

#include "tmdp/agents/agent.hpp"
#include "tmdp/beliefs.hpp"
#include "tmdp/bloom.hpp"
#include "tmdp/q_table.hpp"

namespace tmdp::agents {

// p(b|s) source for a fictitious-play learner. Dirichlet and forget variants
// keep one belief per state; the bloom variant approximates p(s|b) counts;
// the mixture variant also conditions on the previous joint action.
class OpponentBelief {
 public:
  OpponentBelief(const BeliefConfig& config, int n_states, int n_own_actions,
                 int n_opp_actions);

  BeliefKind kind() const { return kind_; }
  // prev_own / prev_opp are -1 at the start of an episode.
  std::vector<double> predict(int state, int prev_own, int prev_opp) const;
  void update(int state, int prev_own, int prev_opp, int opp_action);

  using Model = std::variant<ConditionalDirichlet, BloomConditionalModel,
                             MarkovMixtureModel>;
  const Model& model() const { return model_; }

 private:
  BeliefKind kind_;
  Model model_;
};

// Joint-action Q-learner with fictitious-play beliefs (FPQ). Holds no RNG:
// it exposes expected utilities and the epsilon-greedy distribution over
// them, so it doubles as the level-1 basis inside a level-k model.
class FpqLearner {
 public:
  FpqLearner(int n_states, int n_actions, int n_opp_actions,
             const LearningParams& params, const BeliefConfig& belief);

  int n_states() const { return q_.n_states(); }
  int n_actions() const { return q_.n_actions(); }
  int n_opp_actions() const { return q_.n_opp_actions(); }

  // p(b|s) given the current previous-action context.
  std::vector<double> opponent_belief(int state) const;
  // psi_s(a) = sum_b Q(s,a,b) p(b|s).
  std::vector<double> values(int state) const;
  std::vector<double> policy(int state, double epsilon) const;

  // Belief update with t.opp_action at t.state, then the joint Q update at
  // (s,a,b) using the updated belief at t.next_state.
  void observe(const Transition& t);
  void reset_context();

  const JointQTable& q() const { return q_; }
  JointQTable& q() { return q_; }
  const OpponentBelief& belief() const { return belief_; }
  const LearningParams& params() const { return params_; }

 private:
  JointQTable q_;
  LearningParams params_;
  OpponentBelief belief_;
  int prev_own_ = -1;
  int prev_opp_ = -1;
};

class FpqAgent : public Agent {
 public:
  FpqAgent(const AgentConfig& config, const AgentContext& ctx);

  AgentKind kind() const override { return AgentKind::kFpq; }
  int n_actions() const override { return learner_.n_actions(); }
  int act(int state) override;
  void observe(const Transition& t) override;
  void end_episode(const EpisodeOutcome&) override { learner_.reset_context(); }
  double epsilon() const override { return epsilon_; }
  void scale_exploration(double own, double) override { epsilon_ *= own; }

  const FpqLearner& learner() const { return learner_; }
  FpqLearner& learner() { return learner_; }

 private:
  FpqLearner learner_;
  double epsilon_;
  Rng rng_;
};

}  // namespace tmdp::agents

#endif  // TMDP_AGENTS_FPQ_HPP_
