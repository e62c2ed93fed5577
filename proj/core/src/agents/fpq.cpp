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
#include "tmdp/agents/fpq.hpp"

#include "tmdp/errors.hpp"

namespace tmdp::agents {

namespace {

OpponentBelief::Model make_model(const BeliefConfig& config, int n_states,
                                 int n_own, int n_opp) {
  switch (config.kind) {
    case BeliefKind::kDirichlet:
      return ConditionalDirichlet(n_states, n_opp, config.prior, 1.0);
    case BeliefKind::kForget:
      return ConditionalDirichlet(n_states, n_opp, config.prior,
                                  config.forget_lambda);
    case BeliefKind::kBloom:
      return BloomConditionalModel(n_opp, config.bloom, config.prior, 1.0);
    case BeliefKind::kMixture:
      return MarkovMixtureModel(config.mixture_weights, n_own, n_opp, n_states,
                                config.prior, config.forget_lambda);
  }
  throw ContractViolation("unknown belief kind");
}

}  // namespace

OpponentBelief::OpponentBelief(const BeliefConfig& config, int n_states,
                               int n_own_actions, int n_opp_actions)
    : kind_(config.kind),
      model_(make_model(config, n_states, n_own_actions, n_opp_actions)) {}

std::vector<double> OpponentBelief::predict(int state, int prev_own,
                                            int prev_opp) const {
  switch (kind_) {
    case BeliefKind::kDirichlet:
    case BeliefKind::kForget:
      return std::get<ConditionalDirichlet>(model_).predictive(state);
    case BeliefKind::kBloom:
      return std::get<BloomConditionalModel>(model_).conditional_predictive(
          static_cast<std::uint64_t>(state));
    case BeliefKind::kMixture:
      return std::get<MarkovMixtureModel>(model_).predictive(prev_own,
                                                             prev_opp, state);
  }
  throw ContractViolation("unknown belief kind");
}

void OpponentBelief::update(int state, int prev_own, int prev_opp,
                            int opp_action) {
  switch (kind_) {
    case BeliefKind::kDirichlet:
    case BeliefKind::kForget:
      std::get<ConditionalDirichlet>(model_).update(state, opp_action);
      return;
    case BeliefKind::kBloom:
      std::get<BloomConditionalModel>(model_).update(
          static_cast<std::uint64_t>(state), opp_action);
      return;
    case BeliefKind::kMixture:
      std::get<MarkovMixtureModel>(model_).observe(prev_own, prev_opp, state,
                                                   opp_action);
      return;
  }
}

FpqLearner::FpqLearner(int n_states, int n_actions, int n_opp_actions,
                       const LearningParams& params,
                       const BeliefConfig& belief)
    : q_(n_states, n_actions, n_opp_actions),
      params_(params),
      belief_(belief, n_states, n_actions, n_opp_actions) {}

std::vector<double> FpqLearner::opponent_belief(int state) const {
  return belief_.predict(state, prev_own_, prev_opp_);
}

std::vector<double> FpqLearner::values(int state) const {
  const auto p = opponent_belief(state);
  std::vector<double> psi(q_.n_actions());
  for (int a = 0; a < q_.n_actions(); ++a) psi[a] = expected_q(q_, p, state, a);
  return psi;
}

std::vector<double> FpqLearner::policy(int state, double epsilon) const {
  return epsilon_greedy_distribution(values(state), epsilon);
}

void FpqLearner::observe(const Transition& t) {
  belief_.update(t.state, prev_own_, prev_opp_, t.opp_action);
  prev_own_ = t.action;
  prev_opp_ = t.opp_action;
  const auto next_belief = belief_.predict(t.next_state, prev_own_, prev_opp_);
  q_update_joint(q_, t.state, t.action, t.opp_action, t.reward, t.next_state,
                 next_belief, params_, t.terminal);
  if (t.terminal) reset_context();
}

void FpqLearner::reset_context() {
  prev_own_ = -1;
  prev_opp_ = -1;
}

FpqAgent::FpqAgent(const AgentConfig& config, const AgentContext& ctx)
    : learner_(ctx.n_states, ctx.n_actions, ctx.n_opp_actions,
               LearningParams(config.alpha, config.gamma, config.epsilon),
               config.belief),
      epsilon_(config.epsilon),
      rng_(ctx.seed) {}

int FpqAgent::act(int state) {
  return epsilon_greedy(learner_.values(state), epsilon_, rng_);
}

void FpqAgent::observe(const Transition& t) { learner_.observe(t); }

}  // namespace tmdp::agents
