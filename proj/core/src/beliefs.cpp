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
#include "tmdp/beliefs.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "tmdp/errors.hpp"
#include "tmdp/q_table.hpp"

namespace tmdp {

DirichletBelief::DirichletBelief(int n_actions, double prior,
                                 double forget_lambda)
    : DirichletBelief(
          std::vector<double>(n_actions > 0 ? n_actions : 0, prior),
          forget_lambda) {
  if (n_actions <= 0) throw ContractViolation("belief needs >= 1 action");
}

DirichletBelief::DirichletBelief(std::vector<double> pseudocounts,
                                 double forget_lambda)
    : pseudocounts_(std::move(pseudocounts)), forget_lambda_(forget_lambda) {
  if (pseudocounts_.empty()) {
    throw ContractViolation("belief needs >= 1 action");
  }
  if (!(forget_lambda > 0.0 && forget_lambda <= 1.0)) {
    throw ContractViolation("forget lambda must lie in (0,1]");
  }
  for (double c : pseudocounts_) {
    if (!(c >= 0.0) || !std::isfinite(c)) {
      throw ContractViolation("pseudocounts must be finite and >= 0");
    }
  }
}

double DirichletBelief::total() const {
  return std::accumulate(pseudocounts_.begin(), pseudocounts_.end(), 0.0);
}

void DirichletBelief::check_action(int action) const {
  if (action < 0 || action >= size()) {
    throw IndexError("opponent action " + std::to_string(action) +
                     " outside belief of size " + std::to_string(size()));
  }
}

void DirichletBelief::observe(int action) {
  check_action(action);
  pseudocounts_[action] += 1.0;
}

void DirichletBelief::forget_observe(int action) {
  check_action(action);
  for (auto& c : pseudocounts_) c *= forget_lambda_;
  pseudocounts_[action] += 1.0;
}

std::vector<double> DirichletBelief::predictive() const {
  const double t = total();
  if (!(t > 0.0)) {
    throw ContractViolation("predictive undefined for all-zero pseudocounts");
  }
  std::vector<double> p(pseudocounts_.size());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = pseudocounts_[i] / t;
  return p;
}

ConditionalDirichlet::ConditionalDirichlet(int n_contexts, int n_actions,
                                           double prior, double forget_lambda) {
  if (n_contexts <= 0) throw ContractViolation("need >= 1 context");
  rows_.assign(n_contexts, DirichletBelief(n_actions, prior, forget_lambda));
}

const DirichletBelief& ConditionalDirichlet::at(int context) const {
  if (context < 0 || context >= n_contexts()) {
    throw IndexError("belief context " + std::to_string(context));
  }
  return rows_[context];
}

DirichletBelief& ConditionalDirichlet::at(int context) {
  if (context < 0 || context >= n_contexts()) {
    throw IndexError("belief context " + std::to_string(context));
  }
  return rows_[context];
}

void ConditionalDirichlet::update(int context, int action) {
  auto& belief = at(context);
  if (belief.forget_lambda() < 1.0) {
    belief.forget_observe(action);
  } else {
    belief.observe(action);
  }
}

std::vector<double> ConditionalDirichlet::predictive(int context) const {
  return at(context).predictive();
}

MarkovMixtureModel::MarkovMixtureModel(std::array<double, 3> weights,
                                       int n_own_actions, int n_opp_actions,
                                       int n_states, double prior,
                                       double forget_lambda)
    : weights_(weights),
      n_own_actions_(n_own_actions),
      n_opp_actions_(n_opp_actions),
      by_prev_own_(n_own_actions + 1, n_opp_actions, prior, forget_lambda),
      by_prev_opp_(n_opp_actions + 1, n_opp_actions, prior, forget_lambda),
      by_state_(n_states, n_opp_actions, prior, forget_lambda) {
  check_distribution(weights_, "mixture weights");
}

int MarkovMixtureModel::own_context(int prev_own) const {
  if (prev_own < -1 || prev_own >= n_own_actions_) {
    throw IndexError("previous own action " + std::to_string(prev_own));
  }
  return prev_own < 0 ? n_own_actions_ : prev_own;
}

int MarkovMixtureModel::opp_context(int prev_opp) const {
  if (prev_opp < -1 || prev_opp >= n_opp_actions_) {
    throw IndexError("previous opponent action " + std::to_string(prev_opp));
  }
  return prev_opp < 0 ? n_opp_actions_ : prev_opp;
}

void MarkovMixtureModel::observe(int prev_own, int prev_opp, int state,
                                 int opp_action) {
  by_prev_own_.update(own_context(prev_own), opp_action);
  by_prev_opp_.update(opp_context(prev_opp), opp_action);
  by_state_.update(state, opp_action);
}

std::vector<double> MarkovMixtureModel::predictive(int prev_own, int prev_opp,
                                                   int state) const {
  return mixture_predictive(weights_,
                            by_prev_own_.predictive(own_context(prev_own)),
                            by_prev_opp_.predictive(opp_context(prev_opp)),
                            by_state_.predictive(state));
}

std::vector<double> mixture_predictive(const std::array<double, 3>& weights,
                                       const std::vector<double>& by_prev_own,
                                       const std::vector<double>& by_prev_opp,
                                       const std::vector<double>& by_state) {
  check_distribution(weights, "mixture weights");
  if (by_prev_own.size() != by_prev_opp.size() ||
      by_prev_own.size() != by_state.size()) {
    throw ContractViolation("mixture components differ in length");
  }
  std::vector<double> out(by_state.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = weights[0] * by_prev_own[i] + weights[1] * by_prev_opp[i] +
             weights[2] * by_state[i];
  }
  return out;
}

}  // namespace tmdp
