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
#ifndef TMDP_BELIEFS_HPP_
#define TMDP_BELIEFS_HPP_

#include <array>
#include <vector>

namespace tmdp {

// Dirichlet posterior over the opponent's next action, stored as the merged
// pseudocounts alpha_i + h_i. Pseudocounts are real-valued because the forget
// factor rescales them.
class DirichletBelief {
 public:
  DirichletBelief() = default;
  // Symmetric prior with the given pseudocount per action.
  DirichletBelief(int n_actions, double prior, double forget_lambda = 1.0);
  explicit DirichletBelief(std::vector<double> pseudocounts,
                           double forget_lambda = 1.0);

  int size() const { return static_cast<int>(pseudocounts_.size()); }
  double forget_lambda() const { return forget_lambda_; }
  const std::vector<double>& pseudocounts() const { return pseudocounts_; }
  double total() const;

  // Conjugate update: pseudocount of action += 1.
  void observe(int action);
  // Rescale every pseudocount by lambda, then add one to the observed action.
  void forget_observe(int action);
  // Posterior mean, i.e. pseudocounts / total.
  std::vector<double> predictive() const;

  bool operator==(const DirichletBelief&) const = default;

 private:
  void check_action(int action) const;

  std::vector<double> pseudocounts_;
  double forget_lambda_ = 1.0;
};

// One DirichletBelief per context (a state, a previous action, ...).
class ConditionalDirichlet {
 public:
  ConditionalDirichlet() = default;
  ConditionalDirichlet(int n_contexts, int n_actions, double prior,
                       double forget_lambda = 1.0);

  int n_contexts() const { return static_cast<int>(rows_.size()); }
  // Uses forget_observe when the belief was built with lambda < 1.
  void update(int context, int action);
  std::vector<double> predictive(int context) const;
  const DirichletBelief& at(int context) const;
  DirichletBelief& at(int context);

 private:
  std::vector<DirichletBelief> rows_;
};

// p(b_t | a_{t-1}, b_{t-1}, s_t) approximated as
//   w1 p(b_t | a_{t-1}) + w2 p(b_t | b_{t-1}) + w3 p(b_t | s_t).
// Previous actions use -1 for "no previous round"; that maps onto an extra
// context at the end of each family. The weights are configuration.
class MarkovMixtureModel {
 public:
  MarkovMixtureModel(std::array<double, 3> weights, int n_own_actions,
                     int n_opp_actions, int n_states, double prior = 1.0,
                     double forget_lambda = 1.0);

  const std::array<double, 3>& weights() const { return weights_; }
  void observe(int prev_own, int prev_opp, int state, int opp_action);
  std::vector<double> predictive(int prev_own, int prev_opp, int state) const;

  const ConditionalDirichlet& by_prev_own() const { return by_prev_own_; }
  const ConditionalDirichlet& by_prev_opp() const { return by_prev_opp_; }
  const ConditionalDirichlet& by_state() const { return by_state_; }
  ConditionalDirichlet& by_prev_own() { return by_prev_own_; }
  ConditionalDirichlet& by_prev_opp() { return by_prev_opp_; }
  ConditionalDirichlet& by_state() { return by_state_; }

 private:
  int own_context(int prev_own) const;
  int opp_context(int prev_opp) const;

  std::array<double, 3> weights_;
  int n_own_actions_;
  int n_opp_actions_;
  ConditionalDirichlet by_prev_own_;
  ConditionalDirichlet by_prev_opp_;
  ConditionalDirichlet by_state_;
};

// Convex combination of three component predictives.
std::vector<double> mixture_predictive(const std::array<double, 3>& weights,
                                       const std::vector<double>& by_prev_own,
                                       const std::vector<double>& by_prev_opp,
                                       const std::vector<double>& by_state);

}  // namespace tmdp

#endif  // TMDP_BELIEFS_HPP_
