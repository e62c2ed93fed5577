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
#ifndef TMDP_AGENTS_WOLF_PHC_HPP_
#define TMDP_AGENTS_WOLF_PHC_HPP_

#include <span>
#include <vector>

#include "tmdp/agents/agent.hpp"
#include "tmdp/q_table.hpp"

namespace tmdp::agents {

// Moves probability delta onto greedy (taking delta/(n-1) from each other
// action), clips to [0,1] and renormalizes.
void phc_step(std::span<double> policy, int greedy, double delta);

// Win-or-Learn-Fast policy hill climbing (Bowling & Veloso, 2001).
class WolfPhcAgent : public Agent {
 public:
  WolfPhcAgent(const AgentConfig& config, const AgentContext& ctx);

  AgentKind kind() const override { return AgentKind::kWolfPhc; }
  int n_actions() const override { return q_.n_actions(); }
  // With probability epsilon a uniform action, otherwise a draw from pi(s).
  int act(int state) override;
  // Q update, average-policy update, then a hill-climbing step of delta_win
  // when pi(s) scores at least as well as the average policy under Q,
  // delta_lose otherwise.
  void observe(const Transition& t) override;
  double epsilon() const override { return epsilon_; }
  void scale_exploration(double own, double) override { epsilon_ *= own; }

  std::span<const double> policy(int state) const;
  std::span<const double> average_policy(int state) const;
  long visits(int state) const { return visits_.at(state); }
  const QTable& q() const { return q_; }

 private:
  QTable q_;
  LearningParams params_;
  double epsilon_;
  double delta_win_;
  double delta_lose_;
  std::vector<double> policy_;
  std::vector<double> average_;
  std::vector<long> visits_;
  Rng rng_;
};

}  // namespace tmdp::agents

#endif  // TMDP_AGENTS_WOLF_PHC_HPP_
