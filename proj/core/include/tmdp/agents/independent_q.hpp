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
#ifndef TMDP_AGENTS_INDEPENDENT_Q_HPP_
#define TMDP_AGENTS_INDEPENDENT_Q_HPP_

#include "tmdp/agents/agent.hpp"
#include "tmdp/q_table.hpp"

namespace tmdp::agents {

// Opponent-unaware tabular Q-learner.
class IndependentQAgent : public Agent {
 public:
  IndependentQAgent(const AgentConfig& config, const AgentContext& ctx);

  AgentKind kind() const override { return AgentKind::kIndependentQ; }
  int n_actions() const override { return q_.n_actions(); }
  int act(int state) override;
  void observe(const Transition& t) override;
  double epsilon() const override { return epsilon_; }
  void scale_exploration(double own, double) override { epsilon_ *= own; }

  const QTable& q() const { return q_; }

 private:
  QTable q_;
  LearningParams params_;
  double epsilon_;
  Rng rng_;
};

}  // namespace tmdp::agents

#endif  // TMDP_AGENTS_INDEPENDENT_Q_HPP_
