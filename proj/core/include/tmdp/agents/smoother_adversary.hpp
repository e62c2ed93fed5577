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
#ifndef TMDP_AGENTS_SMOOTHER_ADVERSARY_HPP_
#define TMDP_AGENTS_SMOOTHER_ADVERSARY_HPP_

#include <vector>

#include "tmdp/agents/agent.hpp"

namespace tmdp::agents {

// Adaptive friend-or-foe adversary. Tracks the DM's target preferences with
// an exponential smoother p := alpha p + (1 - alpha) onehot(choice) and
// hides the reward in the target the DM is least likely to pick.
class SmootherAdversaryAgent : public Agent {
 public:
  SmootherAdversaryAgent(const AgentConfig& config, const AgentContext& ctx);

  AgentKind kind() const override { return AgentKind::kSmootherAdversary; }
  int n_actions() const override { return static_cast<int>(p_.size()); }
  // argmin_i p_i, lowest index on ties. The state is ignored.
  int act(int state) override;
  // Per-round variant: smooths with the DM's choice t.opp_action.
  void observe(const Transition& t) override;
  // Spatial variant: smooths with the DM's realized target, if any.
  void end_episode(const EpisodeOutcome& outcome) override;

  void smooth(int dm_choice);
  const std::vector<double>& estimate() const { return p_; }
  double smoother_alpha() const { return alpha_; }

 private:
  std::vector<double> p_;
  double alpha_;
};

}  // namespace tmdp::agents

#endif  // TMDP_AGENTS_SMOOTHER_ADVERSARY_HPP_
