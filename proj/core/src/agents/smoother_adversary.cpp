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
#include "tmdp/agents/smoother_adversary.hpp"

#include <string>

#include "tmdp/errors.hpp"

namespace tmdp::agents {

SmootherAdversaryAgent::SmootherAdversaryAgent(const AgentConfig& config,
                                               const AgentContext& ctx)
    : p_(ctx.n_actions, 1.0 / ctx.n_actions), alpha_(config.smoother_alpha) {
  if (!(alpha_ > 0.0 && alpha_ <= 1.0)) {
    throw ContractViolation("smoother alpha must lie in (0,1]");
  }
}

int SmootherAdversaryAgent::act(int) {
  int best = 0;
  for (int i = 1; i < static_cast<int>(p_.size()); ++i) {
    if (p_[i] < p_[best]) best = i;
  }
  return best;
}

void SmootherAdversaryAgent::smooth(int dm_choice) {
  if (dm_choice < 0 || dm_choice >= static_cast<int>(p_.size())) {
    throw IndexError("DM choice " + std::to_string(dm_choice));
  }
  for (int i = 0; i < static_cast<int>(p_.size()); ++i) {
    p_[i] = alpha_ * p_[i] + (1.0 - alpha_) * (i == dm_choice ? 1.0 : 0.0);
  }
}

void SmootherAdversaryAgent::observe(const Transition& t) {
  smooth(t.opp_action);
}

void SmootherAdversaryAgent::end_episode(const EpisodeOutcome& outcome) {
  if (outcome.dm_target >= 0) smooth(outcome.dm_target);
}

}  // namespace tmdp::agents
