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
#include "tmdp/agents/independent_q.hpp"

namespace tmdp::agents {

IndependentQAgent::IndependentQAgent(const AgentConfig& config,
                                     const AgentContext& ctx)
    : q_(ctx.n_states, ctx.n_actions),
      params_(config.alpha, config.gamma, config.epsilon),
      epsilon_(config.epsilon),
      rng_(ctx.seed) {}

int IndependentQAgent::act(int state) {
  return epsilon_greedy(q_.row(state), epsilon_, rng_);
}

void IndependentQAgent::observe(const Transition& t) {
  q_update_independent(q_, t.state, t.action, t.reward, t.next_state, params_,
                       t.terminal);
}

}  // namespace tmdp::agents
