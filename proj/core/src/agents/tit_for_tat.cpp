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
#include "tmdp/agents/tit_for_tat.hpp"

#include <string>

#include "tmdp/errors.hpp"

namespace tmdp::agents {

TitForTatAgent::TitForTatAgent(const AgentContext& ctx)
    : encoding_(ctx.n_actions, ctx.n_opp_actions) {
  if (ctx.n_actions != ctx.n_opp_actions) {
    throw ContractViolation("tit-for-tat needs symmetric action spaces");
  }
  if (ctx.n_states != encoding_.n_states()) {
    throw ContractViolation(
        "tit-for-tat needs a memory-1 state space of " +
        std::to_string(encoding_.n_states()) + " states, got " +
        std::to_string(ctx.n_states));
  }
}

int TitForTatAgent::act(int state) {
  if (state < 0 || state >= encoding_.n_states()) {
    throw ContractViolation("state " + std::to_string(state) +
                            " is not memory-1 encoded");
  }
  if (state == env::Memory1Encoding::kInitialState) return 0;
  return encoding_.decode(state).opp_action;
}

}  // namespace tmdp::agents
