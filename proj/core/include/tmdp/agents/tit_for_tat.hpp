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
#ifndef TMDP_AGENTS_TIT_FOR_TAT_HPP_
#define TMDP_AGENTS_TIT_FOR_TAT_HPP_

#include "tmdp/agents/agent.hpp"
#include "tmdp/env/matrix_game.hpp"

namespace tmdp::agents {

// Cooperates (action 0) from the initial state, then repeats whatever the
// counterpart played last round. Needs a memory-1 state space with the
// same number of actions on both sides.
class TitForTatAgent : public Agent {
 public:
  explicit TitForTatAgent(const AgentContext& ctx);

  AgentKind kind() const override { return AgentKind::kTitForTat; }
  int n_actions() const override { return encoding_.n_own_actions(); }
  int act(int state) override;
  void observe(const Transition&) override {}

 private:
  env::Memory1Encoding encoding_;
};

}  // namespace tmdp::agents

#endif  // TMDP_AGENTS_TIT_FOR_TAT_HPP_
