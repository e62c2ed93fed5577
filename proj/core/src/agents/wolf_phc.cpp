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
#include "tmdp/agents/wolf_phc.hpp"

#include <algorithm>

#include "tmdp/errors.hpp"

namespace tmdp::agents {

void phc_step(std::span<double> policy, int greedy, double delta) {
  const int n = static_cast<int>(policy.size());
  if (greedy < 0 || greedy >= n) throw IndexError("greedy action");
  if (n == 1) {
    policy[0] = 1.0;
    return;
  }
  for (int a = 0; a < n; ++a) {
    policy[a] += a == greedy ? delta : -delta / (n - 1);
    policy[a] = std::clamp(policy[a], 0.0, 1.0);
  }
  double total = 0.0;
  for (double p : policy) total += p;
  for (double& p : policy) p /= total;
}

WolfPhcAgent::WolfPhcAgent(const AgentConfig& config, const AgentContext& ctx)
    : q_(ctx.n_states, ctx.n_actions),
      params_(config.alpha, config.gamma, config.epsilon),
      epsilon_(config.epsilon),
      delta_win_(config.delta_win),
      delta_lose_(config.delta_lose),
      policy_(static_cast<std::size_t>(ctx.n_states) * ctx.n_actions,
              1.0 / ctx.n_actions),
      average_(policy_),
      visits_(ctx.n_states, 0),
      rng_(ctx.seed) {
  if (!(delta_win_ > 0.0) || !(delta_lose_ > delta_win_)) {
    throw ContractViolation("wolf-phc needs 0 < delta_win < delta_lose");
  }
}

std::span<const double> WolfPhcAgent::policy(int state) const {
  q_.row(state);
  return {policy_.data() + static_cast<std::size_t>(state) * q_.n_actions(),
          static_cast<std::size_t>(q_.n_actions())};
}

std::span<const double> WolfPhcAgent::average_policy(int state) const {
  q_.row(state);
  return {average_.data() + static_cast<std::size_t>(state) * q_.n_actions(),
          static_cast<std::size_t>(q_.n_actions())};
}

int WolfPhcAgent::act(int state) {
  const auto pi = policy(state);
  const double u = rng_.uniform();
  if (u < epsilon_) return rng_.uniform_int(static_cast<int>(pi.size()));
  double x = rng_.uniform();
  for (int a = 0; a < static_cast<int>(pi.size()); ++a) {
    x -= pi[a];
    if (x < 0.0) return a;
  }
  return static_cast<int>(pi.size()) - 1;
}

void WolfPhcAgent::observe(const Transition& t) {
  q_update_independent(q_, t.state, t.action, t.reward, t.next_state, params_,
                       t.terminal);
  const int n = q_.n_actions();
  const std::size_t base = static_cast<std::size_t>(t.state) * n;
  std::span<double> pi(policy_.data() + base, n);
  std::span<double> avg(average_.data() + base, n);

  const double count = static_cast<double>(++visits_[t.state]);
  for (int a = 0; a < n; ++a) avg[a] += (pi[a] - avg[a]) / count;

  const auto q = q_.row(t.state);
  double current = 0.0;
  double average = 0.0;
  for (int a = 0; a < n; ++a) {
    current += pi[a] * q[a];
    average += avg[a] * q[a];
  }
  const double delta = current >= average ? delta_win_ : delta_lose_;
  phc_step(pi, argmax(q), delta);
}

}  // namespace tmdp::agents
