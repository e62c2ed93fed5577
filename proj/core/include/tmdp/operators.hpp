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
#ifndef TMDP_OPERATORS_HPP_
#define TMDP_OPERATORS_HPP_

#include <functional>
#include <string>
#include <vector>

#include "tmdp/errors.hpp"
#include "tmdp/q_table.hpp"
#include "tmdp/rng.hpp"

namespace tmdp {

// An explicitly enumerated TMDP: states, DM actions A, opponent actions B,
// transition kernel p(s'|s,a,b) and deterministic reward r(s,a,b).
// Only the operator checks use this; the learning agents are model-free.
class TmdpSpec {
 public:
  // transition is indexed [((s*|A| + a)*|B| + b)*|S| + s'], reward is
  // indexed [(s*|A| + a)*|B| + b]. Rows must be distributions.
  TmdpSpec(int n_states, int n_dm_actions, int n_opp_actions,
           std::vector<double> transition, std::vector<double> reward);

  int n_states() const { return n_states_; }
  int n_dm_actions() const { return n_dm_actions_; }
  int n_opp_actions() const { return n_opp_actions_; }

  double transition(int s, int a, int b, int s_next) const;
  double reward(int s, int a, int b) const;

 private:
  std::size_t triple(int s, int a, int b) const;

  int n_states_;
  int n_dm_actions_;
  int n_opp_actions_;
  std::vector<double> transition_;
  std::vector<double> reward_;
};

// Random TMDP with Dirichlet(1,...,1)-like transition rows (normalized
// uniform draws) and rewards uniform in [-reward_scale, reward_scale].
TmdpSpec random_tmdp_spec(Rng& rng, int n_states, int n_dm_actions,
                          int n_opp_actions, double reward_scale = 10.0);
// Random belief rows over a TMDP's state and opponent spaces.
BeliefTable random_belief(Rng& rng, int n_states, int n_opp_actions);
JointQTable random_joint_q(Rng& rng, int n_states, int n_actions,
                           int n_opp_actions, double scale = 10.0);
QTable random_q(Rng& rng, int n_states, int n_actions, double scale = 10.0);

// (Hq)(s,a,b) = sum_s' p(s'|s,a,b) [ r(s,a,b)
//                 + gamma max_a' sum_b' p(b'|s') q(s',a',b') ].
JointQTable apply_operator_h(const JointQTable& q, const TmdpSpec& spec,
                             const BeliefTable& belief, double gamma);

// (Hbar qbar)(s,a) = sum_b p(b|s) sum_s' p(s'|s,a,b)
//                    [ r(s,a,b) + gamma max_a' qbar(s',a') ].
QTable apply_operator_hbar(const QTable& qbar, const TmdpSpec& spec,
                           const BeliefTable& belief, double gamma);

template <typename Table>
struct FixedPointResult {
  Table value;
  int iterations = 0;
  // residuals[k] = ||T(q_k) - q_k||_inf for every iterate visited.
  std::vector<double> residuals;
};

// Iterates q <- op(q) until ||op(q) - q||_inf < tol. The returned value is the
// last iterate whose residual passed the test. Throws NonConvergenceError
// carrying the last residual when max_iters is exhausted.
template <typename Table>
FixedPointResult<Table> fixed_point_iterate(
    const std::function<Table(const Table&)>& op, Table q0, double tol,
    int max_iters) {
  if (!(tol > 0.0)) throw ContractViolation("tol must be positive");
  if (max_iters < 1) throw ContractViolation("max_iters must be >= 1");
  FixedPointResult<Table> out{std::move(q0), 0, {}};
  for (int k = 0; k < max_iters; ++k) {
    Table next = op(out.value);
    const double residual = next.sup_distance(out.value);
    out.residuals.push_back(residual);
    out.iterations = k + 1;
    if (residual < tol) return out;
    out.value = std::move(next);
  }
  throw NonConvergenceError(
      "fixed point iteration did not converge, last residual " +
          std::to_string(out.residuals.back()),
      out.residuals.back(), out.iterations);
}

}  // namespace tmdp

#endif  // TMDP_OPERATORS_HPP_
