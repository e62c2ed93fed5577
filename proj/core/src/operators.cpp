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
#include "tmdp/operators.hpp"

#include <algorithm>
#include <cmath>

namespace tmdp {

TmdpSpec::TmdpSpec(int n_states, int n_dm_actions, int n_opp_actions,
                   std::vector<double> transition, std::vector<double> reward)
    : n_states_(n_states),
      n_dm_actions_(n_dm_actions),
      n_opp_actions_(n_opp_actions),
      transition_(std::move(transition)),
      reward_(std::move(reward)) {
  if (n_states <= 0 || n_dm_actions <= 0 || n_opp_actions <= 0) {
    throw ContractViolation("TmdpSpec dimensions must be positive");
  }
  const std::size_t n_triples =
      static_cast<std::size_t>(n_states) * n_dm_actions * n_opp_actions;
  if (reward_.size() != n_triples ||
      transition_.size() != n_triples * static_cast<std::size_t>(n_states)) {
    throw ContractViolation("TmdpSpec table sizes do not match dimensions");
  }
  for (double r : reward_) {
    if (!std::isfinite(r)) throw ContractViolation("non-finite reward");
  }
  for (std::size_t t = 0; t < n_triples; ++t) {
    check_distribution(
        std::span<const double>(transition_.data() + t * n_states, n_states),
        "transition row");
  }
}

std::size_t TmdpSpec::triple(int s, int a, int b) const {
  if (s < 0 || s >= n_states_ || a < 0 || a >= n_dm_actions_ || b < 0 ||
      b >= n_opp_actions_) {
    throw IndexError("TmdpSpec index out of range");
  }
  return (static_cast<std::size_t>(s) * n_dm_actions_ + a) * n_opp_actions_ +
         b;
}

double TmdpSpec::transition(int s, int a, int b, int s_next) const {
  if (s_next < 0 || s_next >= n_states_) throw IndexError("next state");
  return transition_[triple(s, a, b) * n_states_ + s_next];
}

double TmdpSpec::reward(int s, int a, int b) const {
  return reward_[triple(s, a, b)];
}

namespace {

std::vector<double> random_simplex_point(Rng& rng, int n) {
  // -log(U) draws normalized give a flat Dirichlet sample.
  std::vector<double> p(n);
  double total = 0.0;
  for (auto& x : p) {
    x = -std::log(1.0 - rng.uniform());
    total += x;
  }
  for (auto& x : p) x /= total;
  return p;
}

void check_shapes(const TmdpSpec& spec, const BeliefTable& belief,
                  double gamma) {
  if (!(gamma >= 0.0 && gamma <= 1.0)) {
    throw ContractViolation("operator discount must lie in [0,1]");
  }
  if (belief.n_states() != spec.n_states() ||
      belief.n_opp_actions() != spec.n_opp_actions()) {
    throw ContractViolation("belief dimensions do not match the TMDP");
  }
}

}  // namespace

TmdpSpec random_tmdp_spec(Rng& rng, int n_states, int n_dm_actions,
                          int n_opp_actions, double reward_scale) {
  const std::size_t n_triples =
      static_cast<std::size_t>(n_states) * n_dm_actions * n_opp_actions;
  std::vector<double> transition;
  transition.reserve(n_triples * n_states);
  std::vector<double> reward(n_triples);
  for (std::size_t t = 0; t < n_triples; ++t) {
    const auto row = random_simplex_point(rng, n_states);
    transition.insert(transition.end(), row.begin(), row.end());
    reward[t] = reward_scale * (2.0 * rng.uniform() - 1.0);
  }
  return TmdpSpec(n_states, n_dm_actions, n_opp_actions, std::move(transition),
                  std::move(reward));
}

BeliefTable random_belief(Rng& rng, int n_states, int n_opp_actions) {
  std::vector<std::vector<double>> rows;
  rows.reserve(n_states);
  for (int s = 0; s < n_states; ++s) {
    rows.push_back(random_simplex_point(rng, n_opp_actions));
  }
  return BeliefTable(std::move(rows));
}

JointQTable random_joint_q(Rng& rng, int n_states, int n_actions,
                           int n_opp_actions, double scale) {
  JointQTable q(n_states, n_actions, n_opp_actions);
  for (int s = 0; s < n_states; ++s)
    for (int a = 0; a < n_actions; ++a)
      for (int b = 0; b < n_opp_actions; ++b)
        q.at(s, a, b) = scale * (2.0 * rng.uniform() - 1.0);
  return q;
}

QTable random_q(Rng& rng, int n_states, int n_actions, double scale) {
  QTable q(n_states, n_actions);
  for (int s = 0; s < n_states; ++s)
    for (int a = 0; a < n_actions; ++a)
      q.at(s, a) = scale * (2.0 * rng.uniform() - 1.0);
  return q;
}

JointQTable apply_operator_h(const JointQTable& q, const TmdpSpec& spec,
                             const BeliefTable& belief, double gamma) {
  check_shapes(spec, belief, gamma);
  if (q.n_states() != spec.n_states() ||
      q.n_actions() != spec.n_dm_actions() ||
      q.n_opp_actions() != spec.n_opp_actions()) {
    throw ContractViolation("Q table dimensions do not match the TMDP");
  }
  // v(s') = max_a' E_{p(b'|s')} q(s',a',b') is shared by every (s,a,b).
  std::vector<double> v(spec.n_states());
  for (int sn = 0; sn < spec.n_states(); ++sn) {
    double best = expected_q(q, belief, sn, 0);
    for (int a = 1; a < spec.n_dm_actions(); ++a) {
      best = std::max(best, expected_q(q, belief, sn, a));
    }
    v[sn] = best;
  }
  JointQTable out(spec.n_states(), spec.n_dm_actions(), spec.n_opp_actions());
  for (int s = 0; s < spec.n_states(); ++s) {
    for (int a = 0; a < spec.n_dm_actions(); ++a) {
      for (int b = 0; b < spec.n_opp_actions(); ++b) {
        double total = 0.0;
        for (int sn = 0; sn < spec.n_states(); ++sn) {
          total += spec.transition(s, a, b, sn) *
                   (spec.reward(s, a, b) + gamma * v[sn]);
        }
        out.at(s, a, b) = total;
      }
    }
  }
  return out;
}

QTable apply_operator_hbar(const QTable& qbar, const TmdpSpec& spec,
                           const BeliefTable& belief, double gamma) {
  check_shapes(spec, belief, gamma);
  if (qbar.n_states() != spec.n_states() ||
      qbar.n_actions() != spec.n_dm_actions()) {
    throw ContractViolation("Q table dimensions do not match the TMDP");
  }
  std::vector<double> v(spec.n_states());
  for (int sn = 0; sn < spec.n_states(); ++sn) v[sn] = max_value(qbar.row(sn));

  QTable out(spec.n_states(), spec.n_dm_actions());
  for (int s = 0; s < spec.n_states(); ++s) {
    const auto p_b = belief.row(s);
    for (int a = 0; a < spec.n_dm_actions(); ++a) {
      double total = 0.0;
      for (int b = 0; b < spec.n_opp_actions(); ++b) {
        double inner = 0.0;
        for (int sn = 0; sn < spec.n_states(); ++sn) {
          inner += spec.transition(s, a, b, sn) *
                   (spec.reward(s, a, b) + gamma * v[sn]);
        }
        total += p_b[b] * inner;
      }
      out.at(s, a) = total;
    }
  }
  return out;
}

}  // namespace tmdp
