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
#include "tmdp/q_table.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tmdp/errors.hpp"

namespace tmdp {

LearningParams::LearningParams(double alpha, double gamma, double epsilon)
    : alpha(alpha), gamma(gamma), epsilon(epsilon) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw ContractViolation("alpha must lie in [0,1], got " +
                            std::to_string(alpha));
  }
  if (!(gamma >= 0.0 && gamma < 1.0)) {
    throw ContractViolation("gamma must lie in [0,1), got " +
                            std::to_string(gamma));
  }
  if (!(epsilon >= 0.0 && epsilon <= 1.0)) {
    throw ContractViolation("epsilon must lie in [0,1], got " +
                            std::to_string(epsilon));
  }
}

namespace {

void check_dims(int n, const char* what) {
  if (n <= 0) {
    throw ContractViolation(std::string(what) + " must be positive");
  }
}

}  // namespace

QTable::QTable(int n_states, int n_actions, double init)
    : n_states_(n_states), n_actions_(n_actions) {
  check_dims(n_states, "n_states");
  check_dims(n_actions, "n_actions");
  values_.assign(static_cast<std::size_t>(n_states) * n_actions, init);
}

void QTable::check(int s, int a) const {
  if (s < 0 || s >= n_states_ || a < 0 || a >= n_actions_) {
    throw IndexError("QTable index (" + std::to_string(s) + "," +
                     std::to_string(a) + ") out of range");
  }
}

double QTable::at(int s, int a) const {
  check(s, a);
  return values_[static_cast<std::size_t>(s) * n_actions_ + a];
}

double& QTable::at(int s, int a) {
  check(s, a);
  return values_[static_cast<std::size_t>(s) * n_actions_ + a];
}

std::span<const double> QTable::row(int s) const {
  check(s, 0);
  return {values_.data() + static_cast<std::size_t>(s) * n_actions_,
          static_cast<std::size_t>(n_actions_)};
}

std::span<double> QTable::row(int s) {
  check(s, 0);
  return {values_.data() + static_cast<std::size_t>(s) * n_actions_,
          static_cast<std::size_t>(n_actions_)};
}

double QTable::sup_distance(const QTable& other) const {
  if (n_states_ != other.n_states_ || n_actions_ != other.n_actions_) {
    throw ContractViolation("QTable dimension mismatch");
  }
  double d = 0.0;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    d = std::max(d, std::abs(values_[i] - other.values_[i]));
  }
  return d;
}

JointQTable::JointQTable(int n_states, int n_actions, int n_opp_actions,
                         double init)
    : n_states_(n_states), n_actions_(n_actions), n_opp_actions_(n_opp_actions) {
  check_dims(n_states, "n_states");
  check_dims(n_actions, "n_actions");
  check_dims(n_opp_actions, "n_opp_actions");
  values_.assign(
      static_cast<std::size_t>(n_states) * n_actions * n_opp_actions, init);
}

void JointQTable::check(int s, int a, int b) const {
  if (s < 0 || s >= n_states_ || a < 0 || a >= n_actions_ || b < 0 ||
      b >= n_opp_actions_) {
    throw IndexError("JointQTable index (" + std::to_string(s) + "," +
                     std::to_string(a) + "," + std::to_string(b) +
                     ") out of range");
  }
}

double JointQTable::at(int s, int a, int b) const {
  check(s, a, b);
  return values_[(static_cast<std::size_t>(s) * n_actions_ + a) *
                     n_opp_actions_ + b];
}

double& JointQTable::at(int s, int a, int b) {
  check(s, a, b);
  return values_[(static_cast<std::size_t>(s) * n_actions_ + a) *
                     n_opp_actions_ + b];
}

std::span<const double> JointQTable::slice(int s, int a) const {
  check(s, a, 0);
  return {values_.data() +
              (static_cast<std::size_t>(s) * n_actions_ + a) * n_opp_actions_,
          static_cast<std::size_t>(n_opp_actions_)};
}

double JointQTable::sup_distance(const JointQTable& other) const {
  if (n_states_ != other.n_states_ || n_actions_ != other.n_actions_ ||
      n_opp_actions_ != other.n_opp_actions_) {
    throw ContractViolation("JointQTable dimension mismatch");
  }
  double d = 0.0;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    d = std::max(d, std::abs(values_[i] - other.values_[i]));
  }
  return d;
}

BeliefTable::BeliefTable(int n_states, int n_opp_actions)
    : n_states_(n_states), n_opp_actions_(n_opp_actions) {
  check_dims(n_states, "n_states");
  check_dims(n_opp_actions, "n_opp_actions");
  probs_.assign(static_cast<std::size_t>(n_states) * n_opp_actions,
                1.0 / n_opp_actions);
}

BeliefTable::BeliefTable(std::vector<std::vector<double>> rows) {
  if (rows.empty() || rows.front().empty()) {
    throw ContractViolation("BeliefTable needs at least one non-empty row");
  }
  n_states_ = static_cast<int>(rows.size());
  n_opp_actions_ = static_cast<int>(rows.front().size());
  probs_.reserve(static_cast<std::size_t>(n_states_) * n_opp_actions_);
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != n_opp_actions_) {
      throw ContractViolation("BeliefTable rows must have equal length");
    }
    check_distribution(r, "belief row");
    probs_.insert(probs_.end(), r.begin(), r.end());
  }
}

BeliefTable BeliefTable::point_mass(int n_states, int n_opp_actions, int b) {
  if (b < 0 || b >= n_opp_actions) throw IndexError("point mass index");
  BeliefTable t(n_states, n_opp_actions);
  std::fill(t.probs_.begin(), t.probs_.end(), 0.0);
  for (int s = 0; s < n_states; ++s) {
    t.probs_[static_cast<std::size_t>(s) * n_opp_actions + b] = 1.0;
  }
  return t;
}

std::span<const double> BeliefTable::row(int s) const {
  if (s < 0 || s >= n_states_) {
    throw IndexError("BeliefTable state " + std::to_string(s));
  }
  return {probs_.data() + static_cast<std::size_t>(s) * n_opp_actions_,
          static_cast<std::size_t>(n_opp_actions_)};
}

void BeliefTable::set_row(int s, std::span<const double> probs) {
  if (s < 0 || s >= n_states_) {
    throw IndexError("BeliefTable state " + std::to_string(s));
  }
  if (static_cast<int>(probs.size()) != n_opp_actions_) {
    throw ContractViolation("belief row has wrong length");
  }
  check_distribution(probs, "belief row");
  std::copy(probs.begin(), probs.end(),
            probs_.begin() + static_cast<std::ptrdiff_t>(s) * n_opp_actions_);
}

void check_distribution(std::span<const double> probs, const char* what) {
  if (probs.empty()) {
    throw ContractViolation(std::string(what) + " is empty");
  }
  double total = 0.0;
  for (double p : probs) {
    if (!(p >= 0.0) || !std::isfinite(p)) {
      throw ContractViolation(std::string(what) +
                              " has a negative or non-finite entry");
    }
    total += p;
  }
  if (std::abs(total - 1.0) > kNormTolerance) {
    throw ContractViolation(std::string(what) + " sums to " +
                            std::to_string(total) + ", not 1");
  }
}

int argmax(std::span<const double> values) {
  if (values.empty()) throw ContractViolation("argmax of empty vector");
  int best = 0;
  for (int i = 1; i < static_cast<int>(values.size()); ++i) {
    if (values[i] > values[best]) best = i;
  }
  return best;
}

double max_value(std::span<const double> values) {
  return values[argmax(values)];
}

void q_update_independent(QTable& q, int s, int a, double r, int s_next,
                          const LearningParams& params, bool terminal) {
  double& entry = q.at(s, a);
  const auto next_row = q.row(s_next);
  const double continuation = terminal ? 0.0 : max_value(next_row);
  entry = (1.0 - params.alpha) * entry +
          params.alpha * (r + params.gamma * continuation);
}

double expected_q(const JointQTable& q, std::span<const double> belief_row,
                  int s, int a) {
  if (static_cast<int>(belief_row.size()) != q.n_opp_actions()) {
    throw ContractViolation("belief row length does not match |B|");
  }
  check_distribution(belief_row, "belief row");
  const auto values = q.slice(s, a);
  double total = 0.0;
  for (std::size_t b = 0; b < values.size(); ++b) {
    total += values[b] * belief_row[b];
  }
  return total;
}

double expected_q(const JointQTable& q, const BeliefTable& belief, int s,
                  int a) {
  return expected_q(q, belief.row(s), s, a);
}

namespace {

double best_expected(const JointQTable& q, std::span<const double> belief,
                     int s) {
  double best = expected_q(q, belief, s, 0);
  for (int a = 1; a < q.n_actions(); ++a) {
    best = std::max(best, expected_q(q, belief, s, a));
  }
  return best;
}

}  // namespace

void q_update_joint(JointQTable& q, int s, int a, int b, double r, int s_next,
                    std::span<const double> next_belief,
                    const LearningParams& params, bool terminal) {
  q.at(s, a, b);
  if (s_next < 0 || s_next >= q.n_states()) {
    throw IndexError("next state " + std::to_string(s_next));
  }
  const double continuation =
      terminal ? 0.0 : best_expected(q, next_belief, s_next);
  double& entry = q.at(s, a, b);
  entry = (1.0 - params.alpha) * entry +
          params.alpha * (r + params.gamma * continuation);
}

void q_update_joint(JointQTable& q, int s, int a, int b, double r, int s_next,
                    const BeliefTable& belief, const LearningParams& params,
                    bool terminal) {
  q_update_joint(q, s, a, b, r, s_next, belief.row(s_next), params, terminal);
}

}  // namespace tmdp
