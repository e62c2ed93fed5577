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
#include "tmdp/env/matrix_game.hpp"

#include "tmdp/errors.hpp"

namespace tmdp::env {

PayoffBimatrix::PayoffBimatrix(
    std::vector<std::vector<std::pair<double, double>>> rewards,
    std::vector<std::string> row_labels, std::vector<std::string> col_labels)
    : row_labels_(std::move(row_labels)), col_labels_(std::move(col_labels)) {
  if (rewards.empty() || rewards.front().empty()) {
    throw ContractViolation("bimatrix must be non-empty");
  }
  n_rows_ = static_cast<int>(rewards.size());
  n_cols_ = static_cast<int>(rewards.front().size());
  for (const auto& row : rewards) {
    if (static_cast<int>(row.size()) != n_cols_) {
      throw ContractViolation("bimatrix must be rectangular");
    }
    rewards_.insert(rewards_.end(), row.begin(), row.end());
  }
  if (!row_labels_.empty() && static_cast<int>(row_labels_.size()) != n_rows_) {
    throw ContractViolation("row labels do not match the bimatrix");
  }
  if (!col_labels_.empty() && static_cast<int>(col_labels_.size()) != n_cols_) {
    throw ContractViolation("column labels do not match the bimatrix");
  }
}

std::pair<double, double> PayoffBimatrix::at(int a, int b) const {
  if (a < 0 || a >= n_rows_ || b < 0 || b >= n_cols_) {
    throw IndexError("bimatrix index (" + std::to_string(a) + "," +
                     std::to_string(b) + ")");
  }
  return rewards_[static_cast<std::size_t>(a) * n_cols_ + b];
}

PayoffBimatrix prisoners_dilemma() {
  return PayoffBimatrix({{{-1, -1}, {-3, 0}}, {{0, -3}, {-2, -2}}},
                        {"C", "D"}, {"C", "D"});
}

PayoffBimatrix stag_hunt() {
  return PayoffBimatrix({{{2, 2}, {0, 1}}, {{1, 0}, {1, 1}}}, {"C", "D"},
                        {"C", "D"});
}

PayoffBimatrix chicken() {
  return PayoffBimatrix({{{0, 0}, {-2, 1}}, {{1, -2}, {-4, -4}}}, {"C", "D"},
                        {"C", "D"});
}

std::pair<double, double> foe_stateless_step(int adversary_target,
                                             int dm_choice, double magnitude,
                                             AdversaryScaling scaling) {
  if (adversary_target < 0 || adversary_target > 1 || dm_choice < 0 ||
      dm_choice > 1) {
    throw IndexError("friend-or-foe targets are 0 and 1");
  }
  const bool hit = adversary_target == dm_choice;
  const double r_dm = hit ? magnitude : -magnitude;
  switch (scaling) {
    case AdversaryScaling::kZeroSum: return {r_dm, -r_dm};
    case AdversaryScaling::kBinary: return {r_dm, hit ? 0.0 : 1.0};
    case AdversaryScaling::kSign: return {r_dm, hit ? -1.0 : 1.0};
  }
  return {r_dm, -r_dm};
}

PayoffBimatrix friend_or_foe(double magnitude, AdversaryScaling scaling) {
  std::vector<std::vector<std::pair<double, double>>> rewards(2);
  for (int dm = 0; dm < 2; ++dm) {
    for (int target = 0; target < 2; ++target) {
      rewards[dm].push_back(foe_stateless_step(target, dm, magnitude, scaling));
    }
  }
  return PayoffBimatrix(std::move(rewards), {"target1", "target2"},
                        {"target1", "target2"});
}

std::pair<double, double> matrix_step(const PayoffBimatrix& game, int a,
                                      int b) {
  return game.at(a, b);
}

Memory1Encoding::Memory1Encoding(int n_own_actions, int n_opp_actions)
    : n_own_(n_own_actions), n_opp_(n_opp_actions) {
  if (n_own_ <= 0 || n_opp_ <= 0) {
    throw ContractViolation("memory-1 encoding needs positive action counts");
  }
}

int Memory1Encoding::encode(int own_action, int opp_action) const {
  if (own_action < 0 || own_action >= n_own_ || opp_action < 0 ||
      opp_action >= n_opp_) {
    throw IndexError("memory-1 joint action out of range");
  }
  return 1 + own_action * n_opp_ + opp_action;
}

JointAction Memory1Encoding::decode(int state) const {
  if (state <= kInitialState || state >= n_states()) {
    throw ContractViolation("state " + std::to_string(state) +
                            " does not encode a joint action");
  }
  return {(state - 1) / n_opp_, (state - 1) % n_opp_};
}

int memory1_transition(const Memory1Encoding& encoding, int prev_state, int a,
                       int b) {
  if (prev_state < 0 || prev_state >= encoding.n_states()) {
    throw IndexError("memory-1 state " + std::to_string(prev_state));
  }
  return encoding.encode(a, b);
}

RepeatedGame::RepeatedGame(PayoffBimatrix game, bool memory1)
    : game_(std::move(game)),
      memory1_(memory1),
      dm_encoding_(game_.n_rows(), game_.n_cols()),
      opp_encoding_(game_.n_cols(), game_.n_rows()) {}

int RepeatedGame::n_states() const {
  return memory1_ ? dm_encoding_.n_states() : 1;
}

int RepeatedGame::reset() {
  state_ = 0;
  return state_;
}

int RepeatedGame::opponent_state() const {
  if (!memory1_ || state_ == Memory1Encoding::kInitialState) return state_;
  const auto joint = dm_encoding_.decode(state_);
  return opp_encoding_.encode(joint.opp_action, joint.own_action);
}

RepeatedGame::StepResult RepeatedGame::step(int a, int b) {
  const auto [r_dm, r_opp] = matrix_step(game_, a, b);
  if (memory1_) state_ = memory1_transition(dm_encoding_, state_, a, b);
  return {r_dm, r_opp, state_, opponent_state()};
}

}  // namespace tmdp::env
