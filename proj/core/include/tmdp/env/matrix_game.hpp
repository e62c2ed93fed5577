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
#ifndef TMDP_ENV_MATRIX_GAME_HPP_
#define TMDP_ENV_MATRIX_GAME_HPP_

#include <string>
#include <utility>
#include <vector>

namespace tmdp::env {

// (r_A, r_B) for every (row action, column action). The DM plays rows.
class PayoffBimatrix {
 public:
  PayoffBimatrix(std::vector<std::vector<std::pair<double, double>>> rewards,
                 std::vector<std::string> row_labels = {},
                 std::vector<std::string> col_labels = {});

  int n_rows() const { return n_rows_; }
  int n_cols() const { return n_cols_; }
  const std::vector<std::string>& row_labels() const { return row_labels_; }
  const std::vector<std::string>& col_labels() const { return col_labels_; }

  std::pair<double, double> at(int a, int b) const;

 private:
  int n_rows_;
  int n_cols_;
  std::vector<std::pair<double, double>> rewards_;
  std::vector<std::string> row_labels_;
  std::vector<std::string> col_labels_;
};

// Action 0 is Cooperate, 1 is Defect in the three social dilemmas.
PayoffBimatrix prisoners_dilemma();
PayoffBimatrix stag_hunt();
PayoffBimatrix chicken();

// Scale for the adversary's reward in friend-or-foe.
enum class AdversaryScaling {
  kZeroSum,  // r_B = -r_A
  kBinary,   // r_B = 1 when the DM misses, else 0
  kSign,     // r_B = +1 when the DM misses, else -1
};

// Stateless friend-or-foe as a bimatrix: the DM picks a target (row), the
// adversary hides the reward in a target (column). Matching pays the DM
// +magnitude, missing pays -magnitude.
PayoffBimatrix friend_or_foe(double magnitude = 50.0,
                             AdversaryScaling scaling =
                                 AdversaryScaling::kZeroSum);

std::pair<double, double> matrix_step(const PayoffBimatrix& game, int a, int b);
std::pair<double, double> foe_stateless_step(int adversary_target,
                                             int dm_choice,
                                             double magnitude = 50.0,
                                             AdversaryScaling scaling =
                                                 AdversaryScaling::kZeroSum);

struct JointAction {
  int own_action;
  int opp_action;
};

// State index for memory-1 play: 0 is the initial state s0, and the previous
// joint action (x, y) maps to 1 + x * |Y| + y. The encoding is relative to
// the observer: x is its own previous action.
class Memory1Encoding {
 public:
  static constexpr int kInitialState = 0;

  Memory1Encoding(int n_own_actions, int n_opp_actions);

  int n_own_actions() const { return n_own_; }
  int n_opp_actions() const { return n_opp_; }
  int n_states() const { return n_own_ * n_opp_ + 1; }
  int encode(int own_action, int opp_action) const;
  JointAction decode(int state) const;

 private:
  int n_own_;
  int n_opp_;
};

// Next memory-1 state (from the DM's side) after the DM plays a and the
// opponent plays b; independent of the previous state.
int memory1_transition(const Memory1Encoding& encoding, int prev_state, int a,
                       int b);

// A repeated bimatrix game. Memoryless games have one state; memory-1 games
// expose the previous joint action, indexed from each player's own side.
class RepeatedGame {
 public:
  RepeatedGame(PayoffBimatrix game, bool memory1);

  const PayoffBimatrix& game() const { return game_; }
  bool memory1() const { return memory1_; }
  int n_states() const;

  // Returns the DM-side initial state (s0, or 0 when memoryless).
  int reset();
  int dm_state() const { return state_; }
  int opponent_state() const;

  struct StepResult {
    double r_dm;
    double r_opp;
    int dm_state;
    int opponent_state;
  };
  StepResult step(int a, int b);

 private:
  PayoffBimatrix game_;
  bool memory1_;
  Memory1Encoding dm_encoding_;
  Memory1Encoding opp_encoding_;
  int state_ = 0;
};

}  // namespace tmdp::env

#endif  // TMDP_ENV_MATRIX_GAME_HPP_
