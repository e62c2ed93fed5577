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
#ifndef TMDP_Q_TABLE_HPP_
#define TMDP_Q_TABLE_HPP_

#include <cstddef>
#include <span>
#include <vector>

namespace tmdp {

// Tolerance used everywhere a probability vector must sum to one.
inline constexpr double kNormTolerance = 1e-9;

// Learning rate, discount and exploration. Construction rejects alpha
// outside [0,1], gamma outside [0,1) and epsilon outside [0,1]. alpha = 0 is
// the frozen learner.
struct LearningParams {
  double alpha = 0.1;
  double gamma = 0.9;
  double epsilon = 0.1;

  LearningParams() = default;
  LearningParams(double alpha, double gamma, double epsilon);
};

// Dense Q(s,a). Zero-initialized.
class QTable {
 public:
  QTable() = default;
  QTable(int n_states, int n_actions, double init = 0.0);

  int n_states() const { return n_states_; }
  int n_actions() const { return n_actions_; }

  double at(int s, int a) const;
  double& at(int s, int a);
  std::span<const double> row(int s) const;
  std::span<double> row(int s);
  const std::vector<double>& values() const { return values_; }

  // Largest |difference| over all entries; dimensions must agree.
  double sup_distance(const QTable& other) const;

  bool operator==(const QTable&) const = default;

 private:
  void check(int s, int a) const;

  int n_states_ = 0;
  int n_actions_ = 0;
  std::vector<double> values_;
};

// Dense Q(s,a,b) over own action a and opponent action b. Zero-initialized.
class JointQTable {
 public:
  JointQTable() = default;
  JointQTable(int n_states, int n_actions, int n_opp_actions,
              double init = 0.0);

  int n_states() const { return n_states_; }
  int n_actions() const { return n_actions_; }
  int n_opp_actions() const { return n_opp_actions_; }

  double at(int s, int a, int b) const;
  double& at(int s, int a, int b);
  // Q(s,a,.) as a contiguous slice over opponent actions.
  std::span<const double> slice(int s, int a) const;
  const std::vector<double>& values() const { return values_; }

  double sup_distance(const JointQTable& other) const;

  bool operator==(const JointQTable&) const = default;

 private:
  void check(int s, int a, int b) const;

  int n_states_ = 0;
  int n_actions_ = 0;
  int n_opp_actions_ = 0;
  std::vector<double> values_;
};

// p(b|s): one distribution over opponent actions per state.
class BeliefTable {
 public:
  BeliefTable() = default;
  // Uniform rows.
  BeliefTable(int n_states, int n_opp_actions);
  // Throws ContractViolation unless every row is a distribution.
  explicit BeliefTable(std::vector<std::vector<double>> rows);

  static BeliefTable point_mass(int n_states, int n_opp_actions, int b);

  int n_states() const { return n_states_; }
  int n_opp_actions() const { return n_opp_actions_; }
  std::span<const double> row(int s) const;
  void set_row(int s, std::span<const double> probs);

 private:
  int n_states_ = 0;
  int n_opp_actions_ = 0;
  std::vector<double> probs_;
};

// Throws ContractViolation unless probs is nonnegative and sums to 1 within
// kNormTolerance.
void check_distribution(std::span<const double> probs, const char* what);

// Index of the largest value; ties go to the lowest index.
int argmax(std::span<const double> values);
double max_value(std::span<const double> values);

// Standard single-agent update:
//   Q(s,a) := (1-alpha) Q(s,a) + alpha (r + gamma max_a' Q(s',a')).
// A terminal transition drops the bootstrap term.
void q_update_independent(QTable& q, int s, int a, double r, int s_next,
                          const LearningParams& params, bool terminal = false);

// sum_b Q(s,a,b) p(b|s).
double expected_q(const JointQTable& q, std::span<const double> belief_row,
                  int s, int a);
double expected_q(const JointQTable& q, const BeliefTable& belief, int s,
                  int a);

// Opponent-aware update:
//   Q(s,a,b) := (1-alpha) Q(s,a,b)
//               + alpha (r + gamma max_a' sum_b' Q(s',a',b') p(b'|s')).
// next_belief is p(.|s').
void q_update_joint(JointQTable& q, int s, int a, int b, double r, int s_next,
                    std::span<const double> next_belief,
                    const LearningParams& params, bool terminal = false);
void q_update_joint(JointQTable& q, int s, int a, int b, double r, int s_next,
                    const BeliefTable& belief, const LearningParams& params,
                    bool terminal = false);

}  // namespace tmdp

#endif  // TMDP_Q_TABLE_HPP_
