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
#ifndef TMDP_RUNNER_HPP_
#define TMDP_RUNNER_HPP_

#include <cstdint>
#include <vector>

#include <nlohmann/json.hpp>

#include "tmdp/config.hpp"

namespace tmdp {

// One round of a repeated game, or one episode of the spatial game. For
// episodes, state is the start cell, action the target the DM reached (-1
// if none), opp_action the adversary's target and the rewards are returns.
struct StepRecord {
  int step = 0;
  int state = 0;
  int action = 0;
  int opp_action = 0;
  double r_dm = 0.0;
  double r_opp = 0.0;
  // Exploration rates in force when the actions were chosen.
  double eps_dm = 0.0;
  double eps_opp = 0.0;
};

struct EpisodeLog {
  std::uint64_t seed = 0;
  std::vector<StepRecord> records;
  // The full configuration the log was produced with.
  nlohmann::json metadata;
};

// Runs one seed with fresh agents and environment.
EpisodeLog run_single(const ExperimentConfig& config, std::uint64_t seed);

// One log per resolved seed, in seed order. Seeds run concurrently when
// parallel is set; results do not depend on it.
std::vector<EpisodeLog> run_experiment(const ExperimentConfig& config,
                                       bool parallel = true);

}  // namespace tmdp

#endif  // TMDP_RUNNER_HPP_
