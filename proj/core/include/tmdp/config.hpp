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
#ifndef TMDP_CONFIG_HPP_
#define TMDP_CONFIG_HPP_

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "tmdp/agents/agent.hpp"
#include "tmdp/env/matrix_game.hpp"

namespace tmdp {

enum class EnvKind {
  kMatrix,        // memoryless repeated bimatrix game
  kMemory1,       // repeated bimatrix game over previous joint actions
  kFoeStateless,  // friend-or-foe, one round per episode
  kFoeSpatial,    // friend-or-foe gridworld
};

std::string_view to_string(EnvKind kind);
EnvKind parse_env_kind(std::string_view name);

struct EnvironmentConfig {
  EnvKind kind = EnvKind::kMatrix;
  // ipd, stag-hunt, chicken or custom (uses payoffs).
  std::string game = "ipd";
  // payoffs[a][b] = {r_A, r_B}.
  std::vector<std::vector<std::pair<double, double>>> payoffs;
  double target_magnitude = 50.0;
  env::AdversaryScaling adversary_scaling = env::AdversaryScaling::kZeroSum;
  // Empty selects the built-in room.
  std::string map;
  double step_penalty = -1.0;
  int max_steps = 50;
};

struct ExperimentConfig {
  std::string name = "experiment";
  EnvironmentConfig environment;
  agents::AgentConfig agent_a;  // the DM, row player
  agents::AgentConfig agent_b;  // the opponent, column player
  // Rounds for repeated games, episodes for friend-or-foe.
  int steps = 1000;
  // Exploration decay multipliers are applied every decay_every rounds.
  int decay_every = 1;
  int seeds = 10;
  std::uint64_t master_seed = 0;
  // When non-empty, overrides seeds/master_seed.
  std::vector<std::uint64_t> seed_list;
  int window = 100;
  int eval_window = 100;
  std::string output = "results";

  // Seeds in run order.
  std::vector<std::uint64_t> resolved_seeds() const;
};

nlohmann::json to_json(const ExperimentConfig& config);
// Strict: unknown keys and out-of-range values raise ConfigError naming the
// field. Missing keys keep their defaults.
ExperimentConfig config_from_json(const nlohmann::json& j);
ExperimentConfig load_config(const std::filesystem::path& path);
void save_config(const ExperimentConfig& config,
                 const std::filesystem::path& path);

// Throws ConfigError on the first invalid field.
void validate(const ExperimentConfig& config);

// "agent_a.alpha=0.3". The value is read as JSON when it parses, otherwise
// as a string. The path must name an existing field.
ExperimentConfig apply_override(const ExperimentConfig& config,
                                std::string_view assignment);
ExperimentConfig apply_overrides(ExperimentConfig config,
                                 const std::vector<std::string>& assignments);

env::PayoffBimatrix make_bimatrix(const EnvironmentConfig& env);

}  // namespace tmdp

#endif  // TMDP_CONFIG_HPP_
