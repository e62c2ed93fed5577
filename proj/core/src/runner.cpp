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
#include "tmdp/runner.hpp"

#include <future>

#include "tmdp/env/gridworld.hpp"
#include "tmdp/env/matrix_game.hpp"
#include "tmdp/errors.hpp"
#include "tmdp/rng.hpp"

namespace tmdp {

namespace {

using agents::AgentConfig;
using agents::AgentContext;
using agents::AgentHandle;
using agents::Transition;

void decay(agents::Agent& agent, const AgentConfig& config) {
  agent.scale_exploration(config.epsilon_decay, config.model_epsilon_decay);
}

void run_repeated(const ExperimentConfig& config, std::uint64_t seed,
                  EpisodeLog& log) {
  const bool foe = config.environment.kind == EnvKind::kFoeStateless;
  env::PayoffBimatrix game =
      foe ? env::friend_or_foe(config.environment.target_magnitude,
                               config.environment.adversary_scaling)
          : make_bimatrix(config.environment);
  env::RepeatedGame world(std::move(game),
                          config.environment.kind == EnvKind::kMemory1);

  const auto& ca = config.agent_a;
  const auto& cb = config.agent_b;
  const int rows = world.game().n_rows();
  const int cols = world.game().n_cols();
  const AgentContext ctx_a{ca.stateless ? 1 : world.n_states(), rows, cols,
                           cols, Rng::derive_seed(seed, Rng::kStreamAgentA)};
  const AgentContext ctx_b{cb.stateless ? 1 : world.n_states(), cols, rows,
                           rows, Rng::derive_seed(seed, Rng::kStreamAgentB)};
  AgentHandle a_agent = agents::make_agent(ca, ctx_a);
  AgentHandle b_agent = agents::make_agent(cb, ctx_b);

  auto view_a = [&](int s) { return ca.stateless ? 0 : s; };
  auto view_b = [&](int s) { return cb.stateless ? 0 : s; };

  world.reset();
  log.records.reserve(config.steps);
  for (int t = 0; t < config.steps; ++t) {
    const int s_a = view_a(world.dm_state());
    const int s_b = view_b(world.opponent_state());
    const double eps_a = a_agent->epsilon();
    const double eps_b = b_agent->epsilon();
    const int a = a_agent->act(s_a);
    const int b = b_agent->act(s_b);
    const auto res = world.step(a, b);
    a_agent->observe(Transition{s_a, a, b, res.r_dm, res.r_opp,
                                view_a(res.dm_state), false});
    b_agent->observe(Transition{s_b, b, a, res.r_opp, res.r_dm,
                                view_b(res.opponent_state), false});
    log.records.push_back({t, s_a, a, b, res.r_dm, res.r_opp, eps_a, eps_b});
    if ((t + 1) % config.decay_every == 0) {
      decay(*a_agent, ca);
      decay(*b_agent, cb);
    }
  }
}

void run_spatial(const ExperimentConfig& config, std::uint64_t seed,
                 EpisodeLog& log) {
  const auto& e = config.environment;
  env::GridWorld world(
      e.map.empty() ? env::GridLayout::default_layout()
                    : env::GridLayout::load(e.map),
      env::GridParams{e.step_penalty, e.target_magnitude, e.max_steps});

  const auto& ca = config.agent_a;
  const auto& cb = config.agent_b;
  const AgentContext ctx_a{ca.stateless ? 1 : world.n_states(),
                           env::kNumMoves, 2, 2,
                           Rng::derive_seed(seed, Rng::kStreamAgentA)};
  const AgentContext ctx_b{1, 2, 2, 2,
                           Rng::derive_seed(seed, Rng::kStreamAgentB)};
  AgentHandle dm = agents::make_agent(ca, ctx_a);
  AgentHandle adversary = agents::make_agent(cb, ctx_b);
  auto view = [&](int s) { return ca.stateless ? 0 : s; };

  log.records.reserve(config.steps);
  for (int episode = 0; episode < config.steps; ++episode) {
    const int start = world.reset();
    const double eps_a = dm->epsilon();
    const double eps_b = adversary->epsilon();
    const int target = adversary->act(0);
    double dm_return = 0.0;
    double adversary_return = 0.0;
    int reached = -1;
    int s = start;
    while (!world.terminal()) {
      const int move = dm->act(view(s));
      const auto step = world.step(static_cast<env::Move>(move), target);
      dm->observe(Transition{view(s), move, target, step.r_dm,
                             step.r_adversary, view(step.next_state),
                             step.terminal});
      dm_return += step.r_dm;
      adversary_return += step.r_adversary;
      reached = step.reached_target;
      s = step.next_state;
    }
    const agents::EpisodeOutcome outcome{reached, target, dm_return,
                                         adversary_return};
    dm->end_episode(outcome);
    adversary->end_episode(outcome);
    log.records.push_back({episode, start, reached, target, dm_return,
                           adversary_return, eps_a, eps_b});
    if ((episode + 1) % config.decay_every == 0) {
      decay(*dm, ca);
      decay(*adversary, cb);
    }
  }
}

}  // namespace

EpisodeLog run_single(const ExperimentConfig& config, std::uint64_t seed) {
  validate(config);
  EpisodeLog log;
  log.seed = seed;
  log.metadata = to_json(config);
  if (config.environment.kind == EnvKind::kFoeSpatial) {
    run_spatial(config, seed, log);
  } else {
    run_repeated(config, seed, log);
  }
  return log;
}

std::vector<EpisodeLog> run_experiment(const ExperimentConfig& config,
                                       bool parallel) {
  validate(config);
  const auto seeds = config.resolved_seeds();
  std::vector<EpisodeLog> logs;
  logs.reserve(seeds.size());
  if (!parallel || seeds.size() < 2) {
    for (auto seed : seeds) logs.push_back(run_single(config, seed));
    return logs;
  }
  std::vector<std::future<EpisodeLog>> pending;
  pending.reserve(seeds.size());
  for (auto seed : seeds) {
    pending.push_back(std::async(std::launch::async, run_single,
                                 std::cref(config), seed));
  }
  for (auto& f : pending) logs.push_back(f.get());
  return logs;
}

}  // namespace tmdp
