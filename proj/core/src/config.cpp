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
#include "tmdp/config.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <map>

#include "tmdp/errors.hpp"

namespace tmdp {

using nlohmann::json;
using agents::AgentConfig;
using agents::BeliefConfig;

namespace {

std::string_view scaling_name(env::AdversaryScaling s) {
  switch (s) {
    case env::AdversaryScaling::kZeroSum: return "zero-sum";
    case env::AdversaryScaling::kBinary: return "binary";
    case env::AdversaryScaling::kSign: return "sign";
  }
  return "zero-sum";
}

env::AdversaryScaling parse_scaling(std::string_view name) {
  if (name == "zero-sum") return env::AdversaryScaling::kZeroSum;
  if (name == "binary") return env::AdversaryScaling::kBinary;
  if (name == "sign") return env::AdversaryScaling::kSign;
  throw ConfigError("unknown adversary scaling '" + std::string(name) + "'");
}

std::string_view timescale_name(agents::OpponentTimescale t) {
  return t == agents::OpponentTimescale::kStep ? "step" : "episode";
}

agents::OpponentTimescale parse_timescale(std::string_view name) {
  if (name == "step") return agents::OpponentTimescale::kStep;
  if (name == "episode") return agents::OpponentTimescale::kEpisode;
  throw ConfigError("unknown opponent timescale '" + std::string(name) + "'");
}

[[noreturn]] void fail(const std::string& field, const std::string& message) {
  throw ConfigError("field '" + field + "': " + message);
}

// Walks a JSON object, dispatching known keys and rejecting the rest.
class Reader {
 public:
  Reader(const json& j, std::string prefix) : j_(j), prefix_(std::move(prefix)) {
    if (!j_.is_object()) fail(path(""), "expected an object");
  }

  std::string path(const std::string& key) const {
    if (prefix_.empty()) return key;
    return key.empty() ? prefix_ : prefix_ + "." + key;
  }

  template <typename Fn>
  Reader& on(const std::string& key, Fn&& fn) {
    handlers_[key] = std::forward<Fn>(fn);
    return *this;
  }

  void run() const {
    for (auto it = j_.begin(); it != j_.end(); ++it) {
      auto h = handlers_.find(it.key());
      if (h == handlers_.end()) fail(path(it.key()), "unknown field");
      try {
        h->second(it.value(), path(it.key()));
      } catch (const ConfigError&) {
        throw;
      } catch (const std::exception& e) {
        fail(path(it.key()), e.what());
      }
    }
  }

 private:
  const json& j_;
  std::string prefix_;
  std::map<std::string, std::function<void(const json&, const std::string&)>>
      handlers_;
};

double as_real(const json& v, const std::string& field) {
  if (!v.is_number()) fail(field, "expected a number");
  return v.get<double>();
}

long long as_integer(const json& v, const std::string& field) {
  if (v.is_number_integer()) return v.get<long long>();
  if (v.is_number_float()) {
    const double d = v.get<double>();
    if (std::floor(d) == d && std::abs(d) < 9.0e15) {
      return static_cast<long long>(d);
    }
  }
  fail(field, "expected an integer");
}

int as_int(const json& v, const std::string& field) {
  const long long x = as_integer(v, field);
  if (x < -2147483647LL || x > 2147483647LL) fail(field, "out of range");
  return static_cast<int>(x);
}

std::uint64_t as_u64(const json& v, const std::string& field) {
  if (v.is_number_unsigned()) return v.get<std::uint64_t>();
  const long long x = as_integer(v, field);
  if (x < 0) fail(field, "must be non-negative");
  return static_cast<std::uint64_t>(x);
}

std::string as_string(const json& v, const std::string& field) {
  if (!v.is_string()) fail(field, "expected a string");
  return v.get<std::string>();
}

bool as_bool(const json& v, const std::string& field) {
  if (!v.is_boolean()) fail(field, "expected true or false");
  return v.get<bool>();
}

template <typename Parse>
auto as_enum(const json& v, const std::string& field, Parse&& parse) {
  const std::string name = as_string(v, field);
  try {
    return parse(name);
  } catch (const std::exception& e) {
    fail(field, e.what());
  }
}

json belief_to_json(const BeliefConfig& b) {
  return {{"kind", std::string(agents::to_string(b.kind))},
          {"prior", b.prior},
          {"lambda", b.forget_lambda},
          {"bloom",
           {{"capacity", b.bloom.capacity},
            {"hash_count", b.bloom.hash_count},
            {"fp_rate", b.bloom.fp_rate}}},
          {"mixture_weights", b.mixture_weights}};
}

json agent_to_json(const AgentConfig& a) {
  return {{"kind", std::string(agents::to_string(a.kind))},
          {"alpha", a.alpha},
          {"gamma", a.gamma},
          {"epsilon", a.epsilon},
          {"epsilon_decay", a.epsilon_decay},
          {"model_epsilon_decay", a.model_epsilon_decay},
          {"stateless", a.stateless},
          {"belief", belief_to_json(a.belief)},
          {"level", a.level},
          {"model_alpha", a.model_alpha},
          {"model_gamma", a.model_gamma},
          {"model_epsilon", a.model_epsilon},
          {"opponent_reward", std::string(agents::to_string(a.opponent_reward))},
          {"opponent_timescale", std::string(timescale_name(a.opponent_timescale))},
          {"delta_win", a.delta_win},
          {"delta_lose", a.delta_lose},
          {"smoother_alpha", a.smoother_alpha}};
}

void read_belief(const json& j, const std::string& prefix, BeliefConfig& b) {
  Reader(j, prefix)
      .on("kind",
          [&](const json& v, const std::string& f) {
            b.kind = as_enum(v, f, agents::parse_belief_kind);
          })
      .on("prior",
          [&](const json& v, const std::string& f) { b.prior = as_real(v, f); })
      .on("lambda",
          [&](const json& v, const std::string& f) {
            b.forget_lambda = as_real(v, f);
          })
      .on("bloom",
          [&](const json& v, const std::string& f) {
            Reader(v, f)
                .on("capacity",
                    [&](const json& x, const std::string& g) {
                      b.bloom.capacity = as_u64(x, g);
                    })
                .on("hash_count",
                    [&](const json& x, const std::string& g) {
                      b.bloom.hash_count = as_int(x, g);
                    })
                .on("fp_rate",
                    [&](const json& x, const std::string& g) {
                      b.bloom.fp_rate = as_real(x, g);
                    })
                .run();
          })
      .on("mixture_weights",
          [&](const json& v, const std::string& f) {
            if (!v.is_array() || v.size() != 3) {
              fail(f, "expected three weights");
            }
            for (std::size_t i = 0; i < 3; ++i) {
              b.mixture_weights[i] = as_real(v[i], f);
            }
          })
      .run();
}

void read_agent(const json& j, const std::string& prefix, AgentConfig& a) {
  auto real = [](double& slot) {
    return [&slot](const json& v, const std::string& f) {
      slot = as_real(v, f);
    };
  };
  Reader(j, prefix)
      .on("kind",
          [&](const json& v, const std::string& f) {
            a.kind = as_enum(v, f, agents::parse_agent_kind);
          })
      .on("alpha", real(a.alpha))
      .on("gamma", real(a.gamma))
      .on("epsilon", real(a.epsilon))
      .on("epsilon_decay", real(a.epsilon_decay))
      .on("model_epsilon_decay", real(a.model_epsilon_decay))
      .on("stateless",
          [&](const json& v, const std::string& f) {
            a.stateless = as_bool(v, f);
          })
      .on("belief",
          [&](const json& v, const std::string& f) {
            read_belief(v, f, a.belief);
          })
      .on("level",
          [&](const json& v, const std::string& f) { a.level = as_int(v, f); })
      .on("model_alpha", real(a.model_alpha))
      .on("model_gamma", real(a.model_gamma))
      .on("model_epsilon", real(a.model_epsilon))
      .on("opponent_reward",
          [&](const json& v, const std::string& f) {
            a.opponent_reward = as_enum(v, f, agents::parse_opponent_reward);
          })
      .on("opponent_timescale",
          [&](const json& v, const std::string& f) {
            a.opponent_timescale = as_enum(v, f, parse_timescale);
          })
      .on("delta_win", real(a.delta_win))
      .on("delta_lose", real(a.delta_lose))
      .on("smoother_alpha", real(a.smoother_alpha))
      .run();
}

void check_unit(double x, const std::string& field, bool allow_zero) {
  if (!(x <= 1.0) || !(allow_zero ? x >= 0.0 : x > 0.0)) {
    fail(field, std::string("must lie in ") + (allow_zero ? "[0,1]" : "(0,1]"));
  }
}

void check_gamma(double g, const std::string& field) {
  if (!(g >= 0.0 && g < 1.0)) fail(field, "must lie in [0,1)");
}

void validate_agent(const AgentConfig& a, const std::string& p) {
  check_unit(a.alpha, p + ".alpha", true);
  check_gamma(a.gamma, p + ".gamma");
  check_unit(a.epsilon, p + ".epsilon", true);
  check_unit(a.epsilon_decay, p + ".epsilon_decay", false);
  check_unit(a.model_epsilon_decay, p + ".model_epsilon_decay", false);
  check_unit(a.model_alpha, p + ".model_alpha", true);
  if (a.model_gamma >= 0.0) check_gamma(a.model_gamma, p + ".model_gamma");
  check_unit(a.model_epsilon, p + ".model_epsilon", true);
  if (!(a.belief.prior > 0.0)) fail(p + ".belief.prior", "must be positive");
  check_unit(a.belief.forget_lambda, p + ".belief.lambda", false);
  if (a.belief.bloom.capacity == 0) {
    fail(p + ".belief.bloom.capacity", "must be positive");
  }
  if (a.belief.bloom.hash_count <= 0) {
    fail(p + ".belief.bloom.hash_count", "must be positive");
  }
  if (!(a.belief.bloom.fp_rate > 0.0 && a.belief.bloom.fp_rate < 1.0)) {
    fail(p + ".belief.bloom.fp_rate", "must lie in (0,1)");
  }
  double w_total = 0.0;
  for (double w : a.belief.mixture_weights) {
    if (!(w >= 0.0)) fail(p + ".belief.mixture_weights", "must be >= 0");
    w_total += w;
  }
  if (std::abs(w_total - 1.0) > 1e-9) {
    fail(p + ".belief.mixture_weights", "must sum to 1");
  }
  if (a.level < 1) fail(p + ".level", "must be >= 1");
  if (!(a.delta_win > 0.0)) fail(p + ".delta_win", "must be positive");
  if (!(a.delta_lose > a.delta_win)) {
    fail(p + ".delta_lose", "must exceed delta_win");
  }
  if (!(a.smoother_alpha > 0.0 && a.smoother_alpha <= 1.0)) {
    fail(p + ".smoother_alpha", "must lie in (0,1]");
  }
}

}  // namespace

std::string_view to_string(EnvKind kind) {
  switch (kind) {
    case EnvKind::kMatrix: return "matrix";
    case EnvKind::kMemory1: return "memory1";
    case EnvKind::kFoeStateless: return "foe-stateless";
    case EnvKind::kFoeSpatial: return "foe-spatial";
  }
  return "matrix";
}

EnvKind parse_env_kind(std::string_view name) {
  if (name == "matrix") return EnvKind::kMatrix;
  if (name == "memory1") return EnvKind::kMemory1;
  if (name == "foe-stateless") return EnvKind::kFoeStateless;
  if (name == "foe-spatial") return EnvKind::kFoeSpatial;
  throw ConfigError("unknown environment kind '" + std::string(name) + "'");
}

std::vector<std::uint64_t> ExperimentConfig::resolved_seeds() const {
  if (!seed_list.empty()) return seed_list;
  std::vector<std::uint64_t> out;
  for (int i = 0; i < seeds; ++i) out.push_back(master_seed + i);
  return out;
}

json to_json(const ExperimentConfig& c) {
  json payoffs = json::array();
  for (const auto& row : c.environment.payoffs) {
    json r = json::array();
    for (const auto& [ra, rb] : row) r.push_back({ra, rb});
    payoffs.push_back(r);
  }
  return {
      {"name", c.name},
      {"environment",
       {{"kind", std::string(to_string(c.environment.kind))},
        {"game", c.environment.game},
        {"payoffs", payoffs},
        {"target_magnitude", c.environment.target_magnitude},
        {"adversary_scaling",
         std::string(scaling_name(c.environment.adversary_scaling))},
        {"map", c.environment.map},
        {"step_penalty", c.environment.step_penalty},
        {"max_steps", c.environment.max_steps}}},
      {"agent_a", agent_to_json(c.agent_a)},
      {"agent_b", agent_to_json(c.agent_b)},
      {"steps", c.steps},
      {"decay_every", c.decay_every},
      {"seeds", c.seeds},
      {"master_seed", c.master_seed},
      {"seed_list", c.seed_list},
      {"window", c.window},
      {"eval_window", c.eval_window},
      {"output", c.output},
  };
}

ExperimentConfig config_from_json(const json& j) {
  ExperimentConfig c;
  auto integer = [](int& slot) {
    return [&slot](const json& v, const std::string& f) {
      slot = as_int(v, f);
    };
  };
  Reader(j, "")
      .on("name",
          [&](const json& v, const std::string& f) { c.name = as_string(v, f); })
      .on("environment",
          [&](const json& v, const std::string& f) {
            auto& e = c.environment;
            Reader(v, f)
                .on("kind",
                    [&](const json& x, const std::string& g) {
                      e.kind = as_enum(x, g, parse_env_kind);
                    })
                .on("game",
                    [&](const json& x, const std::string& g) {
                      e.game = as_string(x, g);
                    })
                .on("payoffs",
                    [&](const json& x, const std::string& g) {
                      if (!x.is_array()) fail(g, "expected nested lists");
                      e.payoffs.clear();
                      for (const auto& row : x) {
                        if (!row.is_array()) fail(g, "expected nested lists");
                        std::vector<std::pair<double, double>> r;
                        for (const auto& cell : row) {
                          if (!cell.is_array() || cell.size() != 2) {
                            fail(g, "each entry must be [r_A, r_B]");
                          }
                          r.emplace_back(as_real(cell[0], g),
                                         as_real(cell[1], g));
                        }
                        e.payoffs.push_back(std::move(r));
                      }
                    })
                .on("target_magnitude",
                    [&](const json& x, const std::string& g) {
                      e.target_magnitude = as_real(x, g);
                    })
                .on("adversary_scaling",
                    [&](const json& x, const std::string& g) {
                      e.adversary_scaling = as_enum(x, g, parse_scaling);
                    })
                .on("map",
                    [&](const json& x, const std::string& g) {
                      e.map = as_string(x, g);
                    })
                .on("step_penalty",
                    [&](const json& x, const std::string& g) {
                      e.step_penalty = as_real(x, g);
                    })
                .on("max_steps", integer(e.max_steps))
                .run();
          })
      .on("agent_a",
          [&](const json& v, const std::string& f) {
            read_agent(v, f, c.agent_a);
          })
      .on("agent_b",
          [&](const json& v, const std::string& f) {
            read_agent(v, f, c.agent_b);
          })
      .on("steps", integer(c.steps))
      .on("decay_every", integer(c.decay_every))
      .on("seeds", integer(c.seeds))
      .on("master_seed",
          [&](const json& v, const std::string& f) {
            c.master_seed = as_u64(v, f);
          })
      .on("seed_list",
          [&](const json& v, const std::string& f) {
            if (!v.is_array()) fail(f, "expected a list of seeds");
            c.seed_list.clear();
            for (const auto& s : v) c.seed_list.push_back(as_u64(s, f));
          })
      .on("window", integer(c.window))
      .on("eval_window", integer(c.eval_window))
      .on("output",
          [&](const json& v, const std::string& f) {
            c.output = as_string(v, f);
          })
      .run();
  validate(c);
  return c;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config '" + path.string() + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
  return config_from_json(j);
}

void save_config(const ExperimentConfig& config,
                 const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  out << to_json(config).dump(2) << '\n';
}

void validate(const ExperimentConfig& c) {
  if (c.steps <= 0) fail("steps", "must be positive");
  if (c.decay_every <= 0) fail("decay_every", "must be positive");
  if (c.seeds <= 0 && c.seed_list.empty()) fail("seeds", "must be positive");
  if (c.window <= 0) fail("window", "must be positive");
  if (c.eval_window <= 0) fail("eval_window", "must be positive");

  const auto& e = c.environment;
  if (e.kind == EnvKind::kMatrix || e.kind == EnvKind::kMemory1) {
    try {
      make_bimatrix(e);
    } catch (const ConfigError&) {
      throw;
    } catch (const std::exception& ex) {
      fail("environment.payoffs", ex.what());
    }
  }
  if (!(e.target_magnitude > 0.0)) {
    fail("environment.target_magnitude", "must be positive");
  }
  if (e.max_steps <= 0) fail("environment.max_steps", "must be positive");

  validate_agent(c.agent_a, "agent_a");
  validate_agent(c.agent_b, "agent_b");

  using agents::AgentKind;
  const auto kind_a = c.agent_a.kind;
  const auto kind_b = c.agent_b.kind;
  if (kind_a == AgentKind::kSmootherAdversary) {
    fail("agent_a.kind", "the smoother adversary can only play agent_b");
  }
  if (kind_a == AgentKind::kTitForTat || kind_b == AgentKind::kTitForTat) {
    if (e.kind != EnvKind::kMemory1) {
      fail(kind_a == AgentKind::kTitForTat ? "agent_a.kind" : "agent_b.kind",
           "tft needs the memory1 environment");
    }
    if ((kind_a == AgentKind::kTitForTat && c.agent_a.stateless) ||
        (kind_b == AgentKind::kTitForTat && c.agent_b.stateless)) {
      fail("stateless", "tft needs to see the previous joint action");
    }
  }
  if (e.kind == EnvKind::kFoeSpatial) {
    if (kind_b != AgentKind::kSmootherAdversary) {
      fail("agent_b.kind", "foe-spatial needs a smoother-adversary");
    }
    if (kind_a == AgentKind::kWolfPhc || kind_a == AgentKind::kTitForTat ||
        kind_a == AgentKind::kLevelK) {
      fail("agent_a.kind", "not supported in foe-spatial");
    }
    if (kind_a == AgentKind::kLevel2 &&
        c.agent_a.opponent_timescale != agents::OpponentTimescale::kEpisode) {
      fail("agent_a.opponent_timescale",
           "foe-spatial opponents commit once per episode; use 'episode'");
    }
  } else {
    if (c.agent_a.opponent_timescale == agents::OpponentTimescale::kEpisode) {
      fail("agent_a.opponent_timescale",
           "'episode' is only meaningful in foe-spatial");
    }
  }
  if (kind_a == AgentKind::kLevelK &&
      c.agent_a.opponent_timescale != agents::OpponentTimescale::kStep) {
    fail("agent_a.opponent_timescale", "levelk agents require 'step'");
  }
}

ExperimentConfig apply_override(const ExperimentConfig& config,
                                std::string_view assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string_view::npos || eq == 0) {
    throw ConfigError("override '" + std::string(assignment) +
                      "' is not of the form key=value");
  }
  const std::string key(assignment.substr(0, eq));
  const std::string text(assignment.substr(eq + 1));

  json value = json::parse(text, nullptr, false);
  if (value.is_discarded()) value = text;

  json j = to_json(config);
  json* node = &j;
  std::size_t start = 0;
  while (true) {
    const auto dot = key.find('.', start);
    const std::string part = key.substr(start, dot - start);
    if (!node->is_object() || !node->contains(part)) {
      throw ConfigError("override '" + key + "': unknown field");
    }
    node = &(*node)[part];
    if (dot == std::string::npos) break;
    start = dot + 1;
  }
  *node = value;
  return config_from_json(j);
}

ExperimentConfig apply_overrides(ExperimentConfig config,
                                 const std::vector<std::string>& assignments) {
  for (const auto& a : assignments) config = apply_override(config, a);
  return config;
}

env::PayoffBimatrix make_bimatrix(const EnvironmentConfig& e) {
  if (e.game == "ipd") return env::prisoners_dilemma();
  if (e.game == "stag-hunt") return env::stag_hunt();
  if (e.game == "chicken") return env::chicken();
  if (e.game == "custom") {
    if (e.payoffs.empty()) fail("environment.payoffs", "required for custom");
    return env::PayoffBimatrix(e.payoffs);
  }
  fail("environment.game", "unknown game '" + e.game + "'");
}

}  // namespace tmdp
