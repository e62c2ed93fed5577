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
#include "tmdp_lab/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "tmdp/config.hpp"
#include "tmdp/errors.hpp"
#include "tmdp/presets.hpp"
#include "tmdp/runner.hpp"
#include "tmdp/snapshot.hpp"
#include "tmdp/summary.hpp"
#include "tmdp/verification.hpp"

namespace tmdp::cli {

namespace {

struct RunOptions {
  std::string positional;
  std::string preset;
  std::string config;
  std::vector<std::string> sets;
  std::string out;
  std::string seeds;
  bool quiet = false;
  bool trace = false;
  bool serial = false;
};

std::vector<std::uint64_t> parse_seed_list(const std::string& text) {
  std::vector<std::uint64_t> seeds;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || item.front() == '-') {
      throw ConfigError("--seeds: '" + item + "' is not a seed");
    }
    seeds.push_back(v);
  }
  if (seeds.empty()) throw ConfigError("--seeds: empty seed list");
  return seeds;
}

// Preset defaults, then the config file, then --set overrides.
ExperimentConfig resolve(const RunOptions& o) {
  std::string preset_name = o.preset;
  if (!o.positional.empty()) {
    if (!preset_name.empty() && preset_name != o.positional) {
      throw ConfigError("conflicting presets '" + o.positional + "' and '" +
                        preset_name + "'");
    }
    preset_name = o.positional;
  }
  if (preset_name.empty() && o.config.empty()) {
    throw ConfigError("give a preset name or --config");
  }
  ExperimentConfig config =
      preset_name.empty() ? ExperimentConfig{} : preset(preset_name);
  if (!o.config.empty()) {
    std::ifstream in(o.config);
    if (!in) throw ConfigError("cannot open config '" + o.config + "'");
    nlohmann::json file;
    try {
      file = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
      throw ConfigError(o.config + ": " + e.what());
    }
    nlohmann::json merged = to_json(config);
    merged.merge_patch(file);
    config = config_from_json(merged);
  }
  config = apply_overrides(std::move(config), o.sets);
  if (!o.seeds.empty()) {
    config.seed_list = parse_seed_list(o.seeds);
  } else if (const char* env = std::getenv("TMDP_LAB_SEED")) {
    config = apply_override(config, std::string("master_seed=") + env);
  }
  if (!o.out.empty()) config.output = o.out;
  validate(config);
  return config;
}

FinalMeans execute(const ExperimentConfig& config, const RunOptions& o,
                   std::ostream& err) {
  if (!o.quiet) {
    err << "running " << config.name << ": " << config.resolved_seeds().size()
        << " seeds x " << config.steps << " steps\n";
  }
  const auto logs = run_experiment(config, !o.serial);
  const auto summary = aggregate_runs(logs, config.window);
  const std::filesystem::path dir(config.output);
  const auto csv = dir / (config.name + ".csv");
  write_csv(summary, csv);
  save_config(config, dir / (config.name + ".config.json"));
  if (o.trace) write_trace_csv(logs, dir / (config.name + ".trace.csv"));
  if (!o.quiet) err << "wrote " << csv.string() << '\n';
  return final_window_mean(logs, config.eval_window);
}

void add_run_flags(CLI::App* cmd, RunOptions& o) {
  cmd->add_option("preset_name", o.positional, "Preset to run");
  cmd->add_option("--preset", o.preset, "Preset to start from");
  cmd->add_option("--config", o.config, "JSON config file");
  cmd->add_option("--set", o.sets, "Override a field, e.g. agent_a.alpha=0.3")
      ->take_all();
  cmd->add_option("--out", o.out, "Output directory");
  cmd->add_option("--seeds", o.seeds, "Comma-separated seed list");
  cmd->add_flag("--quiet", o.quiet, "Suppress progress messages");
  cmd->add_flag("--trace", o.trace, "Also write the per-step trace CSV");
  cmd->add_flag("--serial", o.serial, "Run seeds one after another");
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  return parts;
}

int do_run(const RunOptions& o, std::ostream& out, std::ostream& err) {
  const auto config = resolve(o);
  const auto means = execute(config, o, err);
  out << config.name << " final " << config.eval_window
      << "-step mean: dm=" << format_real(means.dm)
      << " opp=" << format_real(means.opp) << '\n';
  return kExitOk;
}

int do_sweep(const RunOptions& o, const std::vector<std::string>& grid,
             std::ostream& out, std::ostream& err) {
  const auto base = resolve(o);
  if (grid.empty()) throw ConfigError("sweep needs at least one --grid");
  // Each axis is key=v1,v2,...; runs the cartesian product.
  std::vector<std::pair<std::string, std::vector<std::string>>> axes;
  for (const auto& g : grid) {
    const auto eq = g.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == g.size()) {
      throw ConfigError("--grid '" + g + "' is not of the form key=v1,v2");
    }
    axes.emplace_back(g.substr(0, eq), split(g.substr(eq + 1), ','));
  }
  std::vector<std::size_t> index(axes.size(), 0);
  while (true) {
    ExperimentConfig config = base;
    std::string suffix;
    for (std::size_t i = 0; i < axes.size(); ++i) {
      const auto& [key, values] = axes[i];
      config = apply_override(config, key + "=" + values[index[i]]);
      suffix += "_" + key + "=" + values[index[i]];
    }
    config.name = base.name + suffix;
    const auto means = execute(config, o, err);
    out << config.name << " dm=" << format_real(means.dm)
        << " opp=" << format_real(means.opp) << '\n';
    std::size_t k = 0;
    while (k < axes.size() && ++index[k] == axes[k].second.size()) {
      index[k] = 0;
      ++k;
    }
    if (k == axes.size()) break;
  }
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Threatened MDP simulations"};
  app.name("tmdp_lab");
  app.require_subcommand(1);

  RunOptions run_opts;
  auto* run = app.add_subcommand("run", "Run one experiment");
  add_run_flags(run, run_opts);

  RunOptions sweep_opts;
  std::vector<std::string> grid;
  auto* sweep = app.add_subcommand("sweep", "Run a grid of overrides");
  add_run_flags(sweep, sweep_opts);
  sweep->add_option("--grid", grid, "Axis as key=v1,v2,... (repeatable)")
      ->take_all();

  VerifyOptions verify_opts;
  auto* verify = app.add_subcommand("verify", "Check operator and belief properties");
  verify->add_option("--master-seed", verify_opts.master_seed, "Seed");
  verify->add_option("--inject-gamma", verify_opts.injected_gamma,
                     "Use this discount for every generated TMDP");
  verify->add_option("--specs", verify_opts.n_specs, "Number of random TMDPs");

  auto* list = app.add_subcommand("list-presets", "List bundled presets");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostream& stream = e.get_exit_code() == 0 ? out : err;
    const int code = app.exit(e, stream, stream);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*list) {
      for (const auto& p : list_presets()) {
        out << p.name << "  " << p.description << '\n';
      }
      return kExitOk;
    }
    if (*verify) {
      const auto report = run_verification(verify_opts);
      out << report.to_text();
      return report.all_passed() ? kExitOk : kExitVerify;
    }
    if (*run) return do_run(run_opts, out, err);
    if (*sweep) return do_sweep(sweep_opts, grid, out, err);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
  return kExitRuntime;
}

}  // namespace tmdp::cli
