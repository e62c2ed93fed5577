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
#include <gtest/gtest.h>

#include <filesystem>
#include <numeric>

#include "tmdp/config.hpp"
#include "tmdp/errors.hpp"
#include "tmdp/presets.hpp"
#include "tmdp/runner.hpp"
#include "tmdp/summary.hpp"

namespace tmdp {
namespace {

std::vector<double> naive_moving_average(const std::vector<double>& v, int w) {
  std::vector<double> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const std::size_t lo = i + 1 >= static_cast<std::size_t>(w) ? i + 1 - w : 0;
    double s = 0.0;
    for (std::size_t k = lo; k <= i; ++k) s += v[k];
    out.push_back(s / static_cast<double>(i + 1 - lo));
  }
  return out;
}

TEST(MovingAverage, MatchesNaiveWindow) {
  std::vector<double> v(50);
  std::iota(v.begin(), v.end(), -10.0);
  for (int w : {1, 3, 7, 100}) {
    const auto a = moving_average(v, w);
    const auto b = naive_moving_average(v, w);
    for (std::size_t i = 0; i < v.size(); ++i) EXPECT_NEAR(a[i], b[i], 1e-12);
  }
  EXPECT_THROW(moving_average(v, 0), ContractViolation);
}

ExperimentConfig small(const std::string& name, int steps) {
  auto c = preset(name);
  c.steps = steps;
  c.seeds = 3;
  c.eval_window = std::min(c.eval_window, steps);
  return c;
}

TEST(Runner, TftSelfPlayCooperatesForever) {
  auto c = small("memory1_tft", 200);
  c.agent_a.kind = agents::AgentKind::kTitForTat;
  const auto log = run_single(c, 1);
  ASSERT_EQ(log.records.size(), 200u);
  for (const auto& r : log.records) {
    EXPECT_EQ(r.action, 0);
    EXPECT_EQ(r.opp_action, 0);
    EXPECT_DOUBLE_EQ(r.r_dm, -1.0);
  }
}

TEST(Runner, RewardsMatchPayoffTable) {
  const auto c = small("chicken_qq", 500);
  const auto game = make_bimatrix(c.environment);
  for (const auto& r : run_single(c, 3).records) {
    const auto [a, b] = game.at(r.action, r.opp_action);
    ASSERT_EQ(r.r_dm, a);
    ASSERT_EQ(r.r_opp, b);
  }
}

TEST(Runner, SpatialLogsOneRecordPerEpisode) {
  const auto c = small("foe_spatial_l2", 50);
  const auto log = run_single(c, 2);
  ASSERT_EQ(log.records.size(), 50u);
  for (const auto& r : log.records) {
    EXPECT_GE(r.r_dm, -c.environment.max_steps - 50.0);
    EXPECT_LE(r.r_dm, 50.0 - 7.0);
    EXPECT_DOUBLE_EQ(r.r_opp, -r.r_dm);
  }
}

TEST(Runner, EpsilonDecaysOnSchedule) {
  auto c = small("foe_spatial_indq", 40);
  const auto log = run_single(c, 2);
  EXPECT_DOUBLE_EQ(log.records.front().eps_dm, c.agent_a.epsilon);
  EXPECT_LT(log.records.back().eps_dm, c.agent_a.epsilon);
}

TEST(Determinism, SameSeedSameCsvSerialOrParallel) {
  const auto c = small("ipd_fpq", 1000);
  const auto a = csv_string(aggregate_runs(run_experiment(c, true), 50));
  const auto b = csv_string(aggregate_runs(run_experiment(c, false), 50));
  EXPECT_EQ(a, b);
  auto d = c;
  d.master_seed += 1;
  EXPECT_NE(a, csv_string(aggregate_runs(run_experiment(d, false), 50)));
}

TEST(Summary, AggregateAndCsvRoundTrip) {
  const auto c = small("ish_qq", 300);
  const auto logs = run_experiment(c, false);
  const auto s = aggregate_runs(logs, 20);
  ASSERT_EQ(s.length(), 300u);
  for (std::size_t t = 0; t < s.length(); ++t) {
    double mean = 0.0;
    for (const auto& log : logs) mean += log.records[t].r_dm;
    EXPECT_NEAR(s.mean_r_dm[t], mean / logs.size(), 1e-12);
  }
  const auto path = std::filesystem::temp_directory_path() / "tmdp_sum.csv";
  write_csv(s, path);
  const auto rows = read_csv(path);
  std::filesystem::remove(path);
  ASSERT_EQ(rows.size(), 4u * 300u);
  EXPECT_EQ(rows.front().seed, std::to_string(logs.front().seed));
  EXPECT_EQ(rows.back().seed, "mean");
  EXPECT_EQ(rows.back().ma_r_opp, s.mean_ma_r_opp.back());
  EXPECT_EQ(rows[5].r_dm, logs.front().records[5].r_dm);

  const auto fm = final_window_mean(logs, 100);
  double dm = 0.0;
  for (std::size_t t = 200; t < 300; ++t) dm += s.mean_r_dm[t];
  EXPECT_NEAR(fm.dm, dm / 100.0, 1e-12);
}

TEST(Summary, UnequalLengthsRejected) {
  std::vector<EpisodeLog> logs(2);
  logs[0].records.resize(3);
  logs[1].records.resize(4);
  EXPECT_THROW(aggregate_runs(logs, 2), ContractViolation);
}

}  // namespace
}  // namespace tmdp
