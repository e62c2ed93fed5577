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
#ifndef TMDP_SUMMARY_HPP_
#define TMDP_SUMMARY_HPP_

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "tmdp/runner.hpp"

namespace tmdp {

struct RunSummary {
  int window = 1;
  std::vector<std::uint64_t> seeds;
  // Indexed [seed][step].
  std::vector<std::vector<double>> r_dm;
  std::vector<std::vector<double>> r_opp;
  std::vector<std::vector<double>> ma_r_dm;
  std::vector<std::vector<double>> ma_r_opp;
  // Pointwise means across seeds.
  std::vector<double> mean_r_dm;
  std::vector<double> mean_r_opp;
  std::vector<double> mean_ma_r_dm;
  std::vector<double> mean_ma_r_opp;

  std::size_t length() const { return mean_r_dm.size(); }
};

// Trailing mean over the last window values (fewer at the start).
std::vector<double> moving_average(std::span<const double> values, int window);

// Throws ContractViolation when logs differ in length or window < 1.
RunSummary aggregate_runs(const std::vector<EpisodeLog>& logs, int window);

struct FinalMeans {
  double dm = 0.0;
  double opp = 0.0;
};
// Mean reward over each log's last window records, averaged across logs.
FinalMeans final_window_mean(const std::vector<EpisodeLog>& logs, int window);

// step,seed,r_dm,r_opp,ma_r_dm,ma_r_opp; per-seed rows, then rows with seed
// "mean". Reals use the shortest round-trip form.
void write_csv(const RunSummary& summary, const std::filesystem::path& path);
std::string csv_string(const RunSummary& summary);

// step,seed,state,action,opp_action,r_dm,r_opp,eps_dm,eps_opp
void write_trace_csv(const std::vector<EpisodeLog>& logs,
                     const std::filesystem::path& path);

struct CsvRow {
  int step = 0;
  std::string seed;
  double r_dm = 0.0;
  double r_opp = 0.0;
  double ma_r_dm = 0.0;
  double ma_r_opp = 0.0;
};
std::vector<CsvRow> read_csv(const std::filesystem::path& path);

}  // namespace tmdp

#endif  // TMDP_SUMMARY_HPP_
