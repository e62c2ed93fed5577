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
#include "tmdp/summary.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "tmdp/errors.hpp"
#include "tmdp/snapshot.hpp"

namespace tmdp {

namespace {

constexpr const char* kHeader = "step,seed,r_dm,r_opp,ma_r_dm,ma_r_opp";

std::vector<double> pointwise_mean(const std::vector<std::vector<double>>& xs) {
  if (xs.empty()) return {};
  std::vector<double> out(xs.front().size(), 0.0);
  for (const auto& x : xs) {
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += x[i];
  }
  for (double& v : out) v /= static_cast<double>(xs.size());
  return out;
}

std::ofstream open_for_write(const std::filesystem::path& path) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  return out;
}

}  // namespace

std::vector<double> moving_average(std::span<const double> values,
                                   int window) {
  if (window < 1) throw ContractViolation("window must be >= 1");
  std::vector<double> out(values.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    sum += values[i];
    if (i >= static_cast<std::size_t>(window)) sum -= values[i - window];
    const std::size_t n = std::min<std::size_t>(i + 1, window);
    out[i] = sum / static_cast<double>(n);
  }
  return out;
}

RunSummary aggregate_runs(const std::vector<EpisodeLog>& logs, int window) {
  if (window < 1) throw ContractViolation("window must be >= 1");
  RunSummary s;
  s.window = window;
  if (logs.empty()) return s;
  const std::size_t n = logs.front().records.size();
  for (const auto& log : logs) {
    if (log.records.size() != n) {
      throw ContractViolation("logs have unequal lengths");
    }
    std::vector<double> dm(n);
    std::vector<double> opp(n);
    for (std::size_t i = 0; i < n; ++i) {
      dm[i] = log.records[i].r_dm;
      opp[i] = log.records[i].r_opp;
    }
    s.seeds.push_back(log.seed);
    s.ma_r_dm.push_back(moving_average(dm, window));
    s.ma_r_opp.push_back(moving_average(opp, window));
    s.r_dm.push_back(std::move(dm));
    s.r_opp.push_back(std::move(opp));
  }
  s.mean_r_dm = pointwise_mean(s.r_dm);
  s.mean_r_opp = pointwise_mean(s.r_opp);
  s.mean_ma_r_dm = pointwise_mean(s.ma_r_dm);
  s.mean_ma_r_opp = pointwise_mean(s.ma_r_opp);
  return s;
}

FinalMeans final_window_mean(const std::vector<EpisodeLog>& logs, int window) {
  if (logs.empty()) throw ContractViolation("no logs");
  if (window < 1) throw ContractViolation("window must be >= 1");
  FinalMeans m;
  for (const auto& log : logs) {
    const std::size_t n = log.records.size();
    const std::size_t w = std::min<std::size_t>(window, n);
    if (w == 0) throw ContractViolation("empty log");
    double dm = 0.0;
    double opp = 0.0;
    for (std::size_t i = n - w; i < n; ++i) {
      dm += log.records[i].r_dm;
      opp += log.records[i].r_opp;
    }
    m.dm += dm / static_cast<double>(w);
    m.opp += opp / static_cast<double>(w);
  }
  m.dm /= static_cast<double>(logs.size());
  m.opp /= static_cast<double>(logs.size());
  return m;
}

std::string csv_string(const RunSummary& s) {
  std::string out = kHeader;
  out += '\n';
  auto row = [&out](std::size_t step, const std::string& seed, double a,
                    double b, double c, double d) {
    out += std::to_string(step);
    out += ',';
    out += seed;
    for (double v : {a, b, c, d}) {
      out += ',';
      out += format_real(v);
    }
    out += '\n';
  };
  for (std::size_t k = 0; k < s.seeds.size(); ++k) {
    const std::string seed = std::to_string(s.seeds[k]);
    for (std::size_t i = 0; i < s.r_dm[k].size(); ++i) {
      row(i, seed, s.r_dm[k][i], s.r_opp[k][i], s.ma_r_dm[k][i],
          s.ma_r_opp[k][i]);
    }
  }
  for (std::size_t i = 0; i < s.length(); ++i) {
    row(i, "mean", s.mean_r_dm[i], s.mean_r_opp[i], s.mean_ma_r_dm[i],
        s.mean_ma_r_opp[i]);
  }
  return out;
}

void write_csv(const RunSummary& summary, const std::filesystem::path& path) {
  auto out = open_for_write(path);
  out << csv_string(summary);
  if (!out) throw std::runtime_error("error writing '" + path.string() + "'");
}

void write_trace_csv(const std::vector<EpisodeLog>& logs,
                     const std::filesystem::path& path) {
  auto out = open_for_write(path);
  out << "step,seed,state,action,opp_action,r_dm,r_opp,eps_dm,eps_opp\n";
  for (const auto& log : logs) {
    for (const auto& r : log.records) {
      out << r.step << ',' << log.seed << ',' << r.state << ',' << r.action
          << ',' << r.opp_action << ',' << format_real(r.r_dm) << ','
          << format_real(r.r_opp) << ',' << format_real(r.eps_dm) << ','
          << format_real(r.eps_opp) << '\n';
    }
  }
  if (!out) throw std::runtime_error("error writing '" + path.string() + "'");
}

std::vector<CsvRow> read_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
  std::string line;
  if (!std::getline(in, line) || line != kHeader) {
    throw std::runtime_error(path.string() + ": unexpected CSV header");
  }
  std::vector<CsvRow> rows;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (fields.size() != 6) {
      throw std::runtime_error(path.string() + ":" + std::to_string(line_no) +
                               ": expected 6 fields");
    }
    try {
      rows.push_back({std::stoi(fields[0]), fields[1], parse_real(fields[2]),
                      parse_real(fields[3]), parse_real(fields[4]),
                      parse_real(fields[5])});
    } catch (const std::exception& e) {
      throw std::runtime_error(path.string() + ":" + std::to_string(line_no) +
                               ": " + e.what());
    }
  }
  return rows;
}

}  // namespace tmdp
