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
// Runs the bundled presets end to end and prints one PASS/FAIL line per
// acceptance check. Exit status is non-zero when any check fails.

#include <chrono>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "tmdp/config.hpp"
#include "tmdp/presets.hpp"
#include "tmdp/runner.hpp"
#include "tmdp/summary.hpp"
#include "tmdp/verification.hpp"

namespace {

using tmdp::FinalMeans;

struct Run {
  FinalMeans means;
  std::string csv;
};

std::map<std::string, Run> g_runs;

const Run& run(const std::string& name) {
  auto it = g_runs.find(name);
  if (it != g_runs.end()) return it->second;
  const auto config = tmdp::preset(name);
  const auto logs = tmdp::run_experiment(config);
  Run r{tmdp::final_window_mean(logs, config.eval_window),
        tmdp::csv_string(tmdp::aggregate_runs(logs, config.window))};
  std::printf("  %-26s dm=%9.4f opp=%9.4f\n", name.c_str(), r.means.dm,
              r.means.opp);
  return g_runs.emplace(name, std::move(r)).first->second;
}

int g_failures = 0;

void report(int id, bool ok, const std::string& detail) {
  std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", id,
              detail.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

std::string fmt(const char* pattern, double a, double b = 0.0,
                double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), pattern, a, b, c);
  return buf;
}

bool in(double x, double lo, double hi) { return x >= lo && x <= hi; }

bool property(const tmdp::VerifyReport& report, const std::string& name,
              std::string& detail) {
  for (const auto& r : report.results) {
    if (r.name == name) {
      detail += " [" + name + ": " + (r.passed ? "ok" : "FAILED") + "]";
      return r.passed;
    }
  }
  detail += " [" + name + ": missing]";
  return false;
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();

  {
    const auto& m = run("ipd_fpq").means;
    report(1, in(m.dm, -2.4, -1.6) && in(m.opp, -2.4, -1.6),
           fmt("IPD FPQ vs Q, both in [-2.4,-1.6]: dm=%.3f opp=%.3f", m.dm,
               m.opp));
  }
  {
    const auto& m = run("ish_fpq").means;
    report(2, m.dm >= 1.7 && m.opp >= 1.7,
           fmt("stag hunt FPQ vs Q, both >= 1.7: dm=%.3f opp=%.3f", m.dm,
               m.opp));
  }
  {
    const auto& m = run("chicken_fpq").means;
    report(3, m.dm >= 0.6 && m.opp <= -1.2,
           fmt("chicken FPQ vs Q, dm >= 0.6 and opp <= -1.2: dm=%.3f "
               "opp=%.3f",
               m.dm, m.opp));
  }
  {
    const auto& l1 = run("chicken_wolf_l1").means;
    const auto& l2 = run("chicken_wolf_l2").means;
    report(4, l1.dm < l1.opp && l2.dm > l2.opp,
           fmt("chicken vs WoLF-PHC, level-1 dm<opp (%.3f vs %.3f), ", l1.dm,
               l1.opp) +
               fmt("level-2 dm>opp (%.3f vs %.3f)", l2.dm, l2.opp));
  }
  {
    const double mem = run("memory1_tft").means.dm;
    const double flat = run("memory1_tft_memoryless").means.dm;
    report(5, in(mem, -1.3, -0.8) && flat <= -1.7,
           fmt("IPD vs TFT, memory-1 in [-1.3,-0.8]: %.3f; memoryless <= "
               "-1.7: %.3f",
               mem, flat));
  }
  {
    const double q = run("foe_stateless_indq").means.dm;
    const double l1 = run("foe_stateless_l1forget").means.dm;
    const double l2 = run("foe_stateless_l2").means.dm;
    report(6, q <= -20.0 && in(l1, -10.0, 10.0) && l2 >= 5.0,
           fmt("stateless friend-or-foe, Q <= -20: %.2f; level-1 forget in "
               "[-10,10]: %.2f; level-2 >= 5: %.2f",
               q, l1, l2));
  }
  {
    const double q = run("foe_spatial_indq").means.dm;
    const double l2 = run("foe_spatial_l2").means.dm;
    report(7, q < 0.0 && l2 > 0.0,
           fmt("spatial friend-or-foe, Q < 0: %.2f; level-2 > 0: %.2f", q,
               l2));
  }
  {
    const double bin = run("foe_scalings_binary").means.dm;
    const double sgn = run("foe_scalings_sign").means.dm;
    report(8, bin > 0.0 && sgn > 0.0,
           fmt("level-2 under rescaled adversary rewards, {0,1}: %.2f; "
               "{-1,1}: %.2f",
               bin, sgn));
  }
  {
    const auto v = tmdp::run_verification();
    std::string d9 = "operator contraction and fixed points";
    bool ok9 = true;
    for (const char* p : {"contraction margin", "H contraction",
                          "Hbar contraction", "H fixed point",
                          "Hbar fixed point"}) {
      ok9 = property(v, p, d9) && ok9;
    }
    report(9, ok9, d9);
    std::string d10 = "belief oracles";
    bool ok10 = property(v, "bloom conditional vs exact counts", d10);
    ok10 = property(v, "forget pseudocount closed form", d10) && ok10;
    report(10, ok10, d10);
  }
  {
    // Every preset, rerun from scratch and compared byte for byte.
    int mismatched = 0;
    std::string bad;
    for (const auto& info : tmdp::list_presets()) {
      const std::string first = run(info.name).csv;
      const auto config = tmdp::preset(info.name);
      const auto again = tmdp::csv_string(
          tmdp::aggregate_runs(tmdp::run_experiment(config), config.window));
      if (again != first) {
        ++mismatched;
        bad += " " + info.name;
      }
    }
    report(11, mismatched == 0,
           "byte-identical CSV across two runs of every preset" +
               (bad.empty() ? std::string() : ", differing:" + bad));
  }

  const double secs = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  std::printf("%d failing, %.1f s\n", g_failures, secs);
  return g_failures == 0 ? 0 : 1;
}
