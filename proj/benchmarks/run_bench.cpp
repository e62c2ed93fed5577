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
#include <benchmark/benchmark.h>

#include <string>

#include "tmdp/presets.hpp"
#include "tmdp/runner.hpp"

namespace {

void run_preset(benchmark::State& state, const std::string& name, int steps) {
  auto config = tmdp::preset(name);
  config.steps = steps;
  for (auto _ : state) {
    benchmark::DoNotOptimize(tmdp::run_single(config, 1));
  }
  state.SetItemsProcessed(state.iterations() * steps);
}

void BM_IpdFpq(benchmark::State& state) { run_preset(state, "ipd_fpq", 20000); }
BENCHMARK(BM_IpdFpq)->Unit(benchmark::kMillisecond);

void BM_ChickenLevel2(benchmark::State& state) {
  run_preset(state, "chicken_wolf_l2", 20000);
}
BENCHMARK(BM_ChickenLevel2)->Unit(benchmark::kMillisecond);

void BM_SpatialLevel2(benchmark::State& state) {
  run_preset(state, "foe_spatial_l2", 2000);
}
BENCHMARK(BM_SpatialLevel2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
