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

#include "tmdp/operators.hpp"
#include "tmdp/q_table.hpp"

namespace {

void BM_JointUpdate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  tmdp::JointQTable q(64, n, n);
  const tmdp::BeliefTable belief(64, n);
  const tmdp::LearningParams params(0.1, 0.9, 0.1);
  int s = 0;
  for (auto _ : state) {
    tmdp::q_update_joint(q, s, s % n, (s + 1) % n, 1.0, (s + 7) & 63, belief,
                         params);
    s = (s + 1) & 63;
  }
  benchmark::DoNotOptimize(q.values().data());
}
BENCHMARK(BM_JointUpdate)->Arg(2)->Arg(4)->Arg(8);

void BM_IndependentUpdate(benchmark::State& state) {
  tmdp::QTable q(64, 4);
  const tmdp::LearningParams params(0.1, 0.9, 0.1);
  int s = 0;
  for (auto _ : state) {
    tmdp::q_update_independent(q, s, s & 3, 1.0, (s + 7) & 63, params);
    s = (s + 1) & 63;
  }
  benchmark::DoNotOptimize(q.values().data());
}
BENCHMARK(BM_IndependentUpdate);

void BM_OperatorH(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  tmdp::Rng rng(1);
  const auto spec = tmdp::random_tmdp_spec(rng, n, 3, 3);
  const auto belief = tmdp::random_belief(rng, n, 3);
  const auto q = tmdp::random_joint_q(rng, n, 3, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(tmdp::apply_operator_h(q, spec, belief, 0.9));
  }
}
BENCHMARK(BM_OperatorH)->Arg(5)->Arg(20)->Arg(50);

}  // namespace
