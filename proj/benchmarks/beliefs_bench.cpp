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

#include "tmdp/beliefs.hpp"
#include "tmdp/bloom.hpp"

namespace {

void BM_ForgetObserve(benchmark::State& state) {
  tmdp::DirichletBelief b(4, 1.0, 0.8);
  int a = 0;
  for (auto _ : state) {
    b.forget_observe(a);
    a = (a + 1) & 3;
  }
  benchmark::DoNotOptimize(b.pseudocounts().data());
}
BENCHMARK(BM_ForgetObserve);

void BM_BloomUpdate(benchmark::State& state) {
  tmdp::BloomConditionalModel m(3);
  std::uint64_t s = 0;
  for (auto _ : state) {
    m.update(s, static_cast<int>(s % 3));
    s = s * 6364136223846793005ULL + 1442695040888963407ULL;
  }
}
BENCHMARK(BM_BloomUpdate);

void BM_BloomPredict(benchmark::State& state) {
  tmdp::BloomConditionalModel m(3);
  for (std::uint64_t s = 0; s < 10000; ++s) m.update(s, static_cast<int>(s % 3));
  std::uint64_t s = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(m.conditional_predictive(s));
    s = (s + 1) % 20000;
  }
}
BENCHMARK(BM_BloomPredict);

}  // namespace
