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
#include "tmdp/bloom.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <vector>

#include "tmdp/errors.hpp"
#include "tmdp/rng.hpp"

namespace tmdp {
namespace {

TEST(CountingBloom, NeverUndercounts) {
  CountingBloomFilter f(BloomParams{1000, 4, 0.01});
  std::map<std::uint64_t, std::uint32_t> truth;
  Rng rng(2);
  for (int i = 0; i < 3000; ++i) {
    const std::uint64_t key = rng.uniform_int(800);
    f.add(key);
    ++truth[key];
  }
  for (const auto& [key, n] : truth) EXPECT_GE(f.count(key), n);
}

TEST(CountingBloom, UnseenKeyUsuallyZero) {
  CountingBloomFilter f(BloomParams{10000, 4, 0.01});
  for (std::uint64_t k = 0; k < 1000; ++k) f.add(k);
  int nonzero = 0;
  for (std::uint64_t k = 1000000; k < 1010000; ++k) nonzero += f.count(k) > 0;
  // A 10% loaded filter sized for 1% false positives.
  EXPECT_LT(nonzero, 200);
}

TEST(BayesConditional, UnseenStateReturnsMarginal) {
  const std::vector<double> marginal{0.7, 0.3};
  const auto p = bayes_conditional({0.0, 0.0}, marginal, 1.0);
  EXPECT_DOUBLE_EQ(p[0], 0.7);
  EXPECT_DOUBLE_EQ(p[1], 0.3);
}

TEST(BayesConditional, HandComputed) {
  // (3+1)*0.5 : (1+1)*0.5 -> 2/3, 1/3
  const auto p = bayes_conditional({3.0, 1.0}, {0.5, 0.5}, 1.0);
  EXPECT_DOUBLE_EQ(p[0], 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(p[1], 1.0 / 3.0);
  EXPECT_THROW(bayes_conditional({1.0}, {0.5, 0.5}, 1.0), ContractViolation);
}

TEST(BloomConditional, MatchesExactCountsWithinCapacity) {
  BloomConditionalModel model(3);
  std::map<std::uint64_t, std::vector<double>> exact;
  std::vector<double> marginal{1.0, 1.0, 1.0};
  Rng rng(17);
  for (int i = 0; i < 5000; ++i) {
    const std::uint64_t s = rng.uniform_int(500);
    const int b = static_cast<int>((s + rng.uniform_int(2)) % 3);
    model.update(s, b);
    auto& row = exact[s];
    row.resize(3, 0.0);
    row[b] += 1.0;
    marginal[b] += 1.0;
  }
  double total = marginal[0] + marginal[1] + marginal[2];
  for (auto& m : marginal) m /= total;
  double worst = 0.0;
  for (const auto& [s, counts] : exact) {
    const auto approx = model.conditional_predictive(s);
    const auto oracle = bayes_conditional(counts, marginal, 1.0);
    double tv = 0.0;
    for (int j = 0; j < 3; ++j) tv += std::abs(approx[j] - oracle[j]);
    worst = std::max(worst, tv / 2);
  }
  EXPECT_LE(worst, 0.02);
}

TEST(BloomConditional, BadAction) {
  BloomConditionalModel model(2);
  EXPECT_THROW(model.update(1, 2), IndexError);
  EXPECT_THROW(model.approx_count(1, -1), IndexError);
}

}  // namespace
}  // namespace tmdp
