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
#include "tmdp/beliefs.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "tmdp/errors.hpp"

namespace tmdp {
namespace {

TEST(Dirichlet, PosteriorMeanAfterCounts) {
  DirichletBelief b(2, 1.0);
  b.observe(0);
  b.observe(0);
  b.observe(1);
  const auto p = b.predictive();
  EXPECT_DOUBLE_EQ(p[0], 3.0 / 5.0);
  EXPECT_DOUBLE_EQ(p[1], 2.0 / 5.0);
}

TEST(Dirichlet, UniformPriorBeforeData) {
  DirichletBelief b(4, 0.5);
  for (double x : b.predictive()) EXPECT_DOUBLE_EQ(x, 0.25);
}

TEST(Dirichlet, RejectsBadInput) {
  EXPECT_THROW(DirichletBelief(2, -1.0), ContractViolation);
  EXPECT_THROW(DirichletBelief(2, 1.0, 0.0), ContractViolation);
  EXPECT_THROW(DirichletBelief(2, 1.0, 1.5), ContractViolation);
  DirichletBelief b(2, 1.0);
  EXPECT_THROW(b.observe(2), IndexError);
  EXPECT_THROW(b.observe(-1), IndexError);
  EXPECT_THROW(DirichletBelief(3, 0.0).predictive(), ContractViolation);
}

TEST(Dirichlet, ForgetClosedForm) {
  // n repeats of one action from prior c: lambda^n c + (1 - lambda^n)/(1 - lambda).
  const double lambda = 0.8;
  const double c = 1.0;
  DirichletBelief b(2, c, lambda);
  const int n = 25;
  for (int i = 0; i < n; ++i) b.forget_observe(0);
  const double ln = std::pow(lambda, n);
  EXPECT_NEAR(b.pseudocounts()[0], ln * c + (1 - ln) / (1 - lambda), 1e-12);
  EXPECT_NEAR(b.pseudocounts()[1], ln * c, 1e-15);
}

TEST(Dirichlet, ForgetMassBoundedAndTracksRecent) {
  DirichletBelief b(2, 1.0, 0.5);
  for (int i = 0; i < 100; ++i) b.forget_observe(0);
  for (int i = 0; i < 10; ++i) b.forget_observe(1);
  EXPECT_LE(b.total(), 1.0 / (1 - 0.5) + 1e-9);
  EXPECT_GT(b.predictive()[1], 0.99);
}

TEST(Dirichlet, LambdaOneForgetEqualsPlainCounting) {
  DirichletBelief a(3, 1.0, 1.0);
  DirichletBelief b(3, 1.0);
  for (int x : {0, 2, 2, 1, 0, 2}) {
    a.forget_observe(x);
    b.observe(x);
  }
  EXPECT_EQ(a.pseudocounts(), b.pseudocounts());
}

TEST(ConditionalDirichlet, ContextsAreIndependent) {
  ConditionalDirichlet c(3, 2, 1.0);
  c.update(1, 0);
  c.update(1, 0);
  EXPECT_DOUBLE_EQ(c.predictive(1)[0], 0.75);
  EXPECT_DOUBLE_EQ(c.predictive(0)[0], 0.5);
  EXPECT_THROW(c.update(3, 0), IndexError);
}

TEST(Mixture, WeightedSumOfComponents) {
  const std::array<double, 3> w{0.5, 0.25, 0.25};
  const auto p = mixture_predictive(w, {1.0, 0.0}, {0.0, 1.0}, {0.5, 0.5});
  EXPECT_DOUBLE_EQ(p[0], 0.625);
  EXPECT_DOUBLE_EQ(p[1], 0.375);
}

TEST(Mixture, DegenerateWeightsSelectOneComponent) {
  MarkovMixtureModel m({0.0, 1.0, 0.0}, 2, 2, 5);
  // Opponent copies our previous move.
  for (int i = 0; i < 40; ++i) {
    m.observe(0, i % 2, 3, 0);
    m.observe(1, i % 2, 3, 1);
  }
  const auto by_opp = m.predictive(0, 1, 3);
  EXPECT_NEAR(by_opp[0], 0.5, 1e-12);
  MarkovMixtureModel own({1.0, 0.0, 0.0}, 2, 2, 5);
  for (int i = 0; i < 40; ++i) {
    own.observe(0, i % 2, 3, 0);
    own.observe(1, i % 2, 3, 1);
  }
  EXPECT_NEAR(own.predictive(0, 1, 3)[0], 41.0 / 42.0, 1e-12);
}

TEST(Mixture, InitialContextAndBadWeights) {
  MarkovMixtureModel m({0.2, 0.3, 0.5}, 2, 2, 1);
  m.observe(-1, -1, 0, 1);
  EXPECT_NO_THROW(m.predictive(-1, -1, 0));
  EXPECT_THROW(m.predictive(2, 0, 0), IndexError);
  EXPECT_THROW(MarkovMixtureModel({0.5, 0.5, 0.5}, 2, 2, 1), ContractViolation);
}

}  // namespace
}  // namespace tmdp
