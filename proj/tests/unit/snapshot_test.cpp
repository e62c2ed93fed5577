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
#include "tmdp/snapshot.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <limits>

#include "tmdp/errors.hpp"
#include "tmdp/operators.hpp"

namespace tmdp {
namespace {

TEST(Real, ShortestRoundTrip) {
  for (double x : {0.1, -2.5e-300, 1.0 / 3.0, 6.02214076e23, -0.0,
                   std::numeric_limits<double>::denorm_min(),
                   std::numeric_limits<double>::max()}) {
    const double y = parse_real(format_real(x));
    EXPECT_EQ(std::signbit(x), std::signbit(y));
    EXPECT_EQ(x, y);
  }
  EXPECT_EQ(format_real(0.1), "0.1");
  EXPECT_THROW(parse_real("1.0x"), ContractViolation);
  EXPECT_THROW(parse_real(""), ContractViolation);
}

TEST(Snapshot, TextRoundTrip) {
  Snapshot s;
  s.set_real("alpha", 0.3);
  s.set_int("n", -4);
  s.set_reals("v", {1.5, -2.0, 1e-9});
  const auto back = Snapshot::parse(s.to_string());
  EXPECT_EQ(back.get_real("alpha"), 0.3);
  EXPECT_EQ(back.get_int("n"), -4);
  EXPECT_EQ(back.get_reals("v"), (std::vector<double>{1.5, -2.0, 1e-9}));
  EXPECT_FALSE(back.contains("missing"));
  EXPECT_ANY_THROW(back.get("missing"));
}

TEST(Snapshot, TablesAndBeliefsRoundTrip) {
  Rng rng(4);
  const auto jq = random_joint_q(rng, 3, 2, 2);
  const auto q = random_q(rng, 3, 2);
  DirichletBelief d(3, 1.0, 0.9);
  d.forget_observe(2);
  d.forget_observe(0);
  BloomConditionalModel bloom(2, BloomParams{500, 3, 0.01});
  for (std::uint64_t k = 0; k < 50; ++k) bloom.update(k, k % 2);

  Snapshot s;
  put(s, "jq", jq);
  put(s, "q", q);
  put(s, "d", d);
  put(s, "bloom", bloom);
  const auto path =
      std::filesystem::temp_directory_path() / "tmdp_snapshot_test.txt";
  s.save(path);
  const auto back = Snapshot::load(path);
  std::filesystem::remove(path);

  EXPECT_EQ(get_joint_q_table(back, "jq"), jq);
  EXPECT_EQ(get_q_table(back, "q"), q);
  EXPECT_EQ(get_dirichlet(back, "d"), d);
  const auto b2 = get_bloom(back, "bloom");
  EXPECT_EQ(b2.filters(), bloom.filters());
  EXPECT_EQ(b2.marginal(), bloom.marginal());
  for (std::uint64_t k = 0; k < 60; ++k) {
    EXPECT_EQ(b2.conditional_predictive(k), bloom.conditional_predictive(k));
  }
}

}  // namespace
}  // namespace tmdp
