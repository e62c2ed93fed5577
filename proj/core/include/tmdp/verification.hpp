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
#ifndef TMDP_VERIFICATION_HPP_
#define TMDP_VERIFICATION_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace tmdp {

struct VerifyOptions {
  std::uint64_t master_seed = 7;
  int n_specs = 100;
  int pairs_per_spec = 10;
  int max_states = 5;
  int max_actions = 3;
  // Spec i uses gammas[i % gammas.size()].
  std::vector<double> gammas{0.5, 0.9, 0.99};
  // Test hook: when >= 0, every generated TMDP uses this discount instead.
  double injected_gamma = -1.0;
  double slack = 1e-9;
  double fixed_point_tol = 1e-6;
  int fixed_point_max_iters = 20000;

  int belief_stream_length = 10000;
  int belief_states = 10000;
  std::uint64_t bloom_capacity = 100000;
  int belief_actions = 3;
  double tv_tolerance = 0.02;
  double forget_tolerance = 1e-9;
};

struct PropertyResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<PropertyResult> results;

  bool all_passed() const;
  // One "PASS name: detail" / "FAIL name: detail" line per property.
  std::string to_text() const;
};

// Contraction and fixed-point checks for both Bellman operators on random
// small TMDPs, plus the belief oracle checks. Deterministic given options.
VerifyReport run_verification(const VerifyOptions& options = {});

}  // namespace tmdp

#endif  // TMDP_VERIFICATION_HPP_
