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
#ifndef TMDP_RNG_HPP_
#define TMDP_RNG_HPP_

#include <cstdint>
#include <random>

namespace tmdp {

// Seedable generator with platform-independent output.
//
// The engine is std::mt19937_64, whose sequence is fixed by the standard. The
// standard distributions are implementation-defined, so uniform() and
// uniform_int() are implemented here on top of the raw 64-bit draws.
//
// Stream derivation: every consumer of randomness in a simulation owns its
// own Rng, seeded with derive_seed(run_seed, stream). Streams in use:
//   kStreamAgentA = 1, kStreamAgentB = 2, kStreamEnvironment = 3.
// derive_seed is two rounds of splitmix64, so nearby run seeds give
// unrelated streams.
class Rng {
 public:
  static constexpr std::uint64_t kStreamAgentA = 1;
  static constexpr std::uint64_t kStreamAgentB = 2;
  static constexpr std::uint64_t kStreamEnvironment = 3;

  explicit Rng(std::uint64_t seed = 0) : engine_(seed) {}

  static std::uint64_t derive_seed(std::uint64_t run_seed,
                                   std::uint64_t stream);
  static std::uint64_t splitmix64(std::uint64_t x);

  std::uint64_t next_u64() { return engine_(); }
  // Uniform in [0,1) with 53 bits of resolution.
  double uniform();
  // Uniform in [0,n). n must be positive.
  int uniform_int(int n);

 private:
  std::mt19937_64 engine_;
};

}  // namespace tmdp

#endif  // TMDP_RNG_HPP_
