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
#ifndef TMDP_BLOOM_HPP_
#define TMDP_BLOOM_HPP_

#include <cstdint>
#include <vector>

#include "tmdp/beliefs.hpp"

namespace tmdp {

struct BloomParams {
  std::uint64_t capacity = 100000;
  int hash_count = 4;
  double fp_rate = 0.01;

  // Number of counters needed so that, with hash_count hashes and capacity
  // distinct keys, a fresh key collides on every probe with probability at
  // most fp_rate: m = -k n / ln(1 - fp^(1/k)).
  std::uint64_t cell_count() const;
  bool operator==(const BloomParams&) const = default;
};

// Counting bloom filter. count() returns the minimum over the probed
// counters, so it never undercounts; it overcounts only when every probe of
// a key lands on a cell shared with other keys.
class CountingBloomFilter {
 public:
  explicit CountingBloomFilter(const BloomParams& params = {});

  void add(std::uint64_t key);
  std::uint32_t count(std::uint64_t key) const;

  const BloomParams& params() const { return params_; }
  const std::vector<std::uint32_t>& cells() const { return cells_; }
  // Replaces the counters, e.g. when restoring a snapshot.
  void set_cells(std::vector<std::uint32_t> cells);

  bool operator==(const CountingBloomFilter&) const = default;

 private:
  template <typename Fn>
  void for_each_probe(std::uint64_t key, Fn&& fn) const;

  BloomParams params_;
  std::vector<std::uint32_t> cells_;
};

// p(b|s) for very large state spaces. One counting bloom filter per opponent
// action stores the state counts behind p(s|b_j); a Dirichlet belief holds the
// marginal p(b_j). Queries combine them by Bayes rule:
//   p(b_j|s) ~ (count(s|b_j) + prior_pseudocount) * p(b_j).
// The prior pseudocount lives outside the filters and is added at query
// time, so a state never seen reproduces the marginal exactly.
class BloomConditionalModel {
 public:
  BloomConditionalModel(int n_opp_actions, const BloomParams& params = {},
                        double marginal_prior = 1.0,
                        double prior_pseudocount = 1.0);

  int n_opp_actions() const { return static_cast<int>(filters_.size()); }
  double prior_pseudocount() const { return prior_pseudocount_; }

  void update(std::uint64_t state, int opp_action);
  std::uint32_t approx_count(std::uint64_t state, int opp_action) const;
  std::vector<double> conditional_predictive(std::uint64_t state) const;

  const DirichletBelief& marginal() const { return marginal_; }
  DirichletBelief& marginal() { return marginal_; }
  const std::vector<CountingBloomFilter>& filters() const { return filters_; }
  std::vector<CountingBloomFilter>& filters() { return filters_; }

 private:
  std::vector<CountingBloomFilter> filters_;
  DirichletBelief marginal_;
  double prior_pseudocount_;
};

// Bayes-rule combination shared by the bloom model and exact-count oracles:
// normalizes (counts[j] + prior_pseudocount) * marginal[j], falling back to
// the marginal if every numerator is zero.
std::vector<double> bayes_conditional(const std::vector<double>& counts,
                                      const std::vector<double>& marginal,
                                      double prior_pseudocount);

}  // namespace tmdp

#endif  // TMDP_BLOOM_HPP_
