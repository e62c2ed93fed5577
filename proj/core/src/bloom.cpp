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

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "tmdp/errors.hpp"
#include "tmdp/rng.hpp"

namespace tmdp {

std::uint64_t BloomParams::cell_count() const {
  if (capacity == 0 || hash_count < 1 || !(fp_rate > 0.0 && fp_rate < 1.0)) {
    throw ContractViolation(
        "bloom parameters need capacity > 0, hash_count >= 1, fp in (0,1)");
  }
  const double k = hash_count;
  const double per_probe = std::pow(fp_rate, 1.0 / k);
  const double m =
      -k * static_cast<double>(capacity) / std::log1p(-per_probe);
  return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::ceil(m)));
}

CountingBloomFilter::CountingBloomFilter(const BloomParams& params)
    : params_(params), cells_(params.cell_count(), 0) {}

template <typename Fn>
void CountingBloomFilter::for_each_probe(std::uint64_t key, Fn&& fn) const {
  // Kirsch-Mitzenmacher double hashing.
  const std::uint64_t h1 = Rng::splitmix64(key);
  const std::uint64_t h2 = Rng::splitmix64(h1 ^ 0x5851f42d4c957f2dULL) | 1ULL;
  const std::uint64_t m = cells_.size();
  for (int i = 0; i < params_.hash_count; ++i) {
    fn(static_cast<std::size_t>((h1 + static_cast<std::uint64_t>(i) * h2) % m));
  }
}

void CountingBloomFilter::add(std::uint64_t key) {
  for_each_probe(key, [this](std::size_t idx) {
    if (cells_[idx] < std::numeric_limits<std::uint32_t>::max()) ++cells_[idx];
  });
}

std::uint32_t CountingBloomFilter::count(std::uint64_t key) const {
  std::uint32_t best = std::numeric_limits<std::uint32_t>::max();
  for_each_probe(key,
                 [&](std::size_t idx) { best = std::min(best, cells_[idx]); });
  return best;
}

void CountingBloomFilter::set_cells(std::vector<std::uint32_t> cells) {
  if (cells.size() != cells_.size()) {
    throw ContractViolation("bloom cell count does not match parameters");
  }
  cells_ = std::move(cells);
}

BloomConditionalModel::BloomConditionalModel(int n_opp_actions,
                                             const BloomParams& params,
                                             double marginal_prior,
                                             double prior_pseudocount)
    : filters_(n_opp_actions > 0 ? n_opp_actions : 0,
               CountingBloomFilter(params)),
      marginal_(n_opp_actions, marginal_prior),
      prior_pseudocount_(prior_pseudocount) {
  if (!(prior_pseudocount >= 0.0)) {
    throw ContractViolation("prior pseudocount must be >= 0");
  }
}

void BloomConditionalModel::update(std::uint64_t state, int opp_action) {
  marginal_.observe(opp_action);
  filters_[opp_action].add(state);
}

std::uint32_t BloomConditionalModel::approx_count(std::uint64_t state,
                                                  int opp_action) const {
  if (opp_action < 0 || opp_action >= n_opp_actions()) {
    throw IndexError("opponent action " + std::to_string(opp_action));
  }
  return filters_[opp_action].count(state);
}

std::vector<double> BloomConditionalModel::conditional_predictive(
    std::uint64_t state) const {
  std::vector<double> counts(filters_.size());
  for (std::size_t j = 0; j < filters_.size(); ++j) {
    counts[j] = filters_[j].count(state);
  }
  return bayes_conditional(counts, marginal_.predictive(), prior_pseudocount_);
}

std::vector<double> bayes_conditional(const std::vector<double>& counts,
                                      const std::vector<double>& marginal,
                                      double prior_pseudocount) {
  if (counts.size() != marginal.size()) {
    throw ContractViolation("counts and marginal differ in length");
  }
  std::vector<double> out(counts.size());
  double total = 0.0;
  for (std::size_t j = 0; j < out.size(); ++j) {
    out[j] = (counts[j] + prior_pseudocount) * marginal[j];
    total += out[j];
  }
  if (!(total > 0.0)) return marginal;
  for (auto& p : out) p /= total;
  return out;
}

}  // namespace tmdp
