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
#include "tmdp/verification.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>

#include "tmdp/beliefs.hpp"
#include "tmdp/bloom.hpp"
#include "tmdp/operators.hpp"
#include "tmdp/rng.hpp"

namespace tmdp {

namespace {

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

struct Tally {
  int checks = 0;
  int failures = 0;
  double worst = -INFINITY;  // largest (observed - allowed)
  double worst_ratio = 0.0;  // largest observed / input distance
};

struct FixedTally {
  int runs = 0;
  int failures = 0;
  int max_iterations = 0;
  double worst_residual = 0.0;
};

double pick_gamma(const VerifyOptions& o, int i) {
  if (o.injected_gamma >= 0.0) return o.injected_gamma;
  return o.gammas[static_cast<std::size_t>(i) % o.gammas.size()];
}

template <typename Table>
void record_fixed_point(FixedTally& tally, const VerifyOptions& o,
                        const std::function<Table(const Table&)>& op,
                        Table q0) {
  ++tally.runs;
  try {
    auto r = fixed_point_iterate<Table>(op, std::move(q0), o.fixed_point_tol,
                                        o.fixed_point_max_iters);
    tally.max_iterations = std::max(tally.max_iterations, r.iterations);
    tally.worst_residual = std::max(tally.worst_residual, r.residuals.back());
  } catch (const NonConvergenceError& e) {
    ++tally.failures;
    tally.max_iterations = std::max(tally.max_iterations, e.iterations());
    tally.worst_residual = std::max(tally.worst_residual, e.residual());
  }
}

void check_contraction(Tally& t, double out_dist, double in_dist, double gamma,
                       double slack) {
  ++t.checks;
  const double excess = out_dist - (gamma * in_dist + slack);
  if (excess > 0.0) ++t.failures;
  t.worst = std::max(t.worst, excess);
  if (in_dist > 0.0) t.worst_ratio = std::max(t.worst_ratio, out_dist / in_dist);
}

PropertyResult contraction_result(const std::string& name, const Tally& t) {
  return {name, t.failures == 0,
          std::to_string(t.checks) + " pairs, " + std::to_string(t.failures) +
              " violations, worst excess " + sci(t.worst) +
              ", max ratio " + sci(t.worst_ratio)};
}

PropertyResult fixed_result(const std::string& name, const FixedTally& t,
                            double tol) {
  return {name, t.failures == 0,
          std::to_string(t.runs) + " runs, " + std::to_string(t.failures) +
              " above " + sci(tol) + ", worst residual " +
              sci(t.worst_residual) + ", max iterations " +
              std::to_string(t.max_iterations)};
}

void operator_checks(const VerifyOptions& o, VerifyReport& report) {
  Rng rng(Rng::derive_seed(o.master_seed, 11));
  Tally h;
  Tally hbar;
  FixedTally h_fixed;
  FixedTally hbar_fixed;
  double max_gamma = 0.0;
  for (int i = 0; i < o.n_specs; ++i) {
    const int n_s = 1 + rng.uniform_int(o.max_states);
    const int n_a = 1 + rng.uniform_int(o.max_actions);
    const int n_b = 1 + rng.uniform_int(o.max_actions);
    const double gamma = pick_gamma(o, i);
    max_gamma = std::max(max_gamma, gamma);
    const TmdpSpec spec = random_tmdp_spec(rng, n_s, n_a, n_b);
    const BeliefTable belief = random_belief(rng, n_s, n_b);

    for (int k = 0; k < o.pairs_per_spec; ++k) {
      const auto q1 = random_joint_q(rng, n_s, n_a, n_b);
      const auto q2 = random_joint_q(rng, n_s, n_a, n_b);
      check_contraction(h,
                        apply_operator_h(q1, spec, belief, gamma)
                            .sup_distance(apply_operator_h(q2, spec, belief,
                                                           gamma)),
                        q1.sup_distance(q2), gamma, o.slack);
      const auto p1 = random_q(rng, n_s, n_a);
      const auto p2 = random_q(rng, n_s, n_a);
      check_contraction(hbar,
                        apply_operator_hbar(p1, spec, belief, gamma)
                            .sup_distance(apply_operator_hbar(p2, spec, belief,
                                                              gamma)),
                        p1.sup_distance(p2), gamma, o.slack);
    }

    record_fixed_point<JointQTable>(
        h_fixed, o,
        [&](const JointQTable& q) {
          return apply_operator_h(q, spec, belief, gamma);
        },
        JointQTable(n_s, n_a, n_b));
    record_fixed_point<QTable>(
        hbar_fixed, o,
        [&](const QTable& q) {
          return apply_operator_hbar(q, spec, belief, gamma);
        },
        QTable(n_s, n_a));
  }
  report.results.push_back({"contraction margin", max_gamma < 1.0,
                            "largest discount " + sci(max_gamma) +
                                (max_gamma < 1.0 ? " < 1" : " is not < 1")});
  report.results.push_back(contraction_result("H contraction", h));
  report.results.push_back(contraction_result("Hbar contraction", hbar));
  report.results.push_back(
      fixed_result("H fixed point", h_fixed, o.fixed_point_tol));
  report.results.push_back(
      fixed_result("Hbar fixed point", hbar_fixed, o.fixed_point_tol));
}

double total_variation(const std::vector<double>& p,
                       const std::vector<double>& q) {
  double d = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) d += std::abs(p[i] - q[i]);
  return 0.5 * d;
}

void bloom_check(const VerifyOptions& o, VerifyReport& report) {
  Rng rng(Rng::derive_seed(o.master_seed, 12));
  const int n_b = o.belief_actions;
  // Each state gets its own skewed action distribution.
  std::vector<std::vector<double>> dists(o.belief_states);
  for (auto& d : dists) {
    d.resize(n_b);
    double total = 0.0;
    for (double& x : d) {
      x = rng.uniform() * rng.uniform();
      total += x;
    }
    for (double& x : d) x /= total;
  }

  BloomParams params;
  params.capacity = o.bloom_capacity;
  BloomConditionalModel model(n_b, params);
  std::vector<std::vector<double>> exact(o.belief_states,
                                         std::vector<double>(n_b, 0.0));
  std::vector<double> marginal_counts(n_b, 1.0);
  for (int t = 0; t < o.belief_stream_length; ++t) {
    const int s = rng.uniform_int(o.belief_states);
    const double u = rng.uniform();
    int b = n_b - 1;
    double acc = 0.0;
    for (int j = 0; j < n_b; ++j) {
      acc += dists[s][j];
      if (u < acc) {
        b = j;
        break;
      }
    }
    model.update(Rng::splitmix64(static_cast<std::uint64_t>(s)), b);
    exact[s][b] += 1.0;
    marginal_counts[b] += 1.0;
  }
  double total = 0.0;
  for (double c : marginal_counts) total += c;
  std::vector<double> marginal(n_b);
  for (int j = 0; j < n_b; ++j) marginal[j] = marginal_counts[j] / total;

  double worst = 0.0;
  for (int s = 0; s < o.belief_states; ++s) {
    const auto approx = model.conditional_predictive(
        Rng::splitmix64(static_cast<std::uint64_t>(s)));
    const auto oracle =
        bayes_conditional(exact[s], marginal, model.prior_pseudocount());
    worst = std::max(worst, total_variation(approx, oracle));
  }
  report.results.push_back(
      {"bloom conditional vs exact counts", worst <= o.tv_tolerance,
       std::to_string(o.belief_stream_length) + " steps over " +
           std::to_string(o.belief_states) + " states, max TV " + sci(worst) +
           " (limit " + sci(o.tv_tolerance) + ")"});
}

void forget_check(const VerifyOptions& o, VerifyReport& report) {
  Rng rng(Rng::derive_seed(o.master_seed, 13));
  double worst = 0.0;
  int runs = 0;
  for (double lambda : {0.5, 0.8, 0.9, 0.99}) {
    for (double prior : {0.5, 1.0, 3.0}) {
      DirichletBelief belief(o.belief_actions, prior, lambda);
      const double t0 = belief.total();
      for (int k = 1; k <= 1000; ++k) {
        belief.forget_observe(rng.uniform_int(o.belief_actions));
        const double lk = std::pow(lambda, k);
        const double closed = lk * t0 + (1.0 - lk) / (1.0 - lambda);
        worst = std::max(worst, std::abs(belief.total() - closed));
      }
      ++runs;
    }
  }
  report.results.push_back(
      {"forget pseudocount closed form", worst <= o.forget_tolerance,
       std::to_string(runs) + " streams of 1000 steps, max error " +
           sci(worst)});
}

}  // namespace

bool VerifyReport::all_passed() const {
  return std::all_of(results.begin(), results.end(),
                     [](const PropertyResult& r) { return r.passed; });
}

std::string VerifyReport::to_text() const {
  std::string out;
  for (const auto& r : results) {
    out += r.passed ? "PASS " : "FAIL ";
    out += r.name;
    out += ": ";
    out += r.detail;
    out += '\n';
  }
  return out;
}

VerifyReport run_verification(const VerifyOptions& options) {
  VerifyReport report;
  operator_checks(options, report);
  bloom_check(options, report);
  forget_check(options, report);
  return report;
}

}  // namespace tmdp
