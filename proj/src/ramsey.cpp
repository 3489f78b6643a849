// Copyright 2026 The qramsey Authors
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

#include "qramsey/ramsey.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qramsey/errors.hpp"
#include "qramsey/parallel.hpp"

namespace qramsey {

RamseyOutcome qr2k_decide(const OperatorSystem& v, int k, std::uint64_t seed, const SolverOptions& opts) {
  if (k < 1) throw BadRank("k must be positive");
  if (v.n() < 3 * static_cast<Eigen::Index>(k) - 2) {
    std::ostringstream os;
    os << "n = " << v.n() << " is below 3k-2 = " << 3 * k - 2;
    throw PreconditionViolated(os.str());
  }
  if (dimension(v) <= 3) return anticlique_dim3(v, k, seed, opts);
  return find_2clique(v, seed, opts);
}

std::vector<int> turan_block_sizes(int n, int m) {
  if (m < 1 || n <= m) {
    std::ostringstream os;
    os << "turan witness needs n > m >= 1, got n = " << n << ", m = " << m;
    throw BadParameters(os.str());
  }
  const int blocks = (n + m - 1) / m;
  const int base = n / blocks;
  const int extra = n % blocks;
  std::vector<int> sizes(static_cast<std::size_t>(blocks), base);
  for (int i = 0; i < extra; ++i) ++sizes[static_cast<std::size_t>(i)];
  return sizes;
}

TuranWitness turan_witness(int n, int m) {
  OperatorSystem v = block_identity_graph(turan_block_sizes(n, m));
  NoAnticliqueProof proof = certify_no_anticlique(v, m + 1);
  return {std::move(v), std::move(proof)};
}

SweepReport turan_lower_sweep(int n, int m, int trials, std::uint64_t seed, const SolverOptions& opts) {
  if (m < 1 || trials < 1 || n <= 3 * m) {
    std::ostringstream os;
    os << "sweep needs n > 3m, m >= 1, trials >= 1; got n = " << n << ", m = " << m;
    throw BadParameters(os.str());
  }
  struct Outcome {
    bool ok;
    double residual;
  };
  SolverOptions inner = opts;
  inner.workers = 1;
  auto run = [&](int i) {
    const std::uint64_t s = derive_seed(seed, static_cast<std::uint64_t>(i));
    try {
      const auto cert = anticlique_dim3(random_graph(n, 3, s), m + 1, s, inner);
      return Outcome{true, cert.residual};
    } catch (const NumericalFailure& e) {
      return Outcome{false, e.best()};
    }
  };
  const auto outcomes =
      detail::run_until_accepted(trials, opts.workers, run, [](const Outcome&) { return false; });

  SweepReport report;
  report.n = n;
  report.m = m;
  report.trials = trials;
  report.seed = seed;
  std::vector<double> residuals;
  for (int i = 0; i < trials; ++i) {
    const Outcome& o = outcomes[static_cast<std::size_t>(i)];
    if (o.ok) {
      residuals.push_back(o.residual);
    } else {
      report.failed_trials.push_back(i);
    }
  }
  report.successes = static_cast<int>(residuals.size());
  if (!residuals.empty()) {
    std::sort(residuals.begin(), residuals.end());
    auto quantile = [&](double q) {
      const auto rank = static_cast<std::size_t>(std::ceil(q * static_cast<double>(residuals.size())));
      return residuals[std::max<std::size_t>(rank, 1) - 1];
    };
    report.residual_min = residuals.front();
    report.residual_median = quantile(0.5);
    report.residual_p90 = quantile(0.9);
    report.residual_max = residuals.back();
  }
  return report;
}

BoundRow anticlique_bound(int d, int k) {
  if (d < 1 || k < 1) throw BadParameters("anticlique_bound needs d >= 1 and k >= 1");
  BoundRow row{d, k, anticlique_min_n(d, k), std::nullopt};
  if (d >= 2) {
    // ceil(n/(d-1)) >= c  <=>  n >= (c-1)(d-1) + 1, with c = (k-1)d + 1.
    const auto c_minus_one = static_cast<std::uint64_t>(k - 1) * static_cast<std::uint64_t>(d);
    row.n_weaver = c_minus_one * static_cast<std::uint64_t>(d - 1) + 1;
  }
  return row;
}

}  // namespace qramsey
