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

#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "qramsey/witness.hpp"

namespace qramsey {

using RamseyOutcome = std::variant<CliqueCertificate, AnticliqueCertificate>;

/**
 * For n >= 3k-2: a k-anticlique when dim(v) <= 3, otherwise a 2-clique.
 * Throws PreconditionViolated when n < 3k-2.
 */
RamseyOutcome qr2k_decide(const OperatorSystem& v, int k, std::uint64_t seed,
                          const SolverOptions& opts = {});

struct TuranWitness {
  OperatorSystem system;
  NoAnticliqueProof proof;
};

/** ceil(n/m) near-equal diagonal blocks of size <= m, with no (m+1)-anticlique. */
TuranWitness turan_witness(int n, int m);

/** Equal-as-possible block sizes, larger blocks first. */
std::vector<int> turan_block_sizes(int n, int m);

struct SweepReport {
  int n = 0;
  int m = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  int successes = 0;
  std::vector<int> failed_trials;
  /// Nearest-rank quantiles over successful trials.
  double residual_min = 0.0;
  double residual_median = 0.0;
  double residual_p90 = 0.0;
  double residual_max = 0.0;
};

/**
 * Runs anticlique_dim3(random_graph(n, 3, s_i), m+1) for `trials` derived
 * seeds. Requires n > 3m; any failure is recorded, never thrown.
 */
SweepReport turan_lower_sweep(int n, int m, int trials, std::uint64_t seed,
                              const SolverOptions& opts = {});

struct BoundRow {
  int d = 0;
  int k = 0;
  std::uint64_t n_thm8 = 0;
  /// Minimal n with (k-1)d + 1 <= ceil(n/(d-1)); undefined for d = 1.
  std::optional<std::uint64_t> n_weaver;
};

BoundRow anticlique_bound(int d, int k);

}  // namespace qramsey
