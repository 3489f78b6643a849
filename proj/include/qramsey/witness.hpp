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
#include <vector>

#include "qramsey/numrange.hpp"
#include "qramsey/opsys.hpp"

namespace qramsey {

inline constexpr double kCertificateTol = 1e-8;

/**
 * P = J J^† is a k-anticlique: J^† A_i J = scalars[i] I_k for every stored
 * generator A_i, up to `residual` (max Frobenius error, absolute).
 */
struct AnticliqueCertificate {
  Isometry isometry;
  std::vector<double> scalars;
  double residual = 0.0;
};

/**
 * P = J J^† (rank 2) is a 2-clique: the compressed system is all of M_2,
 * witnessed by the 4th singular value of its Gram matrix.
 */
struct CliqueCertificate {
  Isometry isometry;
  double gram_sigma_min = 0.0;
};

/**
 * Exact non-existence argument for block-identity graphs. With ΣA_i = I_n,
 * a rank-k anticlique P would have P A_i P = c_i P and Σc_i = 1, so some
 * c_i > 0 and rank P <= rank A_i; all block ranks are at most k-1.
 */
struct NoAnticliqueProof {
  int k = 0;
  std::vector<int> block_ranks;
  bool sum_to_identity = false;
  int max_block_rank = 0;
};

/**
 * Smallest n for which every d-dimensional quantum graph in M_n has a
 * k-anticlique by the odd/even recursion: 3^l (k-1) + 1 for d = 2l+1 and
 * 2 * 3^l (k-1) + 1 for d = 2l+2. Throws BadParameters on overflow.
 */
std::uint64_t anticlique_min_n(int d, int k);

/** Throws NotAnticlique when the residual exceeds tol * max(1, max_i ||A_i||_2). */
AnticliqueCertificate verify_anticlique(const OperatorSystem& v, const Isometry& j,
                                        double tol = kCertificateTol);

/**
 * 4th largest singular value of the Gram matrix of the compressed basis
 * {J^† B J}; zero when dim(v) < 4.
 */
double compressed_gram_sigma4(const OperatorSystem& v, const Isometry& j);

/**
 * Recomputes the clique statistic from compress(v, J) with complex trace
 * products. Throws SearchFailed when it is not above `tol`.
 */
CliqueCertificate verify_clique(const OperatorSystem& v, const Isometry& j,
                                double tol = kCertificateTol);

/**
 * k-anticlique of a quantum graph with dim <= 3 in M_n, n >= 3k-2: one
 * scalar compression of A = A_1 + i A_2 scalarizes both Hermitian parts.
 */
AnticliqueCertificate anticlique_dim3(const OperatorSystem& v, int k, std::uint64_t seed,
                                      const SolverOptions& opts = {});

/**
 * k-anticlique by repeatedly scalarizing the last two basis elements and
 * compressing, for n >= anticlique_min_n(dim v, k). The d = 3 level is
 * exactly anticlique_dim3 with the same seed.
 */
AnticliqueCertificate anticlique_recursive(const OperatorSystem& v, int k, std::uint64_t seed,
                                           const SolverOptions& opts = {});

/** Randomized search for a 2-clique, with hill-climbing on σ4 as fallback. */
CliqueCertificate find_2clique(const OperatorSystem& v, std::uint64_t seed,
                               const SolverOptions& opts = {});

/** Throws NotApplicable unless v is a block-identity graph with blocks <= k-1. */
NoAnticliqueProof certify_no_anticlique(const OperatorSystem& v, int k);

}  // namespace qramsey
