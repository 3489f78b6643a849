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
#include <vector>

#include "qramsey/linalg.hpp"

namespace qramsey {

/** Gram singular values at or below this fraction of the largest are treated as zero. */
inline constexpr double kGramRankThreshold = 1e-8;

/**
 * A quantum graph: the complex span of I_n and a list of Hermitian matrices.
 *
 * Generator 0 is always exactly I_n, followed by the caller's matrices in the
 * order given (none are dropped, even when linearly dependent). The basis is
 * orthonormal under trace(X^† Y), consists of Hermitian matrices, and starts
 * with I_n / sqrt(n); every later basis element is traceless.
 *
 * Values are immutable once built.
 */
class OperatorSystem {
 public:
  Eigen::Index n() const { return n_; }
  int dim() const { return static_cast<int>(basis_.size()); }

  const std::vector<HermitianMatrix>& generators() const { return generators_; }
  const std::vector<HermitianMatrix>& basis() const { return basis_; }

  /** Block sizes when this system is a block-identity graph, in diagonal order. */
  const std::optional<std::vector<int>>& block_sizes() const { return block_sizes_; }

  /** Largest spectral norm over the stored generators. */
  double max_generator_norm() const;

 private:
  friend OperatorSystem make_graph(Eigen::Index, const std::vector<HermitianMatrix>&);
  friend OperatorSystem block_identity_graph(const std::vector<int>&);
  friend OperatorSystem with_block_metadata(OperatorSystem, std::vector<int>);

  Eigen::Index n_ = 0;
  std::vector<HermitianMatrix> generators_;
  std::vector<HermitianMatrix> basis_;
  std::optional<std::vector<int>> block_sizes_;
};

/**
 * span{I_n, hermitians}. Throws DimensionMismatch when a matrix is not n x n.
 * Non-Hermitian input is already rejected by HermitianMatrix itself.
 */
OperatorSystem make_graph(Eigen::Index n, const std::vector<HermitianMatrix>& hermitians);

/** Number of Gram singular values above kGramRankThreshold * sigma_max. */
int dimension(const OperatorSystem& v);

/** span{J^† A J : A a generator of v}, each compression re-Hermitized. */
OperatorSystem compress(const OperatorSystem& v, const Isometry& j);

/** ||A - P(A)||_F <= tol * max(1, ||A||_F), P the orthogonal projection onto v. */
bool contains(const OperatorSystem& v, const ComplexMatrix& a, double tol);

/** Frobenius norm of the component of `a` orthogonal to v. */
double projection_residual(const OperatorSystem& v, const ComplexMatrix& a);

/**
 * The span of the diagonal block-identity projections with the given sizes.
 * Block metadata is attached for certify_no_anticlique.
 */
OperatorSystem block_identity_graph(const std::vector<int>& block_sizes);

/**
 * Recognizes a system whose non-identity generators are exactly the
 * contiguous diagonal block projections summing to I_n, and reattaches the
 * block metadata (used after reading a graph file). Returns v unchanged
 * otherwise.
 */
OperatorSystem detect_block_structure(OperatorSystem v);

/**
 * span{I_n, H_1, ..., H_{d-1}} with H_i independent Hermitian matrices having
 * standard complex Gaussian off-diagonals and standard real Gaussian
 * diagonals. Deterministic in (n, d, seed). Throws BadDimension unless
 * 1 <= d <= n^2.
 */
OperatorSystem random_graph(Eigen::Index n, int d, std::uint64_t seed);

/** A random Hermitian matrix drawn exactly as in random_graph. */
HermitianMatrix random_hermitian(Eigen::Index n, Rng& rng);

/** Splits an arbitrary square matrix into its Hermitian parts (A+A^†)/2, (A-A^†)/(2i). */
std::pair<HermitianMatrix, HermitianMatrix> hermitian_split(const ComplexMatrix& a);

}  // namespace qramsey
