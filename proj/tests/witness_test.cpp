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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "gtest/gtest.h"
#include "oracles.hpp"
#include "qramsey/errors.hpp"
#include "qramsey/witness.hpp"

using namespace qramsey;

namespace {

HermitianMatrix diag(std::initializer_list<double> d) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(d.size()));
  Eigen::Index i = 0;
  for (double x : d) v(i++) = x;
  return HermitianMatrix(v.cast<Complex>().asDiagonal());
}

// Largest ||J^† A J - c I||_F over the stored generators, computed by plain
// multiplication with c = tr(J^† A J)/k.
double oracle_anticlique_error(const OperatorSystem& v, const ComplexMatrix& j) {
  double worst = 0.0;
  for (const auto& g : v.generators()) {
    const ComplexMatrix c = j.adjoint() * g.matrix() * j;
    const Complex s = c.trace() / static_cast<double>(j.cols());
    worst = std::max(worst, (c - s * ComplexMatrix::Identity(j.cols(), j.cols())).norm());
  }
  return worst;
}

// M_2 contains the four Gram-independent compressions.
int oracle_compressed_dim(const OperatorSystem& v, const ComplexMatrix& j) {
  std::vector<Eigen::MatrixXcd> xs;
  for (const auto& b : v.basis()) xs.push_back(j.adjoint() * b.matrix() * j);
  return oracle::gram_rank(xs);
}

ComplexMatrix columns(Eigen::Index n, std::vector<Eigen::Index> idx) {
  ComplexMatrix j = ComplexMatrix::Zero(n, static_cast<Eigen::Index>(idx.size()));
  for (std::size_t c = 0; c < idx.size(); ++c) j(idx[c], static_cast<Eigen::Index>(c)) = 1.0;
  return j;
}

OperatorSystem pauli_system() {
  ComplexMatrix x(2, 2), y(2, 2), z(2, 2);
  x << 0, 1, 1, 0;
  y << 0, Complex(0, -1), Complex(0, 1), 0;
  z << 1, 0, 0, -1;
  return make_graph(2, {HermitianMatrix(x), HermitianMatrix(y), HermitianMatrix(z)});
}

}  // namespace

TEST(anticlique_min_n, values) {
  EXPECT_EQ(anticlique_min_n(1, 4), 4u);
  EXPECT_EQ(anticlique_min_n(2, 3), 5u);
  EXPECT_EQ(anticlique_min_n(3, 2), 4u);
  EXPECT_EQ(anticlique_min_n(3, 5), 13u);
  EXPECT_EQ(anticlique_min_n(4, 2), 7u);
  EXPECT_EQ(anticlique_min_n(5, 2), 10u);
  EXPECT_EQ(anticlique_min_n(5, 3), 19u);
  EXPECT_EQ(anticlique_min_n(6, 2), 19u);
  EXPECT_THROW(anticlique_min_n(90, 2), BadParameters);
}

TEST(verify_anticlique, identity_only_system) {
  const OperatorSystem v = make_graph(4, {});
  const auto cert = verify_anticlique(v, Isometry::coordinate(4, 2));
  ASSERT_EQ(cert.scalars.size(), 1u);
  EXPECT_DOUBLE_EQ(cert.scalars[0], 1.0);
  EXPECT_EQ(cert.residual, 0.0);
}

TEST(verify_anticlique, rejects_non_scalar_compression) {
  const OperatorSystem v = make_graph(3, {diag({1, 2, 3})});
  EXPECT_THROW(verify_anticlique(v, Isometry::coordinate(3, 2)), NotAnticlique);
  const auto ok = verify_anticlique(v, Isometry(columns(3, {1})));
  EXPECT_DOUBLE_EQ(ok.scalars[1], 2.0);
}

TEST(verify_anticlique, rank_one_always_passes) {
  Rng rng(12);
  for (int t = 0; t < 20; ++t) {
    const OperatorSystem v = random_graph(5, 1 + t % 6, static_cast<std::uint64_t>(t));
    EXPECT_NO_THROW(verify_anticlique(v, random_isometry(5, 1, rng)));
  }
}

// Sub-isometries of an anticlique are anticliques.
TEST(verify_anticlique, column_subsets) {
  const OperatorSystem v = random_graph(7, 3, 21);
  const auto cert = anticlique_dim3(v, 3, 21);
  const ComplexMatrix& j = cert.isometry.matrix();
  for (Eigen::Index a = 0; a < 3; ++a)
    for (Eigen::Index b = a + 1; b < 3; ++b) {
      ComplexMatrix sub(7, 2);
      sub << j.col(a), j.col(b);
      EXPECT_NO_THROW(verify_anticlique(v, Isometry(sub)));
    }
}

TEST(anticlique_dim3, identity_only) {
  const auto cert = anticlique_dim3(make_graph(4, {}), 2, 0);
  EXPECT_LE(oracle_anticlique_error(make_graph(4, {}), cert.isometry.matrix()), 1e-12);
}

TEST(anticlique_dim3, random_pencil) {
  const OperatorSystem v = random_graph(4, 3, 7);
  const auto cert = anticlique_dim3(v, 2, 7);
  EXPECT_EQ(cert.isometry.k(), 2);
  EXPECT_LE(oracle_anticlique_error(v, cert.isometry.matrix()),
            1e-8 * std::max(1.0, v.max_generator_norm()));
}

// None of the six coordinate 2-subspaces works, but an anticlique exists.
TEST(anticlique_dim3, needs_a_non_coordinate_subspace) {
  const OperatorSystem v = make_graph(4, {diag({1, 1, 0, 0}), diag({0, 1, 1, 0})});
  for (Eigen::Index a = 0; a < 4; ++a)
    for (Eigen::Index b = a + 1; b < 4; ++b)
      EXPECT_GT(oracle_anticlique_error(v, columns(4, {a, b})), 0.5) << a << "," << b;
  const auto cert = anticlique_dim3(v, 2, 3);
  const ComplexMatrix& j = cert.isometry.matrix();
  EXPECT_LE(oracle_anticlique_error(v, j), 1e-8);
  const ComplexMatrix p = j * j.adjoint();
  const ComplexMatrix off = p - ComplexMatrix(p.diagonal().asDiagonal());
  EXPECT_GT(off.cwiseAbs().maxCoeff(), 1e-3);
}

TEST(anticlique_dim3, preconditions) {
  EXPECT_THROW(anticlique_dim3(random_graph(4, 4, 1), 2, 0), DimTooLarge);
  EXPECT_THROW(anticlique_dim3(random_graph(3, 3, 1), 2, 0), PreconditionViolated);
  EXPECT_THROW(anticlique_dim3(random_graph(4, 3, 1), 0, 0), BadRank);
}

TEST(anticlique_dim3, completeness_at_the_boundary) {
  for (int k = 2; k <= 4; ++k) {
    const Eigen::Index n = 3 * k - 2;
    int ok = 0;
    for (int s = 0; s < 100; ++s) {
      const auto seed = static_cast<std::uint64_t>(1000 * k + s);
      const OperatorSystem v = random_graph(n, 1 + s % 3, seed);
      const auto cert = anticlique_dim3(v, k, seed);
      if (oracle_anticlique_error(v, cert.isometry.matrix()) <=
          1e-8 * std::max(1.0, v.max_generator_norm()))
        ++ok;
    }
    EXPECT_EQ(ok, 100) << "k=" << k;
  }
}

TEST(anticlique_dim3, padded_with_extra_rows) {
  // Larger n than needed is fine.
  const OperatorSystem v = random_graph(9, 3, 5);
  const auto cert = anticlique_dim3(v, 2, 5);
  EXPECT_LE(oracle_anticlique_error(v, cert.isometry.matrix()), 1e-8 * v.max_generator_norm());
}

TEST(anticlique_recursive, odd_dimension) {
  const OperatorSystem v = random_graph(10, 5, 3);
  const auto cert = anticlique_recursive(v, 2, 3);
  EXPECT_EQ(cert.isometry.k(), 2);
  EXPECT_LE(oracle_anticlique_error(v, cert.isometry.matrix()),
            1e-8 * std::max(1.0, v.max_generator_norm()));
}

TEST(anticlique_recursive, even_dimension) {
  const OperatorSystem v = random_graph(7, 4, 3);
  const auto cert = anticlique_recursive(v, 2, 3);
  EXPECT_LE(oracle_anticlique_error(v, cert.isometry.matrix()),
            1e-8 * std::max(1.0, v.max_generator_norm()));
}

TEST(anticlique_recursive, two_dimensional_is_exact) {
  const OperatorSystem v = make_graph(5, {diag({5, 4, 3, 2, 1})});
  const auto cert = anticlique_recursive(v, 3, 0);
  EXPECT_NEAR(cert.scalars[1], 3.0, 1e-12);
  EXPECT_LE(oracle_anticlique_error(v, cert.isometry.matrix()), 1e-10);
}

TEST(anticlique_recursive, one_dimensional) {
  const OperatorSystem v = make_graph(3, {});
  const auto cert = anticlique_recursive(v, 3, 0);
  EXPECT_EQ(cert.isometry.k(), 3);
}

TEST(anticlique_recursive, agrees_with_dim3) {
  const OperatorSystem v = random_graph(7, 3, 44);
  const auto a = anticlique_recursive(v, 3, 44);
  const auto b = anticlique_dim3(v, 3, 44);
  EXPECT_EQ(a.isometry.matrix(), b.isometry.matrix());
}

TEST(anticlique_recursive, preconditions) {
  EXPECT_THROW(anticlique_recursive(random_graph(9, 5, 1), 2, 0), PreconditionViolated);
  EXPECT_THROW(anticlique_recursive(random_graph(6, 4, 1), 2, 0), PreconditionViolated);
}

TEST(find_2clique, full_matrix_algebra) {
  const OperatorSystem v = pauli_system();
  const auto cert = find_2clique(v, 0);
  EXPECT_NEAR(cert.gram_sigma_min, 1.0, 1e-10);
  EXPECT_EQ(oracle_compressed_dim(v, cert.isometry.matrix()), 4);
}

TEST(find_2clique, random_dimension_five) {
  const OperatorSystem v = random_graph(4, 5, 11);
  const auto cert = find_2clique(v, 11);
  EXPECT_GT(cert.gram_sigma_min, 1e-8);
  EXPECT_EQ(oracle_compressed_dim(v, cert.isometry.matrix()), 4);
}

TEST(find_2clique, too_small) {
  EXPECT_THROW(find_2clique(block_identity_graph({1, 1, 1}), 0), DimTooSmall);
}

// With a demanding threshold the random draws fall short and the ascent runs.
TEST(find_2clique, ascent_raises_sigma4) {
  const OperatorSystem corner = [] {
    std::vector<HermitianMatrix> hs;
    const OperatorSystem p = pauli_system();
    for (std::size_t i = 1; i < p.generators().size(); ++i) {
      ComplexMatrix big = ComplexMatrix::Zero(6, 6);
      big.topLeftCorner(2, 2) = p.generators()[i].matrix();
      hs.emplace_back(big);
    }
    return make_graph(6, hs);
  }();
  SolverOptions opts;
  opts.restarts = 1;
  opts.clique_tol = 0.3;  // the optimum here is 1/3
  Rng rng(derive_seed(9, 0));
  EXPECT_LT(compressed_gram_sigma4(corner, random_isometry(6, 2, rng)), 0.3);
  const auto cert = find_2clique(corner, 9, opts);
  EXPECT_GT(cert.gram_sigma_min, 0.3);
  EXPECT_EQ(oracle_compressed_dim(corner, cert.isometry.matrix()), 4);
}

TEST(verify_clique, rejects_degenerate_compression) {
  // A coordinate compression of a diagonal system is commutative, hence not M_2.
  const OperatorSystem d = make_graph(4, {diag({1, 0, 0, 0}), diag({0, 1, 0, 0}), diag({0, 0, 1, 0})});
  EXPECT_THROW(verify_clique(d, Isometry::coordinate(4, 2)), SearchFailed);
}

TEST(certify_no_anticlique, examples) {
  const auto p = certify_no_anticlique(block_identity_graph({1, 1, 1}), 2);
  EXPECT_TRUE(p.sum_to_identity);
  EXPECT_EQ(p.max_block_rank, 1);
  EXPECT_EQ(p.block_ranks, (std::vector<int>{1, 1, 1}));
  const auto q = certify_no_anticlique(block_identity_graph({2, 2, 2}), 3);
  EXPECT_EQ(q.max_block_rank, 2);
  EXPECT_THROW(certify_no_anticlique(block_identity_graph({2, 1}), 2), NotApplicable);
  EXPECT_THROW(certify_no_anticlique(random_graph(3, 3, 0), 2), NotApplicable);
}

// Three equal blocks of size k-1 in M_{3k-3}: exact proof, and the
// dim-3 search is not even applicable there.
TEST(certify_no_anticlique, sharpness) {
  for (int k = 2; k <= 5; ++k) {
    const OperatorSystem v = block_identity_graph({k - 1, k - 1, k - 1});
    EXPECT_EQ(v.n(), 3 * k - 3);
    EXPECT_EQ(dimension(v), 3);
    const auto p = certify_no_anticlique(v, k);
    EXPECT_LE(p.max_block_rank, k - 1);
    EXPECT_THROW(anticlique_dim3(v, k, 0), PreconditionViolated);
  }
}
