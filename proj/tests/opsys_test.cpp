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

#include "qramsey/opsys.hpp"

#include <cmath>

#include "gtest/gtest.h"
#include "oracles.hpp"
#include "qramsey/errors.hpp"

using namespace qramsey;

namespace {

HermitianMatrix diag(std::initializer_list<double> xs) {
  RealVector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) v(i++) = x;
  return HermitianMatrix(ComplexMatrix(v.cast<Complex>().asDiagonal()));
}

HermitianMatrix unit(Eigen::Index n, Eigen::Index i, Eigen::Index j) {
  ComplexMatrix e = ComplexMatrix::Zero(n, n);
  e(i, j) = 1.0;
  return HermitianMatrix(e);
}

void expect_orthonormal_basis(const OperatorSystem& v) {
  const auto& b = v.basis();
  for (std::size_t i = 0; i < b.size(); ++i) {
    EXPECT_TRUE(is_hermitian(b[i].matrix()));
    for (std::size_t j = 0; j < b.size(); ++j) {
      const Complex ip = (b[i].matrix().adjoint() * b[j].matrix()).trace();
      EXPECT_NEAR(std::abs(ip - Complex(i == j ? 1.0 : 0.0)), 0.0, 1e-10);
    }
  }
}

std::vector<ComplexMatrix> with_identity(const OperatorSystem& v) {
  std::vector<ComplexMatrix> out;
  for (const auto& g : v.generators()) out.push_back(g.matrix());
  return out;
}

}  // namespace

TEST(make_graph, identity_only) {
  const OperatorSystem v = make_graph(2, {});
  EXPECT_EQ(v.dim(), 1);
  ASSERT_EQ(v.basis().size(), 1u);
  EXPECT_NEAR((v.basis()[0].matrix() - ComplexMatrix::Identity(2, 2) / std::sqrt(2.0)).norm(), 0.0, 1e-15);
  EXPECT_EQ(v.generators()[0].matrix(), ComplexMatrix::Identity(2, 2));
}

TEST(make_graph, diagonal_units_contain_identity) {
  const OperatorSystem v = make_graph(3, {unit(3, 0, 0), unit(3, 1, 1), unit(3, 2, 2)});
  EXPECT_EQ(v.dim(), 3);
  EXPECT_EQ(v.generators().size(), 4u);
  expect_orthonormal_basis(v);
}

TEST(make_graph, random_pair_has_dimension_three) {
  Rng rng(42);
  const HermitianMatrix h1 = random_hermitian(4, rng);
  const HermitianMatrix h2 = random_hermitian(4, rng);
  const OperatorSystem v = make_graph(4, {h1, h2});
  EXPECT_EQ(v.dim(), 3);
  EXPECT_EQ(oracle::gram_rank(with_identity(v)), 3);
}

TEST(make_graph, rejects_non_hermitian_and_wrong_size) {
  ComplexMatrix a = ComplexMatrix::Zero(2, 2);
  a(0, 1) = 1.0;
  EXPECT_THROW(HermitianMatrix{a}, NonHermitianInput);
  EXPECT_THROW(make_graph(3, {diag({1, 2})}), DimensionMismatch);
}

TEST(make_graph, hermitian_check_is_relative) {
  ComplexMatrix a = ComplexMatrix::Zero(2, 2);
  a(0, 0) = 1e6;
  a(0, 1) = Complex(1.0, 1e-7);  // asymmetry 2e-7 <= 1e-12 * 1e6
  a(1, 0) = 1.0;
  EXPECT_NO_THROW(HermitianMatrix{a});
  a(0, 1) = Complex(1.0, 1e-5);
  EXPECT_THROW(HermitianMatrix{a}, NonHermitianInput);
}

TEST(dimension, examples) {
  EXPECT_EQ(dimension(make_graph(2, {})), 1);
  EXPECT_EQ(dimension(make_graph(3, {unit(3, 0, 0), unit(3, 1, 1), unit(3, 2, 2)})), 3);

  ComplexMatrix sy = ComplexMatrix::Zero(2, 2);
  sy(0, 1) = Complex(0.0, -1.0);
  sy(1, 0) = Complex(0.0, 1.0);
  ComplexMatrix sx = ComplexMatrix::Zero(2, 2);
  sx(0, 1) = sx(1, 0) = 1.0;
  const OperatorSystem m2 = make_graph(2, {unit(2, 0, 0), HermitianMatrix(sx), HermitianMatrix(sy)});
  EXPECT_EQ(dimension(m2), 4);
  expect_orthonormal_basis(m2);
}

TEST(dimension, never_exceeds_n_squared) {
  const OperatorSystem v = random_graph(2, 4, 5);
  std::vector<HermitianMatrix> more(v.generators().begin() + 1, v.generators().end());
  Rng rng(9);
  more.push_back(random_hermitian(2, rng));
  EXPECT_EQ(make_graph(2, more).dim(), 4);
}

TEST(compress, identity_isometry_preserves_span) {
  const OperatorSystem v = random_graph(4, 5, 17);
  const OperatorSystem c = compress(v, Isometry::coordinate(4, 4));
  EXPECT_EQ(c.dim(), v.dim());
  for (const auto& g : v.generators()) EXPECT_TRUE(contains(c, g.matrix(), 1e-9));
  for (const auto& g : c.generators()) EXPECT_TRUE(contains(v, g.matrix(), 1e-9));
}

TEST(compress, block_scalar_collapses) {
  const OperatorSystem v = make_graph(4, {diag({1, 1, 0, 0})});
  const OperatorSystem c = compress(v, Isometry::coordinate(4, 2));
  EXPECT_EQ(c.n(), 2);
  EXPECT_EQ(c.dim(), 1);
}

TEST(compress, picks_out_corner_entries) {
  const OperatorSystem v = make_graph(3, {diag({3, 2, 1})});
  ComplexMatrix j = ComplexMatrix::Zero(3, 2);
  j(0, 0) = 1.0;
  j(2, 1) = 1.0;
  const OperatorSystem c = compress(v, Isometry(j));
  EXPECT_EQ(c.dim(), 2);
  // Direct product: rows/cols {1, 3} of diag(3,2,1).
  EXPECT_TRUE(contains(c, diag({3, 1}).matrix(), 1e-12));
  EXPECT_EQ(c.generators()[1].matrix(), diag({3, 1}).matrix());
}

TEST(compress, rejects_mismatched_isometry) {
  EXPECT_THROW(compress(random_graph(4, 2, 1), Isometry::coordinate(3, 2)), DimensionMismatch);
}

TEST(contains, examples) {
  const OperatorSystem id2 = make_graph(2, {});
  EXPECT_TRUE(contains(id2, ComplexMatrix::Identity(2, 2), 1e-12));
  EXPECT_FALSE(contains(id2, unit(2, 0, 0).matrix(), 1e-6));
  const OperatorSystem b = block_identity_graph({1, 1, 1});
  EXPECT_TRUE(contains(b, diag({1, 2, 3}).matrix(), 1e-12));
  EXPECT_LT(projection_residual(b, diag({1, 2, 3}).matrix()), 1e-14);
}

TEST(block_identity_graph, three_equal_blocks) {
  const OperatorSystem v = block_identity_graph({1, 1, 1});
  EXPECT_EQ(v.n(), 3);
  EXPECT_EQ(v.dim(), 3);
  ASSERT_TRUE(v.block_sizes().has_value());
  EXPECT_EQ(*v.block_sizes(), (std::vector<int>{1, 1, 1}));

  const OperatorSystem one = block_identity_graph({1});
  EXPECT_EQ(one.n(), 1);
  EXPECT_EQ(one.dim(), 1);

  const OperatorSystem two = block_identity_graph({2, 2});
  EXPECT_EQ(two.dim(), 2);
  const ComplexMatrix& a1 = two.generators()[1].matrix();
  const ComplexMatrix& a2 = two.generators()[2].matrix();
  EXPECT_EQ(a1 * a2, ComplexMatrix::Zero(4, 4));
  EXPECT_EQ(a1 + a2, ComplexMatrix::Identity(4, 4));
}

TEST(block_identity_graph, projections_are_orthogonal_and_sum_to_identity) {
  for (const std::vector<int>& sizes : {std::vector<int>{3, 1, 2}, {2, 2, 2, 2}, {5}}) {
    const OperatorSystem v = block_identity_graph(sizes);
    ComplexMatrix sum = ComplexMatrix::Zero(v.n(), v.n());
    for (std::size_t i = 1; i < v.generators().size(); ++i) {
      const ComplexMatrix& ai = v.generators()[i].matrix();
      sum += ai;
      for (std::size_t j = 1; j < v.generators().size(); ++j) {
        const ComplexMatrix& aj = v.generators()[j].matrix();
        EXPECT_EQ(ai * aj, i == j ? ai : ComplexMatrix::Zero(v.n(), v.n()));
      }
    }
    EXPECT_EQ(sum, ComplexMatrix::Identity(v.n(), v.n()));
    EXPECT_EQ(v.dim(), static_cast<int>(sizes.size()));
  }
  EXPECT_THROW(block_identity_graph({}), BadParameters);
  EXPECT_THROW(block_identity_graph({2, 0}), BadParameters);
}

TEST(detect_block_structure, recovers_metadata_only_for_blocks) {
  const OperatorSystem v = block_identity_graph({2, 1});
  std::vector<HermitianMatrix> gens(v.generators().begin() + 1, v.generators().end());
  const OperatorSystem again = detect_block_structure(make_graph(3, gens));
  ASSERT_TRUE(again.block_sizes().has_value());
  EXPECT_EQ(*again.block_sizes(), (std::vector<int>{2, 1}));
  EXPECT_FALSE(detect_block_structure(random_graph(3, 3, 1)).block_sizes().has_value());
  EXPECT_FALSE(detect_block_structure(make_graph(3, {diag({1, 1, 0})})).block_sizes().has_value());
}

TEST(random_graph, dimensions) {
  EXPECT_EQ(random_graph(4, 1, 123).dim(), 1);
  const OperatorSystem v = random_graph(4, 3, 7);
  EXPECT_EQ(v.dim(), 3);
  EXPECT_EQ(oracle::gram_rank(with_identity(v)), 3);
  const OperatorSystem full = random_graph(2, 4, 1);
  EXPECT_EQ(full.dim(), 4);
  EXPECT_EQ(oracle::gram_rank(with_identity(full)), 4);
  EXPECT_THROW(random_graph(2, 5, 1), BadDimension);
  EXPECT_THROW(random_graph(2, 0, 1), BadDimension);
}

TEST(random_graph, reproducible) {
  const OperatorSystem a = random_graph(5, 4, 99);
  const OperatorSystem b = random_graph(5, 4, 99);
  ASSERT_EQ(a.generators().size(), b.generators().size());
  for (std::size_t i = 0; i < a.generators().size(); ++i) EXPECT_EQ(a.generators()[i], b.generators()[i]);
  EXPECT_FALSE(random_graph(5, 4, 100).generators()[1] == a.generators()[1]);
}

// Invariants over a spread of random systems.
TEST(opsys_properties, random_systems) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Eigen::Index n = 1 + static_cast<Eigen::Index>(seed % 6);
    const int d = 1 + static_cast<int>(seed % static_cast<std::uint64_t>(std::min<Eigen::Index>(n * n, 7)));
    const OperatorSystem v = random_graph(n, d, seed);
    SCOPED_TRACE(testing::Message() << "n=" << n << " d=" << d << " seed=" << seed);

    EXPECT_EQ(v.dim(), d);
    EXPECT_EQ(v.generators()[0].matrix(), ComplexMatrix::Identity(n, n));
    EXPECT_LE(v.dim(), std::min<Eigen::Index>(n * n, static_cast<Eigen::Index>(v.generators().size())));
    expect_orthonormal_basis(v);
    EXPECT_TRUE(contains(v, ComplexMatrix::Identity(n, n), 1e-10));
    for (const auto& g : v.generators()) {
      EXPECT_LE(projection_residual(v, g.matrix()), 1e-10 * std::max(1.0, g.matrix().norm()));
    }
    for (std::size_t i = 1; i < v.basis().size(); ++i) EXPECT_NEAR(std::abs(v.basis()[i].matrix().trace()), 0.0, 1e-10);

    // Rebuilding from the basis is idempotent.
    std::vector<HermitianMatrix> from_basis(v.basis().begin() + 1, v.basis().end());
    EXPECT_EQ(make_graph(n, from_basis).dim(), v.dim());

    // Compressions never gain dimension.
    Rng rng(seed + 1000);
    for (Eigen::Index k = 1; k <= n; ++k) {
      EXPECT_LE(compress(v, random_isometry(n, k, rng)).dim(), v.dim());
    }
  }
}

TEST(hermitian_split, recombines) {
  Rng rng(3);
  const ComplexMatrix a = gaussian_matrix(3, 3, rng);
  const auto [re, im] = hermitian_split(a);
  EXPECT_NEAR((re.matrix() + Complex(0.0, 1.0) * im.matrix() - a).norm(), 0.0, 1e-14);
}
