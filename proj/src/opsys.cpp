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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "qramsey/errors.hpp"

namespace qramsey {

OperatorSystem with_block_metadata(OperatorSystem v, std::vector<int> sizes);

double OperatorSystem::max_generator_norm() const {
  double best = 0.0;
  for (const auto& g : generators_) best = std::max(best, spectral_norm(g.matrix()));
  return best;
}

OperatorSystem make_graph(Eigen::Index n, const std::vector<HermitianMatrix>& hermitians) {
  if (n < 1) throw BadDimension("operator system needs n >= 1");
  for (const auto& h : hermitians) {
    if (h.n() != n) {
      std::ostringstream os;
      os << "generator is " << h.n() << "x" << h.n() << " but the system lives in M_" << n;
      throw DimensionMismatch(os.str());
    }
  }

  OperatorSystem v;
  v.n_ = n;
  v.generators_.reserve(hermitians.size() + 1);
  v.generators_.emplace_back(ComplexMatrix::Identity(n, n));
  v.generators_.insert(v.generators_.end(), hermitians.begin(), hermitians.end());

  // Everything below works in the real coordinates of the Hermitian matrices,
  // where real combinations stay Hermitian and dot products are trace products.
  const Eigen::Index dims = n * n;
  const auto m = static_cast<Eigen::Index>(hermitians.size());
  const RealVector unit_identity = hermitian_coords(ComplexMatrix::Identity(n, n)) /
                                   std::sqrt(static_cast<double>(n));

  RealMatrix full(dims, m + 1);
  full.col(0) = unit_identity;
  for (Eigen::Index i = 0; i < m; ++i) full.col(i + 1) = hermitian_coords(hermitians[i].matrix());

  // Gram singular values are the squared singular values of the coordinate matrix.
  const RealVector sigma = Eigen::JacobiSVD<RealMatrix>(full).singularValues();
  const double cutoff = kGramRankThreshold * sigma(0) * sigma(0);
  Eigen::Index rank = 0;
  while (rank < sigma.size() && sigma(rank) * sigma(rank) > cutoff) ++rank;
  rank = std::max<Eigen::Index>(rank, 1);

  v.basis_.emplace_back(hermitian_from_coords(unit_identity, n));
  if (rank > 1) {
    RealMatrix traceless = full.rightCols(m);
    traceless -= unit_identity * (unit_identity.transpose() * traceless);
    Eigen::JacobiSVD<RealMatrix> svd(traceless, Eigen::ComputeThinU);
    for (Eigen::Index i = 0; i + 1 < rank; ++i) {
      v.basis_.emplace_back(hermitian_from_coords(svd.matrixU().col(i), n));
    }
  }
  return v;
}

int dimension(const OperatorSystem& v) { return v.dim(); }

OperatorSystem compress(const OperatorSystem& v, const Isometry& j) {
  if (j.n() != v.n()) {
    std::ostringstream os;
    os << "isometry has " << j.n() << " rows but the system lives in M_" << v.n();
    throw DimensionMismatch(os.str());
  }
  std::vector<HermitianMatrix> compressed;
  compressed.reserve(v.generators().size() - 1);
  for (std::size_t i = 1; i < v.generators().size(); ++i) {
    compressed.push_back(HermitianMatrix::symmetrized(j.compress(v.generators()[i].matrix())));
  }
  return make_graph(j.k(), compressed);
}

double projection_residual(const OperatorSystem& v, const ComplexMatrix& a) {
  if (a.rows() != v.n() || a.cols() != v.n()) throw DimensionMismatch("matrix size differs from system");
  ComplexMatrix rest = a;
  for (const auto& b : v.basis()) {
    const Complex c = (b.matrix().adjoint() * a).trace();
    rest -= c * b.matrix();
  }
  return rest.norm();
}

bool contains(const OperatorSystem& v, const ComplexMatrix& a, double tol) {
  return projection_residual(v, a) <= tol * std::max(1.0, a.norm());
}

OperatorSystem with_block_metadata(OperatorSystem v, std::vector<int> sizes) {
  v.block_sizes_ = std::move(sizes);
  return v;
}

OperatorSystem block_identity_graph(const std::vector<int>& block_sizes) {
  if (block_sizes.empty()) throw BadParameters("block_identity_graph needs at least one block");
  if (std::any_of(block_sizes.begin(), block_sizes.end(), [](int s) { return s < 1; })) {
    throw BadParameters("block sizes must be positive");
  }
  const Eigen::Index n = std::accumulate(block_sizes.begin(), block_sizes.end(), Eigen::Index{0});
  std::vector<HermitianMatrix> projections;
  Eigen::Index offset = 0;
  for (int size : block_sizes) {
    ComplexMatrix p = ComplexMatrix::Zero(n, n);
    p.block(offset, offset, size, size).setIdentity();
    projections.emplace_back(std::move(p));
    offset += size;
  }
  return with_block_metadata(make_graph(n, projections), block_sizes);
}

OperatorSystem detect_block_structure(OperatorSystem v) {
  const auto& gens = v.generators();
  if (gens.size() < 2) return v;
  const Eigen::Index n = v.n();
  std::vector<int> sizes;
  Eigen::Index offset = 0;
  for (std::size_t g = 1; g < gens.size(); ++g) {
    const ComplexMatrix& a = gens[g].matrix();
    Eigen::Index size = 0;
    while (offset + size < n && a(offset + size, offset + size) == Complex(1.0, 0.0)) ++size;
    if (size == 0) return v;
    ComplexMatrix expected = ComplexMatrix::Zero(n, n);
    expected.block(offset, offset, size, size).setIdentity();
    if (a != expected) return v;
    sizes.push_back(static_cast<int>(size));
    offset += size;
  }
  if (offset != n) return v;
  return with_block_metadata(std::move(v), std::move(sizes));
}

HermitianMatrix random_hermitian(Eigen::Index n, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix h(n, n);
  for (Eigen::Index i = 0; i < n; ++i) h(i, i) = normal(rng);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const double re = normal(rng) * M_SQRT1_2;
      const double im = normal(rng) * M_SQRT1_2;
      h(i, j) = Complex(re, im);
      h(j, i) = Complex(re, -im);
    }
  }
  return HermitianMatrix(std::move(h));
}

OperatorSystem random_graph(Eigen::Index n, int d, std::uint64_t seed) {
  if (n < 1) throw BadDimension("random_graph needs n >= 1");
  if (d < 1 || static_cast<Eigen::Index>(d) > n * n) {
    std::ostringstream os;
    os << "requested dimension " << d << " is outside [1, n^2 = " << n * n << "]";
    throw BadDimension(os.str());
  }
  Rng rng(seed);
  std::vector<HermitianMatrix> hs;
  hs.reserve(static_cast<std::size_t>(d - 1));
  for (int i = 1; i < d; ++i) hs.push_back(random_hermitian(n, rng));
  return make_graph(n, hs);
}

std::pair<HermitianMatrix, HermitianMatrix> hermitian_split(const ComplexMatrix& a) {
  if (a.rows() != a.cols()) throw DimensionMismatch("hermitian_split needs a square matrix");
  const Complex two_i(0.0, 2.0);
  return {HermitianMatrix::symmetrized(a), HermitianMatrix::symmetrized((a - a.adjoint()) / two_i)};
}

}  // namespace qramsey
