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

#include "qramsey/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qramsey/errors.hpp"

namespace qramsey {

double max_abs(const ComplexMatrix& a) {
  return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}

double spectral_norm(const ComplexMatrix& a) {
  if (a.size() == 0) return 0.0;
  Eigen::JacobiSVD<ComplexMatrix> svd(a);
  return svd.singularValues()(0);
}

bool is_hermitian(const ComplexMatrix& a, double tol) {
  if (a.rows() != a.cols()) return false;
  const double scale = std::max(1.0, max_abs(a));
  return max_abs(a - a.adjoint()) <= tol * scale;
}

HermitianMatrix::HermitianMatrix(ComplexMatrix m) : m_(std::move(m)) {
  if (m_.rows() == 0 || m_.rows() != m_.cols()) {
    std::ostringstream os;
    os << "expected a non-empty square matrix, got " << m_.rows() << "x" << m_.cols();
    throw DimensionMismatch(os.str());
  }
  if (!m_.allFinite()) throw NonHermitianInput("matrix has non-finite entries");
  if (!is_hermitian(m_)) {
    std::ostringstream os;
    os << "matrix is not Hermitian (max asymmetry " << max_abs(m_ - m_.adjoint())
       << "); split it into (A+A^†)/2 and (A-A^†)/(2i) first";
    throw NonHermitianInput(os.str());
  }
}

HermitianMatrix HermitianMatrix::symmetrized(const ComplexMatrix& m) {
  return HermitianMatrix(ComplexMatrix((m + m.adjoint()) * 0.5));
}

double orthonormality_defect(const ComplexMatrix& j) {
  return (j.adjoint() * j - ComplexMatrix::Identity(j.cols(), j.cols())).norm();
}

Isometry::Isometry(ComplexMatrix j) : j_(std::move(j)) {
  if (j_.cols() == 0 || j_.cols() > j_.rows()) {
    std::ostringstream os;
    os << "isometry shape " << j_.rows() << "x" << j_.cols() << " needs 1 <= k <= n";
    throw BadRank(os.str());
  }
  if (!j_.allFinite()) throw NotAnIsometry("isometry has non-finite entries");
  const double defect = orthonormality_defect(j_);
  if (defect > kIsometryTol) {
    std::ostringstream os;
    os << "columns are not orthonormal: ||J^†J - I||_F = " << defect;
    throw NotAnIsometry(os.str());
  }
}

Isometry Isometry::coordinate(Eigen::Index n, Eigen::Index k) {
  return Isometry(ComplexMatrix::Identity(n, k));
}

ComplexMatrix Isometry::compress(const ComplexMatrix& a) const {
  if (a.rows() != n() || a.cols() != n()) {
    std::ostringstream os;
    os << "cannot compress a " << a.rows() << "x" << a.cols() << " matrix by a " << n()
       << "x" << k() << " isometry";
    throw DimensionMismatch(os.str());
  }
  return j_.adjoint() * a * j_;
}

Isometry Isometry::then(const Isometry& inner) const {
  if (inner.n() != k()) throw DimensionMismatch("isometry composition shape mismatch");
  return Isometry(j_ * inner.j_);
}

Isometry Isometry::leading(Eigen::Index cols) const {
  if (cols < 1 || cols > k()) throw BadRank("column count out of range");
  return Isometry(j_.leftCols(cols));
}

ComplexMatrix polar_factor(const ComplexMatrix& m) {
  Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  return svd.matrixU() * svd.matrixV().adjoint();
}

ComplexMatrix gaussian_matrix(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, M_SQRT1_2);
  ComplexMatrix g(rows, cols);
  // Column-major fill keeps the draw order independent of Eigen internals.
  for (Eigen::Index c = 0; c < cols; ++c) {
    for (Eigen::Index r = 0; r < rows; ++r) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(r, c) = Complex(re, im);
    }
  }
  return g;
}

Isometry random_isometry(Eigen::Index n, Eigen::Index k, Rng& rng) {
  return Isometry(polar_factor(gaussian_matrix(n, k, rng)));
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

RealVector hermitian_coords(const ComplexMatrix& h) {
  const Eigen::Index n = h.rows();
  RealVector c(n * n);
  Eigen::Index p = 0;
  for (Eigen::Index i = 0; i < n; ++i) c(p++) = h(i, i).real();
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      // Average the two triangles so tiny asymmetries do not bias the coordinates.
      const Complex z = 0.5 * (h(i, j) + std::conj(h(j, i)));
      c(p++) = M_SQRT2 * z.real();
      c(p++) = M_SQRT2 * z.imag();
    }
  }
  return c;
}

ComplexMatrix hermitian_from_coords(const RealVector& c, Eigen::Index n) {
  ComplexMatrix h(n, n);
  Eigen::Index p = 0;
  for (Eigen::Index i = 0; i < n; ++i) h(i, i) = c(p++);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const double re = c(p++) * M_SQRT1_2;
      const double im = c(p++) * M_SQRT1_2;
      h(i, j) = Complex(re, im);
      h(j, i) = Complex(re, -im);
    }
  }
  return h;
}

}  // namespace qramsey
