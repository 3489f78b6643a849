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

#include <complex>
#include <cstdint>
#include <random>

#include <Eigen/Dense>

namespace qramsey {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;
using Rng = std::mt19937_64;

inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kIsometryTol = 1e-10;

/** Largest |entry| of `a`, or 0 for an empty matrix. */
double max_abs(const ComplexMatrix& a);

/** Spectral norm (largest singular value). */
double spectral_norm(const ComplexMatrix& a);

/** True when max|a - a^†| <= tol * max(1, max|a|). */
bool is_hermitian(const ComplexMatrix& a, double tol = kHermitianTol);

/**
 * A square complex matrix that passed the Hermitian check. Entries are kept
 * exactly as supplied; the check tolerates relative asymmetry up to 1e-12.
 */
class HermitianMatrix {
 public:
  /** Throws NonHermitianInput when the check fails or entries are not finite. */
  explicit HermitianMatrix(ComplexMatrix m);

  /** (m + m^†)/2, for matrices that are Hermitian up to roundoff. */
  static HermitianMatrix symmetrized(const ComplexMatrix& m);

  Eigen::Index n() const { return m_.rows(); }
  const ComplexMatrix& matrix() const { return m_; }
  operator const ComplexMatrix&() const { return m_; }

  bool operator==(const HermitianMatrix& o) const { return m_ == o.m_; }

 private:
  ComplexMatrix m_;
};

/** An n x k matrix J with ||J^† J - I_k||_F <= 1e-10. */
class Isometry {
 public:
  /** Throws NotAnIsometry when the column frame is not orthonormal. */
  explicit Isometry(ComplexMatrix j);

  /** The first k columns of I_n. */
  static Isometry coordinate(Eigen::Index n, Eigen::Index k);

  Eigen::Index n() const { return j_.rows(); }
  Eigen::Index k() const { return j_.cols(); }
  const ComplexMatrix& matrix() const { return j_; }

  /** J^† A J. */
  ComplexMatrix compress(const ComplexMatrix& a) const;

  /** The composed isometry this * inner (n x inner.k()). */
  Isometry then(const Isometry& inner) const;

  /** The leading `cols` columns. */
  Isometry leading(Eigen::Index cols) const;

 private:
  ComplexMatrix j_;
};

/** ||J^† J - I||_F. */
double orthonormality_defect(const ComplexMatrix& j);

/** Nearest matrix with orthonormal columns (polar factor U V^† of the thin SVD). */
ComplexMatrix polar_factor(const ComplexMatrix& m);

/** n x k matrix of i.i.d. standard complex Gaussian entries. */
ComplexMatrix gaussian_matrix(Eigen::Index rows, Eigen::Index cols, Rng& rng);

/** A Haar-like random isometry: polar factor of a Gaussian frame. */
Isometry random_isometry(Eigen::Index n, Eigen::Index k, Rng& rng);

/** Derives an independent stream seed from (seed, index) via splitmix64. */
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/**
 * Real coordinates of a Hermitian matrix in an orthonormal basis of the real
 * vector space of n x n Hermitian matrices, so that dot products equal the
 * trace inner product trace(X^† Y). Layout: diagonal, then sqrt(2) Re and
 * sqrt(2) Im of the strict upper triangle in row-major order.
 */
RealVector hermitian_coords(const ComplexMatrix& h);

/** Inverse of hermitian_coords. */
ComplexMatrix hermitian_from_coords(const RealVector& c, Eigen::Index n);

}  // namespace qramsey
