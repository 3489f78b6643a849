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

// Rank-k numerical ranges Λ_k(A) = {λ : PAP = λP, rank P = k} and the
// isometries J with J^† A J = λ I_k that realize their points.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "qramsey/linalg.hpp"

namespace qramsey {

struct SolverOptions {
  /// Residual target, relative to max(1, ||A||_2).
  double tol = 1e-8;
  int restarts = 32;
  int max_iters = 2000;
  double initial_step = 1e-1;
  double backtrack = 0.5;
  int num_angles = 720;
  /// Acceptance threshold on the 4th Gram singular value in 2-clique search.
  double clique_tol = 1e-8;
  /// Threads used for independent restarts; results do not depend on it.
  int workers = 1;
};

/** {z : Re(e^{-iθ} z) <= support}. */
struct HalfPlane {
  double theta = 0.0;
  double support = 0.0;
};

struct RealInterval {
  double lo = 0.0;
  double hi = 0.0;
  bool empty = false;

  double midpoint() const { return 0.5 * (lo + hi); }
  bool contains(double x, double slack = 0.0) const {
    return !empty && x >= lo - slack && x <= hi + slack;
  }
};

/** Convex outer approximation of Λ_k(A), vertices counterclockwise. */
struct RangePolygon {
  int k = 1;
  std::vector<Complex> vertices;
  std::vector<HalfPlane> half_planes;
  bool empty = false;
  /// max(1, ||A||_2) of the matrix the polygon was computed from.
  double scale = 1.0;

  /** Euclidean distance from z to the polygon (0 inside); +inf when empty. */
  double distance(Complex z) const;
  bool contains(Complex z, double inflate) const { return distance(z) <= inflate; }
  Complex vertex_centroid() const;
  double diameter() const;
};

/** λ_k(H_θ), the k-th largest eigenvalue of (e^{-iθ}A + e^{iθ}A^†)/2. */
double support(const ComplexMatrix& a, int k, double theta);

/** Intersection of the half-planes at θ_j = 2πj/num_angles. */
RangePolygon outer_polygon(const ComplexMatrix& a, int k, int num_angles = 720);

/** [λ_{n-k+1}, λ_k] (eigenvalues descending); empty when the ends cross. */
RealInterval hermitian_interval(const HermitianMatrix& h, int k);

/**
 * An isometry with J^† H J = λ I_k, built by mixing the eigenvector pairs
 * (v_i, v_{n+1-i}) to the common Rayleigh quotient λ. Needs n >= 2k-1.
 */
Isometry hermitian_scalar_isometry(const HermitianMatrix& h, int k, double lambda);

struct ScalarCompression {
  Complex lambda;
  Isometry isometry;
  /// ||J^† A J - λ I_k||_F, recomputed by direct multiplication.
  double residual;
};

/**
 * Finds (λ, J) with ||J^† A J - λ I_k||_F <= tol * max(1, ||A||_2).
 * Hermitian input is answered exactly by hermitian_scalar_isometry at the
 * interval midpoint; otherwise a Gauss-Newton descent over isometries with
 * random restarts. Success is guaranteed to be possible when n >= 3k-2.
 * Throws SolverFailed (carrying the best relative residual) or BadRank.
 */
ScalarCompression scalar_isometry(const ComplexMatrix& a, int k, std::uint64_t seed,
                                  const SolverOptions& opts = {});

/** ||J^† A J - μ I_k||_F with μ = trace(J^† A J)/k. */
double scalar_residual(const ComplexMatrix& a, const ComplexMatrix& j);

/**
 * Two CSV sections separated by a blank line: "theta,support" rows for
 * every sampled angle, then "vertex_re,vertex_im" rows for the polygon.
 */
void write_polygon_csv(std::ostream& out, const RangePolygon& polygon);

}  // namespace qramsey
