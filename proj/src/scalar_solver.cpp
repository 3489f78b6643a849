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

// Descent for min ||J^† A J - μ(J) I_k||_F^2 over the isometries J ∈ C^{n×k},
// μ(J) = trace(J^† A J)/k. Directions are Levenberg-Marquardt damped
// Gauss-Newton steps in the tangent space (falling back to the Riemannian
// gradient), followed by a backtracking search along the polar retraction.

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "qramsey/errors.hpp"
#include "qramsey/numrange.hpp"
#include "qramsey/parallel.hpp"

namespace qramsey {

namespace {

// Traceless part of J^† A J.
ComplexMatrix traceless_compression(const ComplexMatrix& a, const ComplexMatrix& j) {
  ComplexMatrix c = j.adjoint() * a * j;
  const Complex mu = c.trace() / static_cast<double>(c.rows());
  c.diagonal().array() -= mu;
  return c;
}

RealVector pack(const ComplexMatrix& c) {
  const Eigen::Index m = c.size();
  RealVector r(2 * m);
  for (Eigen::Index i = 0; i < m; ++i) {
    r(i) = c.data()[i].real();
    r(m + i) = c.data()[i].imag();
  }
  return r;
}

// Parameter 2*(b*n + a) + part is the real (part 0) or imaginary (part 1)
// ambient coordinate of J(a, b).
ComplexMatrix unpack_direction(const RealVector& p, Eigen::Index n, Eigen::Index k) {
  ComplexMatrix d(n, k);
  for (Eigen::Index b = 0; b < k; ++b)
    for (Eigen::Index a = 0; a < n; ++a) {
      const Eigen::Index q = 2 * (b * n + a);
      d(a, b) = Complex(p(q), p(q + 1));
    }
  return d;
}

// Jacobian of the packed traceless residual composed with the tangent
// projection X -> X - J sym(J^† X), with respect to the ambient coordinates.
RealMatrix residual_jacobian(const ComplexMatrix& a, const ComplexMatrix& j) {
  const Eigen::Index n = j.rows();
  const Eigen::Index k = j.cols();
  const ComplexMatrix aj = a * j;
  const ComplexMatrix ja = j.adjoint() * a;
  const ComplexMatrix b = ja * j;

  RealMatrix jac(2 * k * k, 2 * n * k);
  ComplexMatrix dc(k, k);
  for (Eigen::Index row = 0; row < n; ++row) {
    const ComplexVector u = j.row(row).adjoint();
    const ComplexVector bu = b * u;
    const Eigen::RowVectorXcd ub = u.adjoint() * b;
    for (Eigen::Index col = 0; col < k; ++col) {
      for (int part = 0; part < 2; ++part) {
        const Complex s = part == 0 ? Complex(1.0, 0.0) : Complex(0.0, 1.0);
        const Complex sc = std::conj(s);
        // E = s e_row e_col^T; dC = E^† A J + J^† A E - (S B + B S), S = sym(J^† E).
        dc.setZero();
        dc.row(col) += sc * aj.row(row);
        dc.col(col) += s * ja.col(row);
        dc -= 0.5 * (s * u * b.row(col) + sc * b.col(col) * u.adjoint());
        dc.row(col) -= 0.5 * sc * ub;
        dc.col(col) -= 0.5 * s * bu;
        const Complex mu = dc.trace() / static_cast<double>(k);
        dc.diagonal().array() -= mu;
        jac.col(2 * (col * n + row) + part) = pack(dc);
      }
    }
  }
  return jac;
}

struct Attempt {
  ComplexMatrix j;
  double residual = std::numeric_limits<double>::infinity();
};

// One restart on the normalized matrix (||a||_2 <= 1).
Attempt descend(const ComplexMatrix& a, ComplexMatrix j, const SolverOptions& opts) {
  const double polish = 1e-3 * opts.tol;
  ComplexMatrix c = traceless_compression(a, j);
  double f = c.squaredNorm();
  double damping_factor = 1.0;
  double grad_step = opts.initial_step;
  double checkpoint = f;

  for (int it = 0; it < opts.max_iters && std::sqrt(f) > polish; ++it) {
    const RealVector r = pack(c);
    const RealMatrix jac = residual_jacobian(a, j);
    bool moved = false;

    // Damped Gauss-Newton: δ = -Jac^T (Jac Jac^T + ν||r|| I)^{-1} r.
    const double damping = std::max(damping_factor * std::sqrt(f), 1e-14);
    RealMatrix normal = jac * jac.transpose();
    normal.diagonal().array() += damping;
    const RealVector y = normal.ldlt().solve(-r);
    const RealVector step = jac.transpose() * y;
    const double slope = 2.0 * r.dot(jac * step);
    if (slope < 0.0 && step.allFinite()) {
      const ComplexMatrix dir = unpack_direction(step, j.rows(), j.cols());
      double t = 1.0;
      for (int ls = 0; ls < 30; ++ls, t *= opts.backtrack) {
        ComplexMatrix trial = polar_factor(j + t * dir);
        ComplexMatrix ct = traceless_compression(a, trial);
        const double ft = ct.squaredNorm();
        if (ft <= f + 1e-4 * t * slope) {
          j = std::move(trial);
          c = std::move(ct);
          f = ft;
          moved = true;
          break;
        }
      }
      damping_factor = (moved && t == 1.0) ? std::max(damping_factor / 3.0, 1e-6)
                                           : std::min(damping_factor * 4.0, 1e6);
    }

    if (!moved) {
      // Riemannian gradient of f: Jac^T applied to 2r.
      const RealVector grad = 2.0 * (jac.transpose() * r);
      const double g2 = grad.squaredNorm();
      if (g2 == 0.0) break;
      const ComplexMatrix dir = -unpack_direction(grad, j.rows(), j.cols());
      double t = grad_step;
      for (int ls = 0; ls < 40; ++ls, t *= opts.backtrack) {
        ComplexMatrix trial = polar_factor(j + t * dir);
        ComplexMatrix ct = traceless_compression(a, trial);
        const double ft = ct.squaredNorm();
        if (ft <= f - 1e-4 * t * g2) {
          j = std::move(trial);
          c = std::move(ct);
          f = ft;
          moved = true;
          grad_step = std::min(2.0 * t, 1e3);
          break;
        }
      }
    }
    if (!moved) break;

    // Give up on restarts that sit in a positive local minimum.
    if (it % 50 == 49) {
      if (f > 0.99 * checkpoint && std::sqrt(f) > opts.tol) break;
      checkpoint = f;
    }
  }
  return {std::move(j), std::sqrt(f)};
}

ComplexMatrix warm_start(const ComplexMatrix& a, Complex lambda0, Eigen::Index k) {
  const Eigen::Index n = a.rows();
  ComplexMatrix shifted = a - lambda0 * ComplexMatrix::Identity(n, n);
  Eigen::JacobiSVD<ComplexMatrix> svd(shifted, Eigen::ComputeFullV);
  // The least singular directions make (A - λ0) J, hence J^†(A - λ0)J, small.
  return svd.matrixV().rightCols(k);
}

}  // namespace

ScalarCompression scalar_isometry(const ComplexMatrix& a, int k, std::uint64_t seed,
                                  const SolverOptions& opts) {
  if (a.rows() == 0 || a.rows() != a.cols()) throw DimensionMismatch("expected a non-empty square matrix");
  const Eigen::Index n = a.rows();
  if (k < 1 || k > n) {
    std::ostringstream os;
    os << "rank " << k << " is outside [1, " << n << "]";
    throw BadRank(os.str());
  }
  const double scale = std::max(1.0, spectral_norm(a));
  const double accept = opts.tol * scale;

  auto finish = [&](const ComplexMatrix& j) {
    Isometry iso(j);
    const Complex lambda = iso.compress(a).trace() / static_cast<double>(k);
    return ScalarCompression{lambda, iso, scalar_residual(a, iso.matrix())};
  };

  if (k == n) {
    // Only scalar matrices compress to scalars on the whole space.
    const double r = scalar_residual(a, ComplexMatrix::Identity(n, n));
    if (r <= accept) return finish(ComplexMatrix::Identity(n, n));
    throw SolverFailed("rank-n compression exists only for scalar matrices", r / scale);
  }

  if (is_hermitian(a)) {
    const HermitianMatrix h = HermitianMatrix::symmetrized(a);
    const RealInterval interval = hermitian_interval(h, k);
    if (interval.empty) {
      throw SolverFailed("Hermitian rank-k numerical range is empty",
                         0.5 * (interval.lo - interval.hi) / scale);
    }
    if (n >= 2 * k - 1) {
      ScalarCompression out = finish(hermitian_scalar_isometry(h, k, interval.midpoint()).matrix());
      if (out.residual <= accept) return out;
      throw SolverFailed("pair mixing failed verification", out.residual / scale);
    }
    // Nonempty with n < 2k-1 needs a repeated middle eigenvalue; fall through.
  }

  const ComplexMatrix normalized = a / scale;
  const RangePolygon polygon = outer_polygon(normalized, k, opts.num_angles);
  const Complex lambda0 =
      polygon.empty ? normalized.trace() / static_cast<double>(n) : polygon.vertex_centroid();

  auto run = [&](int restart) {
    ComplexMatrix start;
    if (restart == 0) {
      start = warm_start(normalized, lambda0, k);
    } else {
      Rng rng(derive_seed(seed, static_cast<std::uint64_t>(restart)));
      start = random_isometry(n, k, rng).matrix();
    }
    return descend(normalized, std::move(start), opts);
  };
  const auto attempts = detail::run_until_accepted(
      opts.restarts, opts.workers, run, [&](const Attempt& at) { return at.residual <= opts.tol; });

  double best = std::numeric_limits<double>::infinity();
  for (const Attempt& at : attempts) {
    if (at.residual <= opts.tol) {
      ScalarCompression out = finish(at.j);
      if (out.residual <= accept) return out;
      best = std::min(best, out.residual / scale);
    } else {
      best = std::min(best, at.residual);
    }
  }
  std::ostringstream os;
  os << "no restart reached tolerance " << opts.tol << " (best relative residual " << best << ")";
  throw SolverFailed(os.str(), best);
}

}  // namespace qramsey
