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

#include "qramsey/numrange.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>

#include "qramsey/errors.hpp"

namespace qramsey {

namespace {

void check_rank(const ComplexMatrix& a, int k) {
  if (a.rows() == 0 || a.rows() != a.cols()) throw DimensionMismatch("expected a non-empty square matrix");
  if (k < 1 || k > a.rows()) {
    std::ostringstream os;
    os << "rank " << k << " is outside [1, " << a.rows() << "]";
    throw BadRank(os.str());
  }
}

double cross(Complex a, Complex b) { return a.real() * b.imag() - a.imag() * b.real(); }

double segment_distance(Complex z, Complex p, Complex q) {
  const Complex d = q - p;
  const double len2 = std::norm(d);
  if (len2 == 0.0) return std::abs(z - p);
  const double t = std::clamp(((z - p) * std::conj(d)).real() / len2, 0.0, 1.0);
  return std::abs(z - (p + t * d));
}

// Sutherland-Hodgman step against {z : Re(conj(u) z) <= s}.
std::vector<Complex> clip(const std::vector<Complex>& poly, Complex u, double s) {
  std::vector<Complex> out;
  const std::size_t m = poly.size();
  out.reserve(m + 1);
  for (std::size_t i = 0; i < m; ++i) {
    const Complex p = poly[i];
    const Complex q = poly[(i + 1) % m];
    const double vp = (std::conj(u) * p).real() - s;
    const double vq = (std::conj(u) * q).real() - s;
    if (vp <= 0.0) out.push_back(p);
    if ((vp <= 0.0) != (vq <= 0.0)) out.push_back(p + (vp / (vp - vq)) * (q - p));
  }
  return out;
}

std::vector<Complex> dedup(const std::vector<Complex>& poly, double tol) {
  std::vector<Complex> out;
  for (const Complex& z : poly) {
    if (out.empty() || std::abs(z - out.back()) > tol) out.push_back(z);
  }
  while (out.size() > 1 && std::abs(out.front() - out.back()) <= tol) out.pop_back();
  return out;
}

// Eigen-decomposition with eigenvector order sorted by descending eigenvalue;
// ties keep the decomposition's order.
struct DescendingEigen {
  RealVector values;
  ComplexMatrix vectors;
};

DescendingEigen descending_eigen(const ComplexMatrix& h) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h);
  const Eigen::Index n = h.rows();
  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
    return es.eigenvalues()(a) > es.eigenvalues()(b);
  });
  DescendingEigen out{RealVector(n), ComplexMatrix(n, n)};
  for (Eigen::Index i = 0; i < n; ++i) {
    out.values(i) = es.eigenvalues()(order[static_cast<std::size_t>(i)]);
    out.vectors.col(i) = es.eigenvectors().col(order[static_cast<std::size_t>(i)]);
  }
  return out;
}

}  // namespace

double RangePolygon::distance(Complex z) const {
  if (empty || vertices.empty()) return std::numeric_limits<double>::infinity();
  const std::size_t m = vertices.size();
  if (m == 1) return std::abs(z - vertices[0]);
  bool inside = m >= 3;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < m; ++i) {
    const Complex p = vertices[i];
    const Complex q = vertices[(i + 1) % m];
    if (cross(q - p, z - p) < 0.0) inside = false;
    best = std::min(best, segment_distance(z, p, q));
  }
  return inside ? 0.0 : best;
}

Complex RangePolygon::vertex_centroid() const {
  if (vertices.empty()) return {};
  Complex sum = std::accumulate(vertices.begin(), vertices.end(), Complex{});
  return sum / static_cast<double>(vertices.size());
}

double RangePolygon::diameter() const {
  double d = 0.0;
  for (const auto& p : vertices)
    for (const auto& q : vertices) d = std::max(d, std::abs(p - q));
  return d;
}

double support(const ComplexMatrix& a, int k, double theta) {
  check_rank(a, k);
  const Complex phase = std::polar(1.0, -theta);
  const ComplexMatrix h = 0.5 * (phase * a + std::conj(phase) * a.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(a.rows() - k);
}

RangePolygon outer_polygon(const ComplexMatrix& a, int k, int num_angles) {
  check_rank(a, k);
  if (num_angles < 3) throw BadParameters("outer_polygon needs at least 3 angles");

  RangePolygon poly;
  poly.k = k;
  poly.scale = std::max(1.0, spectral_norm(a));
  // Λ_k(A) lies in the numerical range, hence in the disk of radius ||A||_2.
  const double r = 2.0 * poly.scale;
  std::vector<Complex> v = {{-r, -r}, {r, -r}, {r, r}, {-r, r}};
  const double slack = 1e-12 * poly.scale;

  poly.half_planes.reserve(static_cast<std::size_t>(num_angles));
  for (int j = 0; j < num_angles; ++j) {
    const double theta = 2.0 * M_PI * j / num_angles;
    const double s = support(a, k, theta);
    poly.half_planes.push_back({theta, s});
    if (!v.empty()) v = clip(v, std::polar(1.0, theta), s + slack);
  }
  poly.vertices = dedup(v, 1e-9 * poly.scale);
  poly.empty = poly.vertices.empty();
  return poly;
}

RealInterval hermitian_interval(const HermitianMatrix& h, int k) {
  check_rank(h.matrix(), k);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h.matrix(), Eigen::EigenvaluesOnly);
  const RealVector& asc = es.eigenvalues();
  const Eigen::Index n = h.n();
  RealInterval out{asc(k - 1), asc(n - k), false};
  if (out.lo > out.hi) {
    // Coincident eigenvalues may cross by roundoff; treat that as a point.
    const double scale = std::max(1.0, std::max(std::abs(asc(0)), std::abs(asc(n - 1))));
    if (out.lo - out.hi <= 1e-12 * scale) {
      out.lo = out.hi = 0.5 * (out.lo + out.hi);
    } else {
      out.empty = true;
    }
  }
  return out;
}

Isometry hermitian_scalar_isometry(const HermitianMatrix& h, int k, double lambda) {
  check_rank(h.matrix(), k);
  const Eigen::Index n = h.n();
  if (n < 2 * k - 1) {
    std::ostringstream os;
    os << "pair mixing needs n >= 2k-1, got n = " << n << ", k = " << k;
    throw BadRank(os.str());
  }
  const DescendingEigen eig = descending_eigen(h.matrix());
  const double scale = std::max(1.0, std::max(std::abs(eig.values(0)), std::abs(eig.values(n - 1))));
  const double slack = 1e-12 * scale;
  const double top = eig.values(k - 1);
  const double bottom = eig.values(n - k);
  if (lambda > top + slack || lambda < bottom - slack) {
    std::ostringstream os;
    os << std::setprecision(17) << "lambda = " << lambda << " is outside [" << bottom << ", " << top
       << "]";
    throw LambdaOutOfRange(os.str());
  }

  ComplexMatrix j(n, k);
  const Eigen::Index pairs = std::min<Eigen::Index>(k, n - k);
  for (Eigen::Index i = 0; i < pairs; ++i) {
    const double hi = eig.values(i);
    const double lo = eig.values(n - 1 - i);
    double c2 = 1.0;
    if (hi - lo > slack) c2 = std::clamp((lambda - lo) / (hi - lo), 0.0, 1.0);
    j.col(i) = std::sqrt(c2) * eig.vectors.col(i) + std::sqrt(1.0 - c2) * eig.vectors.col(n - 1 - i);
  }
  // n = 2k-1 leaves the middle eigenvector unpaired; its eigenvalue is λ.
  for (Eigen::Index i = pairs; i < k; ++i) j.col(i) = eig.vectors.col(i);
  return Isometry(std::move(j));
}

double scalar_residual(const ComplexMatrix& a, const ComplexMatrix& j) {
  ComplexMatrix b = j.adjoint() * a * j;
  const Complex mu = b.trace() / static_cast<double>(b.rows());
  b.diagonal().array() -= mu;
  return b.norm();
}

void write_polygon_csv(std::ostream& out, const RangePolygon& polygon) {
  const auto flags = out.flags();
  const auto precision = out.precision();
  out << std::setprecision(17);
  out << "theta,support\n";
  for (const auto& hp : polygon.half_planes) out << hp.theta << ',' << hp.support << '\n';
  out << "\nvertex_re,vertex_im\n";
  for (const auto& z : polygon.vertices) out << z.real() << ',' << z.imag() << '\n';
  out.flags(flags);
  out.precision(precision);
}

}  // namespace qramsey
