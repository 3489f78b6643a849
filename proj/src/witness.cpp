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

#include "qramsey/witness.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>

#include "qramsey/errors.hpp"
#include "qramsey/parallel.hpp"

namespace qramsey {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw BadParameters("anticlique bound overflows 64 bits");
  return out;
}

ComplexMatrix scalar_target(const OperatorSystem& v) {
  // A = B_1 + i B_2 from the traceless basis elements that exist.
  ComplexMatrix a = ComplexMatrix::Zero(v.n(), v.n());
  if (v.dim() >= 2) a += v.basis()[1].matrix();
  if (v.dim() >= 3) a += Complex(0.0, 1.0) * v.basis()[2].matrix();
  return a;
}

void check_anticlique_rank(const OperatorSystem& v, int k) {
  if (k < 1 || k > v.n()) {
    std::ostringstream os;
    os << "anticlique rank " << k << " is outside [1, " << v.n() << "]";
    throw BadRank(os.str());
  }
}

}  // namespace

std::uint64_t anticlique_min_n(int d, int k) {
  if (d < 1 || k < 1) throw BadParameters("anticlique_min_n needs d >= 1 and k >= 1");
  const bool odd = d % 2 == 1;
  const int ell = odd ? (d - 1) / 2 : (d - 2) / 2;
  std::uint64_t p = 1;
  for (int i = 0; i < ell; ++i) p = checked_mul(p, 3);
  if (!odd) p = checked_mul(p, 2);
  return checked_mul(p, static_cast<std::uint64_t>(k - 1)) + 1;
}

AnticliqueCertificate verify_anticlique(const OperatorSystem& v, const Isometry& j, double tol) {
  if (j.n() != v.n()) throw DimensionMismatch("isometry rows differ from system size");
  const Eigen::Index k = j.k();
  AnticliqueCertificate cert{j, {}, 0.0};
  cert.scalars.reserve(v.generators().size());
  const ComplexMatrix& jm = j.matrix();
  for (const auto& g : v.generators()) {
    ComplexMatrix c = jm.adjoint() * g.matrix() * jm;
    const double s = c.trace().real() / static_cast<double>(k);
    cert.scalars.push_back(s);
    c.diagonal().array() -= s;
    cert.residual = std::max(cert.residual, c.norm());
  }
  const double bound = tol * std::max(1.0, v.max_generator_norm());
  if (!(cert.residual <= bound)) {
    std::ostringstream os;
    os << "not an anticlique: residual " << cert.residual << " exceeds " << bound;
    throw NotAnticlique(os.str(), cert.residual);
  }
  return cert;
}

double compressed_gram_sigma4(const OperatorSystem& v, const Isometry& j) {
  if (j.n() != v.n()) throw DimensionMismatch("isometry rows differ from system size");
  if (v.dim() < 4 || j.k() < 2) return 0.0;
  const Eigen::Index kk = j.k() * j.k();
  RealMatrix coords(kk, v.dim());
  for (int i = 0; i < v.dim(); ++i) coords.col(i) = hermitian_coords(j.compress(v.basis()[i].matrix()));
  const RealMatrix gram = coords.transpose() * coords;
  return Eigen::JacobiSVD<RealMatrix>(gram).singularValues()(3);
}

CliqueCertificate verify_clique(const OperatorSystem& v, const Isometry& j, double tol) {
  if (j.n() != v.n()) throw DimensionMismatch("isometry rows differ from system size");
  if (j.k() != 2) throw BadRank("a 2-clique needs a rank-2 isometry");
  const OperatorSystem compressed = compress(v, j);
  // Gram matrix of the compressed basis by complex trace products.
  const int d = v.dim();
  RealMatrix gram(d, d);
  std::vector<ComplexMatrix> images;
  for (const auto& b : v.basis()) images.push_back(j.matrix().adjoint() * b.matrix() * j.matrix());
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) gram(a, b) = (images[a].adjoint() * images[b]).trace().real();
  const RealVector sigma = Eigen::JacobiSVD<RealMatrix>(gram).singularValues();
  const double s4 = d >= 4 ? sigma(3) : 0.0;
  if (dimension(compressed) != 4 || !(s4 > tol)) {
    std::ostringstream os;
    os << "not a 2-clique: compressed dimension " << dimension(compressed) << ", sigma_4 = " << s4;
    throw SearchFailed(os.str(), s4);
  }
  return {j, s4};
}

AnticliqueCertificate anticlique_dim3(const OperatorSystem& v, int k, std::uint64_t seed,
                                      const SolverOptions& opts) {
  if (v.dim() > 3) {
    std::ostringstream os;
    os << "anticlique_dim3 needs dim <= 3, got " << v.dim();
    throw DimTooLarge(os.str());
  }
  check_anticlique_rank(v, k);
  if (v.n() < 3 * static_cast<Eigen::Index>(k) - 2) {
    std::ostringstream os;
    os << "n = " << v.n() << " is below 3k-2 = " << 3 * k - 2;
    throw PreconditionViolated(os.str());
  }
  const ScalarCompression sc = scalar_isometry(scalar_target(v), k, seed, opts);
  return verify_anticlique(v, sc.isometry, opts.tol);
}

AnticliqueCertificate anticlique_recursive(const OperatorSystem& v, int k, std::uint64_t seed,
                                           const SolverOptions& opts) {
  check_anticlique_rank(v, k);
  const std::uint64_t needed = anticlique_min_n(v.dim(), k);
  if (static_cast<std::uint64_t>(v.n()) < needed) {
    std::ostringstream os;
    os << "dim " << v.dim() << " needs n >= " << needed << " for a rank-" << k
       << " anticlique, got n = " << v.n();
    throw PreconditionViolated(os.str());
  }

  OperatorSystem level = v;
  std::optional<Isometry> total;
  auto compose = [&](const Isometry& j) { total = total ? total->then(j) : j; };

  for (std::uint64_t depth = 0;; ++depth) {
    const int d = level.dim();
    if (static_cast<std::uint64_t>(level.n()) < anticlique_min_n(d, k)) {
      throw SolverFailed("compression did not reduce the dimension as expected", 0.0);
    }
    if (d <= 1) {
      compose(Isometry::coordinate(level.n(), k));
      break;
    }
    if (d == 2) {
      const HermitianMatrix& h = level.basis()[1];
      compose(hermitian_scalar_isometry(h, k, hermitian_interval(h, k).midpoint()));
      break;
    }
    const auto rank = static_cast<int>(anticlique_min_n(d - 2, k));
    const ComplexMatrix a =
        level.basis()[d - 2].matrix() + Complex(0.0, 1.0) * level.basis()[d - 1].matrix();
    const std::uint64_t level_seed = depth == 0 ? seed : derive_seed(seed, depth);
    const Isometry j = scalar_isometry(a, rank, level_seed, opts).isometry;
    compose(j);
    if (d == 3) break;
    level = compress(level, j);
  }
  return verify_anticlique(v, *total, opts.tol);
}

CliqueCertificate find_2clique(const OperatorSystem& v, std::uint64_t seed, const SolverOptions& opts) {
  if (v.dim() < 4) {
    std::ostringstream os;
    os << "dim " << v.dim() << " < 4: every rank-2 compression has dimension <= 3";
    throw DimTooSmall(os.str());
  }
  struct Trial {
    ComplexMatrix j;
    double sigma4;
  };
  auto draw = [&](int i) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
    Isometry j = random_isometry(v.n(), 2, rng);
    const double s4 = compressed_gram_sigma4(v, j);
    return Trial{j.matrix(), s4};
  };
  const int trials = std::max(opts.restarts, 1);
  const auto results = detail::run_until_accepted(
      trials, opts.workers, draw, [&](const Trial& t) { return t.sigma4 > opts.clique_tol; });
  for (const Trial& t : results) {
    if (t.sigma4 > opts.clique_tol) return verify_clique(v, Isometry(t.j), opts.clique_tol);
  }

  // Hill-climb σ4 from the best trial with shrinking random perturbations.
  auto best = std::max_element(results.begin(), results.end(),
                               [](const Trial& a, const Trial& b) { return a.sigma4 < b.sigma4; });
  ComplexMatrix j = best->j;
  double s4 = best->sigma4;
  Rng rng(derive_seed(seed, static_cast<std::uint64_t>(trials)));
  double step = 0.5;
  for (int it = 0; it < opts.max_iters && !(s4 > opts.clique_tol); ++it) {
    const Isometry trial(polar_factor(j + step * gaussian_matrix(v.n(), 2, rng)));
    const double ts = compressed_gram_sigma4(v, trial);
    if (ts > s4) {
      j = trial.matrix();
      s4 = ts;
      step = std::min(1.5 * step, 2.0);
    } else {
      step = std::max(0.8 * step, 1e-3);
    }
  }
  if (!(s4 > opts.clique_tol)) {
    std::ostringstream os;
    os << "no 2-clique found (best sigma_4 = " << s4 << ")";
    throw SearchFailed(os.str(), s4);
  }
  return verify_clique(v, Isometry(j), opts.clique_tol);
}

NoAnticliqueProof certify_no_anticlique(const OperatorSystem& v, int k) {
  if (!v.block_sizes()) throw NotApplicable("not a block-identity graph");
  const auto& gens = v.generators();
  const std::vector<int>& sizes = *v.block_sizes();
  if (gens.size() != sizes.size() + 1) throw NotApplicable("block metadata does not match generators");

  // Every check below is exact: the entries are required to be 0 or 1.
  const Eigen::Index n = v.n();
  std::vector<long> diagonal_sum(static_cast<std::size_t>(n), 0);
  NoAnticliqueProof proof;
  proof.k = k;
  Eigen::Index offset = 0;
  for (std::size_t b = 0; b < sizes.size(); ++b) {
    const ComplexMatrix& a = gens[b + 1].matrix();
    int rank = 0;
    for (Eigen::Index r = 0; r < n; ++r) {
      for (Eigen::Index c = 0; c < n; ++c) {
        const Complex z = a(r, c);
        const bool inside = r == c && r >= offset && r < offset + sizes[b];
        if (z != Complex(inside ? 1.0 : 0.0, 0.0)) {
          throw NotApplicable("generator is not the expected block projection");
        }
      }
      if (a(r, r) == Complex(1.0, 0.0)) {
        ++rank;
        ++diagonal_sum[static_cast<std::size_t>(r)];
      }
    }
    proof.block_ranks.push_back(rank);
    proof.max_block_rank = std::max(proof.max_block_rank, rank);
    offset += sizes[b];
  }
  proof.sum_to_identity =
      offset == n && std::all_of(diagonal_sum.begin(), diagonal_sum.end(), [](long s) { return s == 1; });
  if (!proof.sum_to_identity) throw NotApplicable("block projections do not sum to the identity");
  if (proof.max_block_rank > k - 1) {
    std::ostringstream os;
    os << "a block of rank " << proof.max_block_rank << " admits rank-" << k << " anticliques";
    throw NotApplicable(os.str());
  }
  return proof;
}

}  // namespace qramsey
