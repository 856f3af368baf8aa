// Copyright 2026 The rspace Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rspace/oracle.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "rspace/errors.hpp"

namespace rspace::oracle {

SampledState sample_state(const Subspace& s, Rng& rng, bool mixed) {
  if (s.is_zero()) throw InvalidArgument("sample_state: zero subspace");
  if (!mixed) {
    const Vector v = rng.haar_state_in(s);
    return {v * v.adjoint(), "pure-haar"};
  }
  const int q = rng.uniform_int(1, s.rank());
  const auto d = static_cast<Eigen::Index>(s.ambient_dim());
  Matrix rho = Matrix::Zero(d, d);
  double total = 0.0;
  for (int i = 0; i < q; ++i) {
    const Vector v = rng.haar_state_in(s);
    const double w = 0.05 + rng.uniform();
    rho += w * v * v.adjoint();
    total += w;
  }
  return {rho / total, "mixed-rank-" + std::to_string(q)};
}

Matrix naive_partial_trace(const Matrix& op, const SystemShape& shape, const std::vector<int>& keep) {
  const int n = shape.num_particles();
  std::vector<bool> kept(static_cast<std::size_t>(n), false);
  for (int p : keep) kept.at(p) = true;
  std::size_t dk = 1;
  for (int p : keep) dk *= static_cast<std::size_t>(shape.dim(p));
  Matrix out = Matrix::Zero(static_cast<Eigen::Index>(dk), static_cast<Eigen::Index>(dk));
  const std::size_t dim = shape.total_dim();
  for (std::size_t x = 0; x < dim; ++x) {
    const auto dx = shape.digits(x);
    for (std::size_t y = 0; y < dim; ++y) {
      const auto dy = shape.digits(y);
      bool same_rest = true;
      for (int p = 0; p < n && same_rest; ++p) same_rest = kept[p] || dx[p] == dy[p];
      if (!same_rest) continue;
      std::size_t a = 0, b = 0;
      for (int p : keep) {
        a = a * static_cast<std::size_t>(shape.dim(p)) + static_cast<std::size_t>(dx[p]);
        b = b * static_cast<std::size_t>(shape.dim(p)) + static_cast<std::size_t>(dy[p]);
      }
      out(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) +=
          op(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(y));
    }
  }
  return out;
}

namespace {

Subspace psd_range(const Matrix& m, double tol) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(m);
  const double top = es.eigenvalues().maxCoeff();
  std::vector<Vector> cols;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    if (es.eigenvalues()(i) > tol * top) cols.push_back(es.eigenvectors().col(i));
  }
  if (cols.empty()) return Subspace::zero(static_cast<std::size_t>(m.rows()), tol);
  return Subspace::from_spanning_vectors(cols, tol);
}

}  // namespace

ReducedSpaceVector sample_rs(const Subspace& s, const SystemShape& shape, int k, int n_samples, std::uint64_t seed) {
  if (s.is_zero()) throw InvalidArgument("sample_rs: zero subspace");
  const auto subsets = enumerate_subsets(shape.num_particles(), k);
  std::vector<Subspace> acc;
  for (const auto& sub : subsets) acc.push_back(Subspace::zero(shape.subsystem_dim(sub.particles), s.tol()));
  for (int i = 0; i < std::max(1, n_samples); ++i) {
    Rng rng(Rng::derive_seed(seed, static_cast<std::uint64_t>(i)));
    const SampledState st = sample_state(s, rng, i % 2 == 1);
    for (std::size_t j = 0; j < subsets.size(); ++j) {
      acc[j] = sum(acc[j], psd_range(naive_partial_trace(st.rho, shape, subsets[j].particles), s.tol()));
    }
  }
  return ReducedSpaceVector(shape, k, std::move(acc));
}

Matrix assemble_hamiltonian(const SystemShape& shape, const std::vector<LocalTerm>& terms) {
  const std::size_t dim = shape.total_dim();
  if (dim > kBruteForceMaxDim) throw Unsupported("brute_ground: total dimension exceeds 4096");
  const auto d = static_cast<Eigen::Index>(dim);
  Matrix h = Matrix::Zero(d, d);
  for (const auto& t : terms) {
    for (std::size_t x = 0; x < dim; ++x) {
      auto dx = shape.digits(x);
      std::size_t a = 0;
      for (int p : t.subset) a = a * static_cast<std::size_t>(shape.dim(p)) + static_cast<std::size_t>(dx[p]);
      const auto local_dim = static_cast<std::size_t>(t.matrix.rows());
      for (std::size_t b = 0; b < local_dim; ++b) {
        // Overwrite the term's digits of x with those of b.
        std::size_t rem = b;
        for (std::size_t q = t.subset.size(); q-- > 0;) {
          const int p = t.subset[q];
          dx[p] = static_cast<int>(rem % static_cast<std::size_t>(shape.dim(p)));
          rem /= static_cast<std::size_t>(shape.dim(p));
        }
        const std::size_t y = shape.index(dx);
        h(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(y)) +=
            t.matrix(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b));
      }
    }
  }
  return h;
}

GroundData brute_ground(const SystemShape& shape, const std::vector<LocalTerm>& terms) {
  const Matrix h = assemble_hamiltonian(shape, terms);
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  const double e0 = es.eigenvalues()(0);
  std::vector<Vector> cols;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    if (es.eigenvalues()(i) <= e0 + 1e-8) cols.push_back(es.eigenvectors().col(i));
  }
  return {e0, Subspace::from_spanning_vectors(cols)};
}

double sum_of_term_minima(const std::vector<LocalTerm>& terms) {
  double total = 0.0;
  for (const auto& t : terms) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(t.matrix, Eigen::EigenvaluesOnly);
    total += es.eigenvalues()(0);
  }
  return total;
}

bool brute_frustration_free(const SystemShape& shape, const std::vector<LocalTerm>& terms, double tol) {
  return brute_ground(shape, terms).energy <= sum_of_term_minima(terms) + tol;
}

Subspace naive_intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw InvalidArgument("naive_intersect: ambient dimensions differ");
  const double tol = std::max(a.tol(), b.tol());
  if (a.is_zero() || b.is_zero()) return Subspace::zero(a.ambient_dim(), tol);
  Matrix m(a.basis().rows(), a.rank() + b.rank());
  m << a.basis(), -b.basis();
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const Eigen::Index cols = m.cols();
  std::vector<Vector> common;
  for (Eigen::Index i = 0; i < cols; ++i) {
    // Columns of V beyond the singular value count span the exact null space.
    // sigma^2 here equals the eigenvalue used by intersect(), hence sqrt(tol).
    const double sigma = i < sv.size() ? sv(i) : 0.0;
    if (sigma < std::sqrt(tol)) {
      const Vector y = svd.matrixV().col(i).head(a.rank());
      common.push_back(a.basis() * y);
    }
  }
  if (common.empty()) return Subspace::zero(a.ambient_dim(), tol);
  return Subspace::from_spanning_vectors(common, tol);
}

}  // namespace rspace::oracle
