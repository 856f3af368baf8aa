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

#include "rspace/subspace.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "rspace/errors.hpp"

namespace rspace {

namespace {

void require_same_ambient(const Subspace& a, const Subspace& b, const char* op) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw InvalidArgument(std::string(op) + ": ambient dimensions differ (" +
                          std::to_string(a.ambient_dim()) + " vs " + std::to_string(b.ambient_dim()) + ")");
  }
}

double combined_tol(const Subspace& a, const Subspace& b) { return std::max(a.tol(), b.tol()); }

}  // namespace

Subspace Subspace::zero(std::size_t ambient_dim, double tol) {
  return Subspace(ambient_dim, Matrix(static_cast<Eigen::Index>(ambient_dim), 0), tol);
}

Subspace Subspace::full(std::size_t ambient_dim, double tol) {
  const auto d = static_cast<Eigen::Index>(ambient_dim);
  return Subspace(ambient_dim, Matrix::Identity(d, d), tol);
}

Subspace Subspace::from_orthonormal(Matrix basis, double tol) {
  const auto dim = static_cast<std::size_t>(basis.rows());
  return Subspace(dim, std::move(basis), tol);
}

Subspace Subspace::from_columns(const Matrix& spanning, double tol) {
  const auto dim = static_cast<std::size_t>(spanning.rows());
  if (spanning.cols() == 0 || spanning.rows() == 0) return zero(dim, tol);
  // JacobiSVD rather than BDCSVD: Eigen 3.4.0 BDCSVD returns wrong singular
  // values for some rank-deficient complex inputs.
  Eigen::JacobiSVD<Matrix> svd(spanning, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return zero(dim, tol);
  Eigen::Index r = 0;
  while (r < sv.size() && sv(r) > tol * sv(0)) ++r;
  return Subspace(dim, svd.matrixU().leftCols(r), tol);
}

Subspace Subspace::from_spanning_vectors(std::span<const Vector> vectors, double tol) {
  if (vectors.empty()) throw InvalidArgument("from_spanning_vectors: empty vector list");
  const auto dim = vectors.front().size();
  if (dim < 1) throw InvalidArgument("from_spanning_vectors: vectors must have length >= 1");
  Matrix m(dim, static_cast<Eigen::Index>(vectors.size()));
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != dim) throw InvalidArgument("from_spanning_vectors: vectors differ in length");
    m.col(static_cast<Eigen::Index>(i)) = vectors[i];
  }
  return from_columns(m, tol);
}

Subspace Subspace::eigenspace(const Matrix& hermitian, double lo, double hi, double tol) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(hermitian);
  const auto& ev = es.eigenvalues();
  std::vector<Eigen::Index> keep;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev(i) >= lo && ev(i) <= hi) keep.push_back(i);
  }
  Matrix basis(hermitian.rows(), static_cast<Eigen::Index>(keep.size()));
  for (std::size_t j = 0; j < keep.size(); ++j) basis.col(static_cast<Eigen::Index>(j)) = es.eigenvectors().col(keep[j]);
  return from_orthonormal(std::move(basis), tol);
}

Subspace Subspace::with_tol(double tol) const { return Subspace(ambient_dim_, basis_, tol); }

Vector Subspace::residual(const Vector& v) const { return v - project(v); }

Subspace sum(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b, "sum");
  if (a.is_zero()) return b.with_tol(combined_tol(a, b));
  if (b.is_zero()) return a.with_tol(combined_tol(a, b));
  Matrix m(a.basis().rows(), a.rank() + b.rank());
  m << a.basis(), b.basis();
  return Subspace::from_columns(m, combined_tol(a, b));
}

Subspace intersect_all(std::span<const Subspace> spaces) {
  if (spaces.empty()) throw InvalidArgument("intersect_all: no subspaces given");
  const std::size_t dim = spaces.front().ambient_dim();
  double tol = 0;
  const auto d = static_cast<Eigen::Index>(dim);
  Matrix acc = Matrix::Zero(d, d);
  bool any_proper = false;
  for (const auto& s : spaces) {
    require_same_ambient(spaces.front(), s, "intersect");
    tol = std::max(tol, s.tol());
    if (s.rank() == static_cast<int>(dim)) continue;
    if (s.is_zero()) return Subspace::zero(dim, tol);
    any_proper = true;
    acc.noalias() -= s.basis() * s.basis().adjoint();
    acc.diagonal().array() += 1.0;
  }
  if (!any_proper) return Subspace::full(dim, tol);
  // Null space of sum_j (I - P_j): the vectors inside every P_j.
  return Subspace::eigenspace(acc, -1.0, tol, tol);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b, "intersect");
  const Subspace both[] = {a, b};
  return intersect_all(both);
}

namespace {

Matrix inclusion_defect(const Subspace& a, const Subspace& b) {
  return b.basis() - a.basis() * (a.basis().adjoint() * b.basis());
}

double spectral_norm(const Matrix& r) {
  if (r.cols() == 1) return r.norm();
  // Largest eigenvalue of r^dagger r is accurate relative to itself, so the
  // square root keeps full relative precision even for tiny residuals.
  Eigen::SelfAdjointEigenSolver<Matrix> es(r.adjoint() * r, Eigen::EigenvaluesOnly);
  return std::sqrt(std::max(0.0, es.eigenvalues()(es.eigenvalues().size() - 1)));
}

}  // namespace

double inclusion_residual(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b, "contains");
  if (b.is_zero()) return 0.0;
  return spectral_norm(inclusion_defect(a, b));
}

bool contains(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b, "contains");
  if (b.is_zero()) return true;
  const Matrix r = inclusion_defect(a, b);
  // ||r||_2 <= ||r||_F <= sqrt(cols) ||r||_2 settles most cases without a solve.
  const double frob = r.norm();
  if (frob < kInclusionTol) return true;
  if (frob >= kInclusionTol * std::sqrt(static_cast<double>(r.cols()))) return false;
  return spectral_norm(r) < kInclusionTol;
}

double projector_distance(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b, "equals");
  if (a.rank() == b.rank()) {
    // For equal ranks ||P_a - P_b||_F^2 = 2 ||(I - P_a) B_b||_F^2, which avoids
    // the cancellation of forming both projectors.
    if (a.is_zero()) return 0.0;
    const Matrix r = b.basis() - a.basis() * (a.basis().adjoint() * b.basis());
    return std::sqrt(2.0) * r.norm();
  }
  return (a.projector() - b.projector()).norm();
}

bool equals(const Subspace& a, const Subspace& b) {
  return a.rank() == b.rank() && projector_distance(a, b) < kInclusionTol;
}

Subspace complement(const Subspace& a) {
  const auto d = static_cast<Eigen::Index>(a.ambient_dim());
  if (a.is_zero()) return Subspace::full(a.ambient_dim(), a.tol());
  if (a.rank() == d) return Subspace::zero(a.ambient_dim(), a.tol());
  Eigen::HouseholderQR<Matrix> qr(a.basis());
  const Matrix q = qr.householderQ() * Matrix::Identity(d, d);
  return Subspace::from_orthonormal(q.rightCols(d - a.rank()), a.tol());
}

Subspace tensor_product(const Subspace& a, const Subspace& b, const SystemShape& shape,
                        std::span<const int> subset) {
  const IndexEmbedding emb(shape, subset);
  if (a.ambient_dim() != emb.subset_dim() || b.ambient_dim() != emb.complement_dim()) {
    throw InvalidArgument("tensor_product: factor dimensions do not match the subset split");
  }
  const double tol = combined_tol(a, b);
  Matrix basis = Matrix::Zero(static_cast<Eigen::Index>(shape.total_dim()), a.rank() * b.rank());
  for (int i = 0; i < a.rank(); ++i) {
    for (int j = 0; j < b.rank(); ++j) {
      const Eigen::Index col = i * b.rank() + j;
      for (std::size_t x = 0; x < emb.subset_dim(); ++x) {
        const Complex ax = a.basis()(x, i);
        if (ax == Complex(0)) continue;
        for (std::size_t c = 0; c < emb.complement_dim(); ++c) {
          basis(emb.full_index(x, c), col) = ax * b.basis()(c, j);
        }
      }
    }
  }
  return Subspace::from_orthonormal(std::move(basis), tol);
}

Subspace tensor_extend(const Subspace& s, const SystemShape& shape, std::span<const int> subset) {
  const std::size_t dc = shape.total_dim() / std::max<std::size_t>(1, shape.subsystem_dim(subset));
  if (s.ambient_dim() != shape.subsystem_dim(subset)) {
    throw InvalidArgument("tensor_extend: subspace dimension " + std::to_string(s.ambient_dim()) +
                          " does not match subset dimension " + std::to_string(shape.subsystem_dim(subset)));
  }
  return tensor_product(s, Subspace::full(dc, s.tol()), shape, subset);
}

Subspace tensor_extend(const Subspace& s, const SystemShape& shape, const SubsetIndex& subset) {
  return tensor_extend(s, shape, std::span<const int>(subset.particles));
}

Subspace range_of_psd(const Matrix& psd, double tol) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(psd);
  const auto& ev = es.eigenvalues();
  const double top = ev.size() ? ev(ev.size() - 1) : 0.0;
  if (top <= 0.0) return Subspace::zero(static_cast<std::size_t>(psd.rows()), tol);
  Eigen::Index first = ev.size();
  while (first > 0 && ev(first - 1) > tol * top) --first;
  return Subspace::from_orthonormal(es.eigenvectors().rightCols(ev.size() - first), tol);
}

Vector basis_ket(std::size_t dim, std::size_t index) {
  Vector v = Vector::Zero(static_cast<Eigen::Index>(dim));
  v(static_cast<Eigen::Index>(index)) = 1.0;
  return v;
}

}  // namespace rspace
