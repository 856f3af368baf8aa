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

#ifndef RSPACE_SUBSPACE_HPP_
#define RSPACE_SUBSPACE_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "rspace/hilbert.hpp"

namespace rspace {

inline constexpr double kDefaultRankTol = 1e-10;
// Inclusion residual and projector distance threshold. Looser than the rank
// tolerance so chained operations do not produce spurious inequality.
inline constexpr double kInclusionTol = 1e-8;

// A subspace of C^ambient_dim held as an orthonormal basis (columns).
// The rank tolerance travels with the value and is used by every operation
// that makes a rank decision on it.
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(std::size_t ambient_dim, double tol = kDefaultRankTol);
  static Subspace full(std::size_t ambient_dim, double tol = kDefaultRankTol);

  // Span of the columns. Rank = #singular values > tol * largest.
  static Subspace from_columns(const Matrix& spanning, double tol = kDefaultRankTol);
  static Subspace from_spanning_vectors(std::span<const Vector> vectors, double tol = kDefaultRankTol);
  // Trusts that `basis` already has orthonormal columns.
  static Subspace from_orthonormal(Matrix basis, double tol = kDefaultRankTol);
  // Eigenvectors of a Hermitian matrix whose eigenvalues satisfy lo <= x <= hi.
  static Subspace eigenspace(const Matrix& hermitian, double lo, double hi, double tol = kDefaultRankTol);

  std::size_t ambient_dim() const { return ambient_dim_; }
  int rank() const { return static_cast<int>(basis_.cols()); }
  bool is_zero() const { return basis_.cols() == 0; }
  const Matrix& basis() const { return basis_; }
  double tol() const { return tol_; }
  Subspace with_tol(double tol) const;

  Matrix projector() const { return basis_ * basis_.adjoint(); }
  // Component of v orthogonal to this subspace.
  Vector residual(const Vector& v) const;
  Vector project(const Vector& v) const { return basis_ * (basis_.adjoint() * v); }

 private:
  Subspace(std::size_t ambient_dim, Matrix basis, double tol)
      : ambient_dim_(ambient_dim), basis_(std::move(basis)), tol_(tol) {}

  std::size_t ambient_dim_ = 0;
  Matrix basis_;
  double tol_ = kDefaultRankTol;
};

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
// Common intersection of any number of subspaces, computed once from the
// summed complement projectors. Empty input is rejected.
Subspace intersect_all(std::span<const Subspace> spaces);

// ||(I - P_a) B_b||_2 < kInclusionTol.
bool contains(const Subspace& a, const Subspace& b);
double inclusion_residual(const Subspace& a, const Subspace& b);
// ||P_a - P_b||_F < kInclusionTol.
bool equals(const Subspace& a, const Subspace& b);
double projector_distance(const Subspace& a, const Subspace& b);
Subspace complement(const Subspace& a);

// s (living on `subset`) tensored with the full space of the other particles.
Subspace tensor_extend(const Subspace& s, const SystemShape& shape, const SubsetIndex& subset);
Subspace tensor_extend(const Subspace& s, const SystemShape& shape, std::span<const int> subset);
// a on `subset` tensored with b on the complementary particles.
Subspace tensor_product(const Subspace& a, const Subspace& b, const SystemShape& shape,
                        std::span<const int> subset);

// Range of a positive semidefinite matrix: eigenvectors with eigenvalue
// above tol * (largest eigenvalue).
Subspace range_of_psd(const Matrix& psd, double tol = kDefaultRankTol);

// Computational basis vector e_index in C^dim.
Vector basis_ket(std::size_t dim, std::size_t index);

}  // namespace rspace

#endif  // RSPACE_SUBSPACE_HPP_
