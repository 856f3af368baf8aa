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

#ifndef RSPACE_HILBERT_HPP_
#define RSPACE_HILBERT_HPP_

#include <complex>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace rspace {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Local dimensions of an n-particle system. Basis kets are encoded
// big-endian: particle 0 is the most significant digit.
class SystemShape {
 public:
  explicit SystemShape(std::vector<int> dims);

  static SystemShape uniform(int num_particles, int local_dim);

  int num_particles() const { return static_cast<int>(dims_.size()); }
  int dim(int particle) const { return dims_.at(particle); }
  const std::vector<int>& dims() const { return dims_; }
  std::size_t total_dim() const { return total_dim_; }

  // Product of local dimensions over the given particles.
  std::size_t subsystem_dim(std::span<const int> particles) const;
  // Local dimensions of the given particles, in the given order.
  std::vector<int> subsystem_dims(std::span<const int> particles) const;

  std::vector<int> digits(std::size_t index) const;
  std::size_t index(std::span<const int> digits) const;

  bool operator==(const SystemShape& other) const { return dims_ == other.dims_; }

 private:
  std::vector<int> dims_;
  std::size_t total_dim_ = 1;
};

// A k-subset of particles together with its position in the
// lexicographic enumeration of all k-subsets.
struct SubsetIndex {
  std::vector<int> particles;
  std::size_t rank = 0;

  int size() const { return static_cast<int>(particles.size()); }
  bool operator==(const SubsetIndex&) const = default;
};

std::size_t binomial(int n, int k);

// All k-subsets of {0..n-1} in lexicographic order; rank == position.
std::vector<SubsetIndex> enumerate_subsets(int n, int k);

// Sorted particles of {0..n-1} not in `particles`.
std::vector<int> complement_particles(std::span<const int> particles, int n);

// Bijection between (subset-local index, complement-local index) pairs and
// full-space basis indices. Both local indices use the big-endian
// encoding restricted to their (sorted) particle lists.
class IndexEmbedding {
 public:
  IndexEmbedding(const SystemShape& shape, std::span<const int> subset);

  std::size_t subset_dim() const { return subset_dim_; }
  std::size_t complement_dim() const { return complement_dim_; }
  const std::vector<int>& subset() const { return subset_; }
  const std::vector<int>& complement() const { return complement_; }

  std::size_t full_index(std::size_t subset_index, std::size_t complement_index) const {
    return to_full_[subset_index * complement_dim_ + complement_index];
  }
  std::pair<std::size_t, std::size_t> split(std::size_t full_index) const;

 private:
  std::vector<int> subset_;
  std::vector<int> complement_;
  std::size_t subset_dim_;
  std::size_t complement_dim_;
  std::vector<std::size_t> to_full_;
  std::vector<std::size_t> from_full_;
};

IndexEmbedding embed_permutation(const SystemShape& shape, const SubsetIndex& subset);

// Reduced operator on `keep` (sorted particle list). Throws InvalidArgument
// on dimension mismatch or a non-Hermitian input.
Matrix partial_trace(const Matrix& op, const SystemShape& shape, std::span<const int> keep);
Matrix partial_trace(const Matrix& op, const SystemShape& shape, const SubsetIndex& keep);

// Each column reshaped to (kept x traced) and laid side by side; the result
// S satisfies S S^dagger = partial_trace_of_columns(vectors, ...).
Matrix subsystem_slices(const Matrix& vectors, const SystemShape& shape, std::span<const int> keep);

// Reduced state of the pure or mixed state spanned by the columns of `vectors`
// (sum_i |v_i><v_i|), computed without forming the full density matrix.
Matrix partial_trace_of_columns(const Matrix& vectors, const SystemShape& shape,
                                std::span<const int> keep);

}  // namespace rspace

#endif  // RSPACE_HILBERT_HPP_
