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

#ifndef RSPACE_FFHAM_HPP_
#define RSPACE_FFHAM_HPP_

#include <optional>
#include <utility>
#include <vector>

#include "rspace/reduced.hpp"
#include "rspace/semilattice.hpp"

namespace rspace {

inline constexpr double kGroundEigenTol = 1e-9;

// k-local projector Hamiltonian H = sum_j Pi_j, stored by the kernels
// Pi_j^perp (one per k-subset, lexicographic order). Every kernel is nonzero.
class LocalHamiltonian {
 public:
  LocalHamiltonian(SystemShape shape, int k, std::vector<Subspace> kernels);

  const SystemShape& shape() const { return shape_; }
  int k() const { return k_; }
  std::size_t size() const { return kernels_.size(); }
  const std::vector<SubsetIndex>& subsets() const { return subsets_; }
  const std::vector<Subspace>& kernels() const { return kernels_; }
  const Subspace& kernel(std::size_t j) const { return kernels_.at(j); }

  // Pi_j = I - P(kernel_j) on the subset's space.
  Matrix term_projector(std::size_t j) const;
  // Dense sum_j Pi_j (x) I on the full space.
  Matrix dense_matrix() const;
  // The kernels viewed as an element candidate (H^perp).
  ReducedSpaceVector kernel_vector() const;

 private:
  SystemShape shape_;
  int k_;
  std::vector<SubsetIndex> subsets_;
  std::vector<Subspace> kernels_;
};

// A Hermitian term acting on a sorted set of particles.
struct LocalTerm {
  std::vector<int> subset;
  Matrix matrix;
};

LocalHamiltonian from_rsv(const ReducedSpaceVector& v);

// Intersection of the tensor-extended kernels; may be rank 0.
Subspace ground_space(const LocalHamiltonian& h);

struct FrustrationFreeResult {
  bool frustration_free = false;
  // Projector form of the terms; absent when some subset's terms share no
  // ground state (a zero kernel).
  std::optional<LocalHamiltonian> hamiltonian;
  Subspace ground;
};

// Converts each term to its ground eigenspace (eigenvalues within
// kGroundEigenTol of its minimum) and intersects. Terms on fewer than k
// particles are lifted to the first k-subset containing them; several terms
// on one subset intersect their kernels; missing subsets are zero terms.
FrustrationFreeResult is_frustration_free(const SystemShape& shape, int k, const std::vector<LocalTerm>& terms);

// Componentwise kernel intersection. Throws MeetUndefined if any is zero.
LocalHamiltonian meet(const LocalHamiltonian& a, const LocalHamiltonian& b);

// s is a ground space iff mpi(reduce(s, k)) == s.
bool is_ground_space(const Subspace& s, const SystemShape& shape, int k);

using SubspacePair = std::pair<Subspace, Subspace>;

// Requires is_ground_space(s). No-witness: a proper subspace that is itself
// a ground space.
Verdict<Subspace> is_minimal_ground_space(const Subspace& s, const SystemShape& shape, int k,
                                          const SearchBudget& budget);

// Requires is_ground_space(s). No-witness: two proper ground spaces summing to s.
Verdict<SubspacePair> is_irreducible_ground_space(const Subspace& s, const SystemShape& shape, int k,
                                                  const SearchBudget& budget);

struct BlockProductState {
  std::vector<std::vector<int>> blocks;
  std::vector<Vector> block_states;  // block-local vectors, big-endian within a block
  Vector state;                      // full-space vector
  double energy = 0.0;
  std::size_t partition_index = 0;
};

// All partitions of {0..n-1} into blocks of size 1 or 2, singletons first.
std::vector<std::vector<std::vector<int>>> pair_partitions(int n);

// Qubits, k = 2: searches block-product states (blocks of size <= 2) with
// energy below 1e-8 by alternating per-block minimization.
std::optional<BlockProductState> qubit2_product_ground_search(const LocalHamiltonian& h, const SearchBudget& budget);

// Full-space vector of a block-product state.
Vector block_product_vector(const SystemShape& shape, const std::vector<std::vector<int>>& blocks,
                            const std::vector<Vector>& block_states);

}  // namespace rspace

#endif  // RSPACE_FFHAM_HPP_
