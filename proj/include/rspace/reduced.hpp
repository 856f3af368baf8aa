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

#ifndef RSPACE_REDUCED_HPP_
#define RSPACE_REDUCED_HPP_

#include <cstddef>
#include <vector>

#include "rspace/hilbert.hpp"
#include "rspace/subspace.hpp"

namespace rspace {

// The tuple (eta_1, ..., eta_m) of k-particle subspaces, one per k-subset in
// lexicographic order. Elements of Theta_k are values of this type whose
// components are all nonzero.
class ReducedSpaceVector {
 public:
  // Components must be given in lexicographic subset order with matching
  // ambient dimensions.
  ReducedSpaceVector(SystemShape shape, int k, std::vector<Subspace> components);

  // Components labelled by subset, in any order; every k-subset must appear
  // exactly once.
  static ReducedSpaceVector from_labelled(const SystemShape& shape, int k,
                                          std::vector<std::pair<std::vector<int>, Subspace>> labelled);

  const SystemShape& shape() const { return shape_; }
  int k() const { return k_; }
  std::size_t size() const { return components_.size(); }
  const std::vector<SubsetIndex>& subsets() const { return subsets_; }
  const std::vector<Subspace>& components() const { return components_; }
  const Subspace& component(std::size_t j) const { return components_.at(j); }
  bool all_nonzero() const;

 private:
  SystemShape shape_;
  int k_;
  std::vector<SubsetIndex> subsets_;
  std::vector<Subspace> components_;
};

// k-particle reduced spaces of s: the ranges of the k-RDMs of the
// maximally mixed state on s. Throws InvalidArgument for rank-0 s.
// Range of the reduced state of sum_i |v_i><v_i| on `keep`. Rank is decided
// on singular values of the reshaped columns (square roots of the reduced
// state's eigenvalues), so the cut lives on the same amplitude scale as the
// inclusion tolerance.
Subspace reduced_range(const Matrix& vectors, const SystemShape& shape, std::span<const int> keep,
                       double tol = kDefaultRankTol);

ReducedSpaceVector reduce(const Subspace& s, const SystemShape& shape, int k);

// Maximal pre-image: intersection of every component tensored with the
// identity on the remaining particles. May be rank 0.
Subspace mpi(const ReducedSpaceVector& v);

ReducedSpaceVector join(const ReducedSpaceVector& a, const ReducedSpaceVector& b);

bool leq(const ReducedSpaceVector& a, const ReducedSpaceVector& b);
bool lt(const ReducedSpaceVector& a, const ReducedSpaceVector& b);
bool eq(const ReducedSpaceVector& a, const ReducedSpaceVector& b);

// v is in Theta_k iff its MPI is nonzero and reduces back to v.
bool member_theta(const ReducedSpaceVector& v);

}  // namespace rspace

#endif  // RSPACE_REDUCED_HPP_
