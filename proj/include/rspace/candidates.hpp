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

#ifndef RSPACE_CANDIDATES_HPP_
#define RSPACE_CANDIDATES_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "rspace/random.hpp"
#include "rspace/subspace.hpp"

namespace rspace {

// Which candidate families a witness search draws from.
struct CandidateFamilies {
  bool basis_states = true;      // computational basis kets lying in the space
  bool space_basis = true;       // the stored orthonormal basis vectors
  bool product_states = true;    // locally optimized product states in the space
  bool random_states = true;     // Haar-random states in the space
  bool random_subspaces = true;  // random proper subspaces of the space
};

struct SearchBudget {
  std::size_t random_samples = 1000;
  CandidateFamilies families;
  std::uint64_t seed = 0;
  int product_starts = 8;
};

// Deterministic, duplicate-free list of structured rank-1 candidates inside
// `space`, in family order: basis kets, stored basis, product states.
std::vector<Subspace> structured_candidates(const Subspace& space, const SystemShape& shape,
                                            const SearchBudget& budget);

// One random proper subspace of `space` (rank in [1, rank-1], rank 1 when
// only random states are enabled). Requires space.rank() >= 2.
Subspace random_candidate(const Subspace& space, Rng& rng, const CandidateFamilies& families);

// Alternating local maximization of <phi|P|phi> over product states phi.
// Returns a unit vector in `space` that is a product state to within
// `accept` residual, if one of the starts converges to one.
std::optional<Vector> find_product_state_in(const Subspace& space, const SystemShape& shape, Rng& rng,
                                            int starts, double accept = 1e-9);

// Pure product state from per-particle vectors (particle 0 first).
Vector product_state(const std::vector<Vector>& factors);

}  // namespace rspace

#endif  // RSPACE_CANDIDATES_HPP_
