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

#ifndef RSPACE_SEMILATTICE_HPP_
#define RSPACE_SEMILATTICE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rspace/candidates.hpp"
#include "rspace/reduced.hpp"

namespace rspace {

enum class VerdictStatus { kCertifiedYes, kNo, kUnknown };

const char* to_string(VerdictStatus status);

// Outcome of a structural check that has no complete decision procedure.
// kNo always carries a witness that re-validates with leq/join (or subspace
// arithmetic) alone; kCertifiedYes always names the rule that proved it.
template <typename Witness>
struct Verdict {
  VerdictStatus status = VerdictStatus::kUnknown;
  std::string rule;
  std::optional<Witness> witness;
  std::size_t samples_used = 0;
  std::uint64_t seed = 0;
};

using RsvPair = std::pair<ReducedSpaceVector, ReducedSpaceVector>;
using AtomVerdict = Verdict<ReducedSpaceVector>;
using IrreducibleVerdict = Verdict<RsvPair>;

inline constexpr const char* kRuleRankOneMpi = "rank-one-mpi";
inline constexpr const char* kRuleAtomIsIrreducible = "atom-is-join-irreducible";

// Requires member_theta(v). CertifiedYes when mpi(v) is one pure state;
// otherwise searches reduce(T) for proper T inside mpi(v) for a strictly
// smaller element.
AtomVerdict is_atom(const ReducedSpaceVector& v, const SearchBudget& budget);

// Requires member_theta(v). Searches pairs of proper subspaces of mpi(v)
// whose reductions are both strictly below v and join to v.
IrreducibleVerdict is_join_irreducible(const ReducedSpaceVector& v, const SearchBudget& budget);

struct JoinPrimeWitness {
  ReducedSpaceVector first;
  ReducedSpaceVector second;
  std::string construction;  // "product" or "entangled"
  int particle = -1;         // entangled particle used by the split
  std::vector<int> split;    // eigenvector indices assigned to `first`
};

// For s = span{psi0}: two elements whose join dominates reduce(s, k) while
// neither does alone. Throws Unsupported for product states with n < 3 and
// SearchExhausted when no construction validates.
JoinPrimeWitness join_prime_witness(const Subspace& s, const SystemShape& shape, int k);

// True when all three post-conditions of a join-prime witness hold.
bool validates_join_prime_witness(const ReducedSpaceVector& x, const JoinPrimeWitness& w);

struct DecompositionPart {
  ReducedSpaceVector element;
  VerdictStatus status;
  std::string rule;
};

// Finite list of elements whose join is v, split recursively along
// join-reducibility witnesses.
std::vector<DecompositionPart> decompose_irreducibles(const ReducedSpaceVector& v, const SearchBudget& budget);

}  // namespace rspace

#endif  // RSPACE_SEMILATTICE_HPP_
