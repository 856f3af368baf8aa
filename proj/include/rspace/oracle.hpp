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

#ifndef RSPACE_ORACLE_HPP_
#define RSPACE_ORACLE_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "rspace/ffham.hpp"
#include "rspace/random.hpp"
#include "rspace/reduced.hpp"

// Slow reference implementations used to cross-check the main algorithms.
// Nothing here shares the index-embedding or projector-sum code paths of the
// modules it checks.
namespace rspace::oracle {

struct SampledState {
  Matrix rho;          // full-space density matrix, range inside the source subspace
  std::string recipe;  // "pure-haar" or "mixed-rank-<q>"
};

SampledState sample_state(const Subspace& s, Rng& rng, bool mixed);

// Reduced operator by explicit digit bookkeeping.
Matrix naive_partial_trace(const Matrix& op, const SystemShape& shape, const std::vector<int>& keep);

// Sum over sampled states rho (range in s) of the ranges of their k-RDMs.
// Even samples are pure, odd samples mixed. Sample i uses a seed derived
// from (seed, i).
ReducedSpaceVector sample_rs(const Subspace& s, const SystemShape& shape, int k, int n_samples, std::uint64_t seed);

struct GroundData {
  double energy = 0.0;
  Subspace space;
};

inline constexpr std::size_t kBruteForceMaxDim = 4096;

// Dense sum_j H_j (x) I assembled from digits; throws Unsupported above
// kBruteForceMaxDim.
Matrix assemble_hamiltonian(const SystemShape& shape, const std::vector<LocalTerm>& terms);
// Lowest eigenvalue and its eigenspace (eigenvalues within 1e-8 of it).
GroundData brute_ground(const SystemShape& shape, const std::vector<LocalTerm>& terms);
// Sum over terms of each term's own lowest eigenvalue.
double sum_of_term_minima(const std::vector<LocalTerm>& terms);
// Frustration-freeness by energies: ground energy == sum of term minima.
bool brute_frustration_free(const SystemShape& shape, const std::vector<LocalTerm>& terms, double tol = 1e-8);

// Intersection via the null space of [A, -B]: common vectors x = A y = B z.
Subspace naive_intersect(const Subspace& a, const Subspace& b);

}  // namespace rspace::oracle

#endif  // RSPACE_ORACLE_HPP_
