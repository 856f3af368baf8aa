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

#ifndef RSPACE_RANDOM_HPP_
#define RSPACE_RANDOM_HPP_

#include <cstdint>
#include <random>

#include "rspace/subspace.hpp"

namespace rspace {

// Seeded source of random states and subspaces. A fixed seed reproduces the
// same sequence on a given build.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Deterministic child seed for sub-task `index`.
  static std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

  double uniform();
  int uniform_int(int lo, int hi);  // inclusive bounds
  Complex gaussian();

  Vector gaussian_vector(std::size_t dim);
  Vector haar_state(std::size_t dim);
  // Haar-random unit vector inside s (s must be nonzero).
  Vector haar_state_in(const Subspace& s);
  Subspace random_subspace(std::size_t dim, int rank, double tol = kDefaultRankTol);
  // Random rank-`rank` subspace of s.
  Subspace random_subspace_of(const Subspace& s, int rank);
  Matrix random_hermitian(std::size_t dim);

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace rspace

#endif  // RSPACE_RANDOM_HPP_
