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

#include "rspace/random.hpp"

#include "rspace/errors.hpp"

namespace rspace {

std::uint64_t Rng::derive_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finalizer over the combined value.
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double Rng::uniform() { return std::uniform_real_distribution<double>(0.0, 1.0)(engine_); }

int Rng::uniform_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }

Complex Rng::gaussian() {
  const double re = normal_(engine_);
  const double im = normal_(engine_);
  return {re, im};
}

Vector Rng::gaussian_vector(std::size_t dim) {
  Vector v(static_cast<Eigen::Index>(dim));
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = gaussian();
  return v;
}

Vector Rng::haar_state(std::size_t dim) {
  Vector v = gaussian_vector(dim);
  return v / v.norm();
}

Vector Rng::haar_state_in(const Subspace& s) {
  if (s.is_zero()) throw InvalidArgument("haar_state_in: zero subspace");
  Vector v = s.basis() * gaussian_vector(static_cast<std::size_t>(s.rank()));
  return v / v.norm();
}

Subspace Rng::random_subspace(std::size_t dim, int rank, double tol) {
  Matrix m(static_cast<Eigen::Index>(dim), rank);
  for (int j = 0; j < rank; ++j) m.col(j) = gaussian_vector(dim);
  return Subspace::from_columns(m, tol);
}

Subspace Rng::random_subspace_of(const Subspace& s, int rank) {
  if (rank < 0 || rank > s.rank()) throw InvalidArgument("random_subspace_of: rank out of range");
  Matrix coeffs(s.rank(), rank);
  for (int j = 0; j < rank; ++j) coeffs.col(j) = gaussian_vector(static_cast<std::size_t>(s.rank()));
  return Subspace::from_columns(s.basis() * coeffs, s.tol());
}

Matrix Rng::random_hermitian(std::size_t dim) {
  const auto d = static_cast<Eigen::Index>(dim);
  Matrix g(d, d);
  for (Eigen::Index j = 0; j < d; ++j) g.col(j) = gaussian_vector(dim);
  return (g + g.adjoint()) / 2.0;
}

}  // namespace rspace
