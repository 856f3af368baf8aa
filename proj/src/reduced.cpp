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

#include "rspace/reduced.hpp"

#include <algorithm>
#include <string>

#include "rspace/errors.hpp"

namespace rspace {

ReducedSpaceVector::ReducedSpaceVector(SystemShape shape, int k, std::vector<Subspace> components)
    : shape_(std::move(shape)), k_(k), subsets_(enumerate_subsets(shape_.num_particles(), k)),
      components_(std::move(components)) {
  if (components_.size() != subsets_.size()) {
    throw InvalidArgument("ReducedSpaceVector: expected " + std::to_string(subsets_.size()) +
                          " components, got " + std::to_string(components_.size()));
  }
  for (std::size_t j = 0; j < subsets_.size(); ++j) {
    if (components_[j].ambient_dim() != shape_.subsystem_dim(subsets_[j].particles)) {
      throw InvalidArgument("ReducedSpaceVector: component " + std::to_string(j) +
                            " has the wrong ambient dimension");
    }
  }
}

ReducedSpaceVector ReducedSpaceVector::from_labelled(
    const SystemShape& shape, int k, std::vector<std::pair<std::vector<int>, Subspace>> labelled) {
  const auto subsets = enumerate_subsets(shape.num_particles(), k);
  std::vector<Subspace> components(subsets.size());
  std::vector<bool> seen(subsets.size(), false);
  for (auto& [label, space] : labelled) {
    std::sort(label.begin(), label.end());
    auto it = std::find_if(subsets.begin(), subsets.end(),
                           [&](const SubsetIndex& s) { return s.particles == label; });
    if (it == subsets.end()) throw InvalidArgument("ReducedSpaceVector: label is not a k-subset");
    if (seen[it->rank]) throw InvalidArgument("ReducedSpaceVector: duplicate subset label");
    seen[it->rank] = true;
    components[it->rank] = std::move(space);
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw InvalidArgument("ReducedSpaceVector: not every k-subset has a component");
  }
  return ReducedSpaceVector(shape, k, std::move(components));
}

bool ReducedSpaceVector::all_nonzero() const {
  return std::none_of(components_.begin(), components_.end(), [](const Subspace& s) { return s.is_zero(); });
}

namespace {

void require_compatible(const ReducedSpaceVector& a, const ReducedSpaceVector& b, const char* op) {
  if (!(a.shape() == b.shape()) || a.k() != b.k()) {
    throw InvalidArgument(std::string(op) + ": operands differ in shape or locality");
  }
}

}  // namespace

Subspace reduced_range(const Matrix& vectors, const SystemShape& shape, std::span<const int> keep, double tol) {
  return Subspace::from_columns(subsystem_slices(vectors, shape, keep), tol);
}

ReducedSpaceVector reduce(const Subspace& s, const SystemShape& shape, int k) {
  if (s.ambient_dim() != shape.total_dim()) throw InvalidArgument("reduce: subspace does not live on this system");
  if (s.is_zero()) throw InvalidArgument("reduce: rank-0 subspace has no reduced spaces");
  const auto subsets = enumerate_subsets(shape.num_particles(), k);
  std::vector<Subspace> comps;
  comps.reserve(subsets.size());
  // rho_M = B B^dagger / r; the 1/r scale does not change ranges.
  for (const auto& sub : subsets) comps.push_back(reduced_range(s.basis(), shape, sub.particles, s.tol()));
  return ReducedSpaceVector(shape, k, std::move(comps));
}

Subspace mpi(const ReducedSpaceVector& v) {
  if (!v.all_nonzero()) throw InvalidArgument("mpi: every component must be nonzero");
  std::vector<Subspace> extended;
  extended.reserve(v.size());
  for (std::size_t j = 0; j < v.size(); ++j) {
    const auto& c = v.component(j);
    if (c.rank() == static_cast<int>(c.ambient_dim())) continue;
    extended.push_back(tensor_extend(c, v.shape(), v.subsets()[j]));
  }
  if (extended.empty()) return Subspace::full(v.shape().total_dim(), v.component(0).tol());
  return intersect_all(extended);
}

ReducedSpaceVector join(const ReducedSpaceVector& a, const ReducedSpaceVector& b) {
  require_compatible(a, b, "join");
  std::vector<Subspace> comps;
  comps.reserve(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) comps.push_back(sum(a.component(j), b.component(j)));
  return ReducedSpaceVector(a.shape(), a.k(), std::move(comps));
}

bool leq(const ReducedSpaceVector& a, const ReducedSpaceVector& b) {
  require_compatible(a, b, "leq");
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (!contains(b.component(j), a.component(j))) return false;
  }
  return true;
}

bool lt(const ReducedSpaceVector& a, const ReducedSpaceVector& b) {
  if (!leq(a, b)) return false;
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a.component(j).rank() < b.component(j).rank()) return true;
  }
  return false;
}

bool eq(const ReducedSpaceVector& a, const ReducedSpaceVector& b) {
  require_compatible(a, b, "eq");
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (!equals(a.component(j), b.component(j))) return false;
  }
  return true;
}

bool member_theta(const ReducedSpaceVector& v) {
  if (!v.all_nonzero()) return false;
  const Subspace pre = mpi(v);
  if (pre.is_zero()) return false;
  return eq(reduce(pre, v.shape(), v.k()), v);
}

}  // namespace rspace
