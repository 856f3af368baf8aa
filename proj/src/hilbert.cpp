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

#include "rspace/hilbert.hpp"

#include <algorithm>
#include <string>

#include "rspace/errors.hpp"

namespace rspace {

SystemShape::SystemShape(std::vector<int> dims) : dims_(std::move(dims)) {
  if (dims_.empty()) throw InvalidArgument("SystemShape: at least one particle required");
  for (int d : dims_) {
    if (d < 2) throw InvalidArgument("SystemShape: local dimension must be >= 2, got " + std::to_string(d));
    total_dim_ *= static_cast<std::size_t>(d);
  }
}

SystemShape SystemShape::uniform(int num_particles, int local_dim) {
  if (num_particles < 1) throw InvalidArgument("SystemShape: particle count must be >= 1");
  return SystemShape(std::vector<int>(static_cast<std::size_t>(num_particles), local_dim));
}

std::size_t SystemShape::subsystem_dim(std::span<const int> particles) const {
  std::size_t d = 1;
  for (int p : particles) d *= static_cast<std::size_t>(dims_.at(p));
  return d;
}

std::vector<int> SystemShape::subsystem_dims(std::span<const int> particles) const {
  std::vector<int> out;
  out.reserve(particles.size());
  for (int p : particles) out.push_back(dims_.at(p));
  return out;
}

std::vector<int> SystemShape::digits(std::size_t index) const {
  std::vector<int> out(dims_.size());
  for (std::size_t i = dims_.size(); i-- > 0;) {
    out[i] = static_cast<int>(index % dims_[i]);
    index /= dims_[i];
  }
  return out;
}

std::size_t SystemShape::index(std::span<const int> digits) const {
  if (digits.size() != dims_.size()) throw InvalidArgument("SystemShape::index: digit count mismatch");
  std::size_t idx = 0;
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    if (digits[i] < 0 || digits[i] >= dims_[i]) throw InvalidArgument("SystemShape::index: digit out of range");
    idx = idx * dims_[i] + digits[i];
  }
  return idx;
}

std::size_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::size_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
  return r;
}

std::vector<SubsetIndex> enumerate_subsets(int n, int k) {
  if (k < 1 || k > n) {
    throw InvalidArgument("enumerate_subsets: need 1 <= k <= n, got n=" + std::to_string(n) +
                          " k=" + std::to_string(k));
  }
  std::vector<SubsetIndex> out;
  out.reserve(binomial(n, k));
  std::vector<int> cur(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back({cur, out.size()});
    int i = k - 1;
    while (i >= 0 && cur[i] == n - k + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

std::vector<int> complement_particles(std::span<const int> particles, int n) {
  std::vector<bool> in(static_cast<std::size_t>(n), false);
  for (int p : particles) in.at(p) = true;
  std::vector<int> out;
  for (int i = 0; i < n; ++i) {
    if (!in[i]) out.push_back(i);
  }
  return out;
}

namespace {

void check_subset(const SystemShape& shape, std::span<const int> subset) {
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (subset[i] < 0 || subset[i] >= shape.num_particles()) {
      throw InvalidArgument("subset: particle index out of range");
    }
    if (i > 0 && subset[i] <= subset[i - 1]) {
      throw InvalidArgument("subset: particle indices must be strictly increasing");
    }
  }
}

}  // namespace

IndexEmbedding::IndexEmbedding(const SystemShape& shape, std::span<const int> subset)
    : subset_(subset.begin(), subset.end()) {
  check_subset(shape, subset);
  complement_ = complement_particles(subset_, shape.num_particles());
  subset_dim_ = shape.subsystem_dim(subset_);
  complement_dim_ = shape.subsystem_dim(complement_);

  // Place value of each particle in the full big-endian encoding.
  const int n = shape.num_particles();
  std::vector<std::size_t> stride(static_cast<std::size_t>(n));
  std::size_t s = 1;
  for (int i = n; i-- > 0;) {
    stride[i] = s;
    s *= shape.dim(i);
  }
  auto offsets = [&](const std::vector<int>& parts) {
    std::size_t d = shape.subsystem_dim(parts);
    std::vector<std::size_t> off(d, 0);
    for (std::size_t local = 0; local < d; ++local) {
      std::size_t rem = local;
      std::size_t full = 0;
      for (std::size_t j = parts.size(); j-- > 0;) {
        int dj = shape.dim(parts[j]);
        full += (rem % dj) * stride[parts[j]];
        rem /= dj;
      }
      off[local] = full;
    }
    return off;
  };
  const auto sub_off = offsets(subset_);
  const auto comp_off = offsets(complement_);

  to_full_.resize(subset_dim_ * complement_dim_);
  from_full_.resize(shape.total_dim());
  for (std::size_t a = 0; a < subset_dim_; ++a) {
    for (std::size_t c = 0; c < complement_dim_; ++c) {
      const std::size_t f = sub_off[a] + comp_off[c];
      to_full_[a * complement_dim_ + c] = f;
      from_full_[f] = a * complement_dim_ + c;
    }
  }
}

std::pair<std::size_t, std::size_t> IndexEmbedding::split(std::size_t full_index) const {
  const std::size_t packed = from_full_.at(full_index);
  return {packed / complement_dim_, packed % complement_dim_};
}

IndexEmbedding embed_permutation(const SystemShape& shape, const SubsetIndex& subset) {
  return IndexEmbedding(shape, subset.particles);
}

Matrix partial_trace(const Matrix& op, const SystemShape& shape, std::span<const int> keep) {
  const auto n = static_cast<Eigen::Index>(shape.total_dim());
  if (op.rows() != n || op.cols() != n) {
    throw InvalidArgument("partial_trace: operator is " + std::to_string(op.rows()) + "x" +
                          std::to_string(op.cols()) + ", expected " + std::to_string(n));
  }
  const double scale = std::max(1.0, op.cwiseAbs().maxCoeff());
  if ((op - op.adjoint()).cwiseAbs().maxCoeff() > 1e-9 * scale) {
    throw InvalidArgument("partial_trace: operator is not Hermitian");
  }
  const IndexEmbedding emb(shape, keep);
  const auto ds = static_cast<Eigen::Index>(emb.subset_dim());
  Matrix out = Matrix::Zero(ds, ds);
  for (std::size_t a = 0; a < emb.subset_dim(); ++a) {
    for (std::size_t b = 0; b < emb.subset_dim(); ++b) {
      Complex acc = 0;
      for (std::size_t c = 0; c < emb.complement_dim(); ++c) {
        acc += op(emb.full_index(a, c), emb.full_index(b, c));
      }
      out(a, b) = acc;
    }
  }
  return out;
}

Matrix partial_trace(const Matrix& op, const SystemShape& shape, const SubsetIndex& keep) {
  return partial_trace(op, shape, std::span<const int>(keep.particles));
}

Matrix subsystem_slices(const Matrix& vectors, const SystemShape& shape, std::span<const int> keep) {
  if (vectors.rows() != static_cast<Eigen::Index>(shape.total_dim())) {
    throw InvalidArgument("subsystem_slices: vector length does not match the system");
  }
  const IndexEmbedding emb(shape, keep);
  const auto ds = static_cast<Eigen::Index>(emb.subset_dim());
  const auto dc = static_cast<Eigen::Index>(emb.complement_dim());
  Matrix slices(ds, dc * vectors.cols());
  for (Eigen::Index i = 0; i < vectors.cols(); ++i) {
    for (Eigen::Index a = 0; a < ds; ++a) {
      for (Eigen::Index c = 0; c < dc; ++c) {
        slices(a, i * dc + c) = vectors(emb.full_index(a, c), i);
      }
    }
  }
  return slices;
}

Matrix partial_trace_of_columns(const Matrix& vectors, const SystemShape& shape, std::span<const int> keep) {
  const Matrix slices = subsystem_slices(vectors, shape, keep);
  return slices * slices.adjoint();
}

}  // namespace rspace
