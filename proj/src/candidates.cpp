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

#include "rspace/candidates.hpp"

#include <Eigen/Eigenvalues>

#include "rspace/errors.hpp"

namespace rspace {

namespace {

bool is_duplicate(const std::vector<Subspace>& seen, const Subspace& c) {
  for (const auto& s : seen) {
    if (equals(s, c)) return true;
  }
  return false;
}

}  // namespace

Vector product_state(const std::vector<Vector>& factors) {
  Vector out = Vector::Ones(1);
  for (const auto& f : factors) {
    Vector next(out.size() * f.size());
    for (Eigen::Index i = 0; i < out.size(); ++i) next.segment(i * f.size(), f.size()) = out(i) * f;
    out = std::move(next);
  }
  return out;
}

std::optional<Vector> find_product_state_in(const Subspace& space, const SystemShape& shape, Rng& rng,
                                            int starts, double accept) {
  if (space.is_zero()) return std::nullopt;
  const int n = shape.num_particles();
  std::vector<IndexEmbedding> site;
  site.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const int one[] = {i};
    site.emplace_back(shape, one);
  }
  const Matrix& b = space.basis();

  for (int start = 0; start < starts; ++start) {
    std::vector<Vector> u;
    for (int i = 0; i < n; ++i) u.push_back(rng.haar_state(static_cast<std::size_t>(shape.dim(i))));
    double best_residual = 2.0;
    for (int sweep = 0; sweep < 400; ++sweep) {
      for (int i = 0; i < n; ++i) {
        const auto& emb = site[i];
        // Amplitudes of the other particles' factors on the complement index.
        std::vector<Vector> others;
        for (int j = 0; j < n; ++j) {
          if (j != i) others.push_back(u[j]);
        }
        const Vector rest = product_state(others);
        Matrix c = Matrix::Zero(shape.dim(i), b.cols());
        for (Eigen::Index a = 0; a < shape.dim(i); ++a) {
          for (std::size_t x = 0; x < emb.complement_dim(); ++x) {
            c.row(a) += std::conj(rest(static_cast<Eigen::Index>(x))) *
                        b.row(static_cast<Eigen::Index>(emb.full_index(static_cast<std::size_t>(a), x)));
          }
        }
        Eigen::SelfAdjointEigenSolver<Matrix> es(c * c.adjoint());
        u[i] = es.eigenvectors().col(es.eigenvalues().size() - 1);
      }
      const Vector phi = product_state(u);
      const double residual = space.residual(phi).norm();
      if (residual < 1e-14 || residual > best_residual - 1e-16) {
        best_residual = std::min(best_residual, residual);
        break;
      }
      best_residual = residual;
    }
    if (best_residual < accept) {
      Vector phi = space.project(product_state(u));
      return Vector(phi / phi.norm());
    }
  }
  return std::nullopt;
}

std::vector<Subspace> structured_candidates(const Subspace& space, const SystemShape& shape,
                                            const SearchBudget& budget) {
  std::vector<Subspace> out;
  const double tol = space.tol();
  auto push = [&](const Vector& v) {
    Subspace c = Subspace::from_orthonormal(Matrix(v / v.norm()), tol);
    if (!is_duplicate(out, c)) out.push_back(std::move(c));
  };
  if (budget.families.basis_states) {
    for (std::size_t i = 0; i < space.ambient_dim(); ++i) {
      const double weight = space.basis().row(static_cast<Eigen::Index>(i)).squaredNorm();
      if (weight > 1.0 - 1e-12) push(basis_ket(space.ambient_dim(), i));
    }
  }
  if (budget.families.space_basis) {
    for (int j = 0; j < space.rank(); ++j) push(space.basis().col(j));
  }
  if (budget.families.product_states && budget.product_starts > 0) {
    Rng rng(Rng::derive_seed(budget.seed, 0x70726f64ULL));
    for (int s = 0; s < budget.product_starts; ++s) {
      if (auto phi = find_product_state_in(space, shape, rng, 1)) push(*phi);
    }
  }
  return out;
}

Subspace random_candidate(const Subspace& space, Rng& rng, const CandidateFamilies& families) {
  if (space.rank() < 2) throw InvalidArgument("random_candidate: space must have rank >= 2");
  const bool states = families.random_states;
  const bool subspaces = families.random_subspaces && space.rank() > 2;
  int rank = 1;
  if (subspaces && (!states || rng.uniform() < 0.5)) rank = rng.uniform_int(2, space.rank() - 1);
  return rng.random_subspace_of(space, rank);
}

}  // namespace rspace
