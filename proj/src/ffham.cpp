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

#include "rspace/ffham.hpp"

#include <algorithm>
#include <string>

#include <Eigen/Eigenvalues>

#include "rspace/errors.hpp"

namespace rspace {

LocalHamiltonian::LocalHamiltonian(SystemShape shape, int k, std::vector<Subspace> kernels)
    : shape_(std::move(shape)), k_(k), subsets_(enumerate_subsets(shape_.num_particles(), k)),
      kernels_(std::move(kernels)) {
  if (kernels_.size() != subsets_.size()) {
    throw InvalidArgument("LocalHamiltonian: expected " + std::to_string(subsets_.size()) + " kernels, got " +
                          std::to_string(kernels_.size()));
  }
  for (std::size_t j = 0; j < kernels_.size(); ++j) {
    if (kernels_[j].ambient_dim() != shape_.subsystem_dim(subsets_[j].particles)) {
      throw InvalidArgument("LocalHamiltonian: kernel " + std::to_string(j) + " has the wrong dimension");
    }
    if (kernels_[j].is_zero()) {
      throw InvalidArgument("LocalHamiltonian: kernel " + std::to_string(j) +
                            " is zero (the term would have no ground state)");
    }
  }
}

Matrix LocalHamiltonian::term_projector(std::size_t j) const {
  const auto& ker = kernel(j);
  const auto d = static_cast<Eigen::Index>(ker.ambient_dim());
  return Matrix::Identity(d, d) - ker.projector();
}

Matrix LocalHamiltonian::dense_matrix() const {
  const auto d = static_cast<Eigen::Index>(shape_.total_dim());
  Matrix h = Matrix::Zero(d, d);
  for (std::size_t j = 0; j < size(); ++j) {
    if (kernel(j).rank() == static_cast<int>(kernel(j).ambient_dim())) continue;
    const Subspace ext = tensor_extend(kernel(j), shape_, subsets_[j]);
    h.noalias() -= ext.basis() * ext.basis().adjoint();
    h.diagonal().array() += 1.0;
  }
  return h;
}

ReducedSpaceVector LocalHamiltonian::kernel_vector() const { return ReducedSpaceVector(shape_, k_, kernels_); }

LocalHamiltonian from_rsv(const ReducedSpaceVector& v) {
  return LocalHamiltonian(v.shape(), v.k(), v.components());
}

Subspace ground_space(const LocalHamiltonian& h) { return mpi(h.kernel_vector()); }

namespace {

void check_term(const SystemShape& shape, const LocalTerm& t) {
  if (t.subset.empty()) throw InvalidArgument("term: empty subset");
  for (std::size_t i = 0; i < t.subset.size(); ++i) {
    if (t.subset[i] < 0 || t.subset[i] >= shape.num_particles()) throw InvalidArgument("term: particle out of range");
    if (i > 0 && t.subset[i] <= t.subset[i - 1]) throw InvalidArgument("term: subset must be strictly increasing");
  }
  const auto d = static_cast<Eigen::Index>(shape.subsystem_dim(t.subset));
  if (t.matrix.rows() != d || t.matrix.cols() != d) {
    throw InvalidArgument("term: matrix dimension does not match its subset");
  }
  if ((t.matrix - t.matrix.adjoint()).cwiseAbs().maxCoeff() > 1e-9) {
    throw InvalidArgument("term: matrix is not Hermitian");
  }
}

// Ground eigenspace of a Hermitian term.
Subspace term_kernel(const Matrix& m, double tol) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(m, Eigen::EigenvaluesOnly);
  const double lo = es.eigenvalues()(0);
  return Subspace::eigenspace(m, lo - 1.0, lo + kGroundEigenTol, tol);
}

}  // namespace

FrustrationFreeResult is_frustration_free(const SystemShape& shape, int k, const std::vector<LocalTerm>& terms) {
  const auto subsets = enumerate_subsets(shape.num_particles(), k);
  std::vector<Subspace> kernels;
  for (const auto& s : subsets) kernels.push_back(Subspace::full(shape.subsystem_dim(s.particles)));

  for (const auto& t : terms) {
    check_term(shape, t);
    if (static_cast<int>(t.subset.size()) > k) {
      throw InvalidArgument("term: acts on more than k particles");
    }
    // First k-subset (lexicographic) containing the term's particles.
    auto host = std::find_if(subsets.begin(), subsets.end(), [&](const SubsetIndex& s) {
      return std::includes(s.particles.begin(), s.particles.end(), t.subset.begin(), t.subset.end());
    });
    Subspace ker = term_kernel(t.matrix, kDefaultRankTol);
    if (t.subset.size() < host->particles.size()) {
      std::vector<int> positions;
      for (int p : t.subset) {
        positions.push_back(static_cast<int>(
            std::find(host->particles.begin(), host->particles.end(), p) - host->particles.begin()));
      }
      ker = tensor_extend(ker, SystemShape(shape.subsystem_dims(host->particles)), positions);
    }
    kernels[host->rank] = intersect(kernels[host->rank], ker);
  }

  FrustrationFreeResult out;
  for (const auto& ker : kernels) {
    if (ker.is_zero()) {
      out.ground = Subspace::zero(shape.total_dim());
      return out;
    }
  }
  out.hamiltonian.emplace(shape, k, std::move(kernels));
  out.ground = ground_space(*out.hamiltonian);
  out.frustration_free = !out.ground.is_zero();
  return out;
}

LocalHamiltonian meet(const LocalHamiltonian& a, const LocalHamiltonian& b) {
  if (!(a.shape() == b.shape()) || a.k() != b.k()) throw InvalidArgument("meet: operands differ in shape or locality");
  std::vector<Subspace> kernels;
  for (std::size_t j = 0; j < a.size(); ++j) {
    Subspace c = intersect(a.kernel(j), b.kernel(j));
    if (c.is_zero()) {
      throw MeetUndefined("meet: kernels on subset " + std::to_string(j) + " have zero intersection");
    }
    kernels.push_back(std::move(c));
  }
  return LocalHamiltonian(a.shape(), a.k(), std::move(kernels));
}

bool is_ground_space(const Subspace& s, const SystemShape& shape, int k) {
  if (s.is_zero()) return false;
  return equals(mpi(reduce(s, shape, k)), s);
}

namespace {

void require_ground_space(const Subspace& s, const SystemShape& shape, int k, const char* op) {
  if (s.ambient_dim() != shape.total_dim()) throw InvalidArgument(std::string(op) + ": subspace does not live on this system");
  if (!is_ground_space(s, shape, k)) {
    throw InvalidArgument(std::string(op) + ": subspace is not the ground space of a k-local FF Hamiltonian");
  }
}

// Smallest ground space containing c.
Subspace closure(const Subspace& c, const SystemShape& shape, int k) { return mpi(reduce(c, shape, k)); }

}  // namespace

Verdict<Subspace> is_minimal_ground_space(const Subspace& s, const SystemShape& shape, int k,
                                          const SearchBudget& budget) {
  require_ground_space(s, shape, k, "is_minimal_ground_space");
  Verdict<Subspace> out;
  out.seed = budget.seed;
  if (s.rank() == 1) {
    out.status = VerdictStatus::kCertifiedYes;
    out.rule = "rank-one-space";
    return out;
  }
  auto try_candidate = [&](const Subspace& c) {
    ++out.samples_used;
    Subspace g = closure(c, shape, k);
    if (g.rank() < s.rank() && is_ground_space(g, shape, k)) {
      out.status = VerdictStatus::kNo;
      out.rule = "proper-ground-subspace";
      out.witness = std::move(g);
      return true;
    }
    return false;
  };
  for (const auto& c : structured_candidates(s, shape, budget)) {
    if (try_candidate(c)) return out;
  }
  Rng rng(budget.seed);
  for (std::size_t i = 0; i < budget.random_samples; ++i) {
    if (try_candidate(random_candidate(s, rng, budget.families))) return out;
  }
  return out;
}

Verdict<SubspacePair> is_irreducible_ground_space(const Subspace& s, const SystemShape& shape, int k,
                                                  const SearchBudget& budget) {
  require_ground_space(s, shape, k, "is_irreducible_ground_space");
  Verdict<SubspacePair> out;
  out.seed = budget.seed;
  if (s.rank() == 1) {
    out.status = VerdictStatus::kCertifiedYes;
    out.rule = "rank-one-space";
    return out;
  }
  std::vector<Subspace> pool;  // proper ground subspaces found so far
  // Adds the closure of c to the pool and checks it against earlier entries.
  auto add = [&](const Subspace& c) {
    ++out.samples_used;
    Subspace g = closure(c, shape, k);
    if (g.rank() >= s.rank() || !is_ground_space(g, shape, k)) return false;
    for (const auto& p : pool) {
      if (equals(p, g)) return false;
    }
    for (const auto& p : pool) {
      if (equals(sum(p, g), s)) {
        out.status = VerdictStatus::kNo;
        out.rule = "proper-ground-subspaces-sum-to-space";
        out.witness = SubspacePair{p, g};
        return true;
      }
    }
    pool.push_back(std::move(g));
    return false;
  };
  for (const auto& c : structured_candidates(s, shape, budget)) {
    if (add(c)) return out;
  }
  Rng rng(budget.seed);
  for (std::size_t i = 0; i < budget.random_samples; ++i) {
    if (add(random_candidate(s, rng, budget.families))) return out;
  }
  return out;
}

std::vector<std::vector<std::vector<int>>> pair_partitions(int n) {
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<std::vector<int>> cur;
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  auto rec = [&](auto&& self) -> void {
    int first = 0;
    while (first < n && used[first]) ++first;
    if (first == n) {
      out.push_back(cur);
      return;
    }
    used[first] = true;
    cur.push_back({first});
    self(self);
    cur.pop_back();
    for (int j = first + 1; j < n; ++j) {
      if (used[j]) continue;
      used[j] = true;
      cur.push_back({first, j});
      self(self);
      cur.pop_back();
      used[j] = false;
    }
    used[first] = false;
  };
  rec(rec);
  return out;
}

Vector block_product_vector(const SystemShape& shape, const std::vector<std::vector<int>>& blocks,
                            const std::vector<Vector>& block_states) {
  Vector out(static_cast<Eigen::Index>(shape.total_dim()));
  for (std::size_t idx = 0; idx < shape.total_dim(); ++idx) {
    const auto digits = shape.digits(idx);
    Complex amp = 1.0;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      std::size_t local = 0;
      for (int p : blocks[b]) local = local * static_cast<std::size_t>(shape.dim(p)) + static_cast<std::size_t>(digits[p]);
      amp *= block_states[b](static_cast<Eigen::Index>(local));
    }
    out(static_cast<Eigen::Index>(idx)) = amp;
  }
  return out;
}

namespace {
constexpr std::size_t kMaxBasisStarts = 64;
}  // namespace

std::optional<BlockProductState> qubit2_product_ground_search(const LocalHamiltonian& h, const SearchBudget& budget) {
  const auto& shape = h.shape();
  for (int d : shape.dims()) {
    if (d != 2) throw Unsupported("qubit2_product_ground_search: all particles must be qubits");
  }
  if (h.k() != 2) throw Unsupported("qubit2_product_ground_search: locality must be 2");
  if (shape.total_dim() > 1024) throw Unsupported("qubit2_product_ground_search: at most 10 qubits");
  if (ground_space(h).is_zero()) throw InvalidArgument("qubit2_product_ground_search: Hamiltonian is frustrated");

  const Matrix hm = h.dense_matrix();
  const auto partitions = pair_partitions(shape.num_particles());
  const int starts = std::max(1, budget.product_starts);

  for (std::size_t pi = 0; pi < partitions.size(); ++pi) {
    const auto& blocks = partitions[pi];
    // Computational-basis starts first (when there are few of them): ground
    // states such as |0...0> can sit at the bottom of quartic valleys where
    // alternating minimization from a random start stalls.
    std::size_t basis_starts = 1;
    for (const auto& b : blocks) basis_starts *= std::size_t{1} << b.size();
    if (basis_starts > kMaxBasisStarts) basis_starts = 0;
    const std::size_t total_starts = basis_starts + static_cast<std::size_t>(starts);
    for (std::size_t start = 0; start < total_starts; ++start) {
      std::vector<Vector> states;
      if (start < basis_starts) {
        std::size_t code = start;
        for (const auto& b : blocks) {
          const std::size_t db = std::size_t{1} << b.size();
          states.push_back(basis_ket(db, code % db));
          code /= db;
        }
      } else {
        Rng rng(Rng::derive_seed(budget.seed, pi * 1024 + (start - basis_starts)));
        for (const auto& b : blocks) states.push_back(rng.haar_state(std::size_t{1} << b.size()));
      }
      double energy = 1e300;
      for (int sweep = 0; sweep < 200; ++sweep) {
        for (std::size_t b = 0; b < blocks.size(); ++b) {
          const auto db = states[b].size();
          Matrix phis(hm.rows(), db);
          for (Eigen::Index a = 0; a < db; ++a) {
            std::vector<Vector> trial = states;
            trial[b] = Vector::Zero(db);
            trial[b](a) = 1.0;
            phis.col(a) = block_product_vector(shape, blocks, trial);
          }
          // Other blocks are normalized, so the effective problem is a
          // plain Hermitian eigenproblem in the block's basis.
          const Matrix eff = phis.adjoint() * hm * phis;
          Eigen::SelfAdjointEigenSolver<Matrix> es((eff + eff.adjoint()) / 2.0);
          states[b] = es.eigenvectors().col(0);
        }
        const Vector psi = block_product_vector(shape, blocks, states);
        const double e = std::real(psi.dot(hm * psi));
        if (e < 1e-14 || e > energy - 1e-15) {
          energy = std::min(energy, e);
          break;
        }
        energy = e;
      }
      if (energy < 1e-8) {
        BlockProductState out;
        out.blocks = blocks;
        out.block_states = states;
        out.state = block_product_vector(shape, blocks, states);
        out.energy = energy;
        out.partition_index = pi;
        return out;
      }
    }
  }
  return std::nullopt;
}

}  // namespace rspace
