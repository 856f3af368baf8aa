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

#include "rspace/semilattice.hpp"

#include <algorithm>
#include <numeric>

#include <Eigen/Eigenvalues>

#include "rspace/errors.hpp"

namespace rspace {

const char* to_string(VerdictStatus status) {
  switch (status) {
    case VerdictStatus::kCertifiedYes:
      return "CertifiedYes";
    case VerdictStatus::kNo:
      return "No";
    case VerdictStatus::kUnknown:
      return "Unknown";
  }
  return "Unknown";
}

namespace {

// mpi(v) after checking v is in Theta_k.
Subspace theta_preimage(const ReducedSpaceVector& v, const char* op) {
  if (!v.all_nonzero()) throw InvalidArgument(std::string(op) + ": element has a zero component");
  Subspace pre = mpi(v);
  if (pre.is_zero() || !eq(reduce(pre, v.shape(), v.k()), v)) {
    throw InvalidArgument(std::string(op) + ": element is not in Theta_k");
  }
  return pre;
}

// Orthogonal complement of c inside space.
Subspace complement_within(const Subspace& space, const Subspace& c) {
  Matrix coords = space.basis().adjoint() * c.basis();
  const Subspace inner = complement(Subspace::from_columns(coords, space.tol()));
  return Subspace::from_orthonormal(space.basis() * inner.basis(), space.tol());
}

struct Reduced {
  Subspace source;
  ReducedSpaceVector image;
};

}  // namespace

AtomVerdict is_atom(const ReducedSpaceVector& v, const SearchBudget& budget) {
  const Subspace pre = theta_preimage(v, "is_atom");
  AtomVerdict out;
  out.seed = budget.seed;
  if (pre.rank() == 1) {
    out.status = VerdictStatus::kCertifiedYes;
    out.rule = kRuleRankOneMpi;
    return out;
  }
  auto try_candidate = [&](const Subspace& c) {
    ++out.samples_used;
    ReducedSpaceVector w = reduce(c, v.shape(), v.k());
    if (lt(w, v)) {
      out.status = VerdictStatus::kNo;
      out.rule = "strictly-smaller-element";
      out.witness = std::move(w);
      return true;
    }
    return false;
  };
  for (const auto& c : structured_candidates(pre, v.shape(), budget)) {
    if (try_candidate(c)) return out;
  }
  Rng rng(budget.seed);
  for (std::size_t i = 0; i < budget.random_samples; ++i) {
    if (try_candidate(random_candidate(pre, rng, budget.families))) return out;
  }
  return out;
}

IrreducibleVerdict is_join_irreducible(const ReducedSpaceVector& v, const SearchBudget& budget) {
  const Subspace pre = theta_preimage(v, "is_join_irreducible");
  IrreducibleVerdict out;
  out.seed = budget.seed;
  if (pre.rank() == 1) {
    out.status = VerdictStatus::kCertifiedYes;
    out.rule = kRuleAtomIsIrreducible;
    return out;
  }
  auto found = [&](const ReducedSpaceVector& a, const ReducedSpaceVector& b) {
    out.status = VerdictStatus::kNo;
    out.rule = "strictly-smaller-pair-joins-to-element";
    out.witness = RsvPair{a, b};
  };

  // Structured candidates and their complements inside the preimage; only
  // those reducing strictly below v can take part in a witness pair.
  std::vector<Reduced> pool;
  auto consider = [&](const Subspace& c) {
    ReducedSpaceVector w = reduce(c, v.shape(), v.k());
    if (lt(w, v)) pool.push_back({c, std::move(w)});
  };
  for (const auto& c : structured_candidates(pre, v.shape(), budget)) {
    consider(c);
    consider(complement_within(pre, c));
  }
  for (std::size_t i = 0; i < pool.size(); ++i) {
    for (std::size_t j = i + 1; j < pool.size(); ++j) {
      ++out.samples_used;
      if (eq(join(pool[i].image, pool[j].image), v)) {
        found(pool[i].image, pool[j].image);
        return out;
      }
    }
  }

  Rng rng(budget.seed);
  for (std::size_t i = 0; i < budget.random_samples; ++i) {
    ++out.samples_used;
    const Subspace first = random_candidate(pre, rng, budget.families);
    const bool from_pool = !pool.empty() && rng.uniform() < 0.5;
    std::size_t pick = 0;
    std::optional<Subspace> second;
    if (from_pool) {
      pick = static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(pool.size()) - 1));
    } else {
      second = random_candidate(pre, rng, budget.families);
    }
    const ReducedSpaceVector a = reduce(first, v.shape(), v.k());
    if (!lt(a, v)) continue;
    const ReducedSpaceVector b = from_pool ? pool[pick].image : reduce(*second, v.shape(), v.k());
    if (!lt(b, v)) continue;
    if (eq(join(a, b), v)) {
      found(a, b);
      return out;
    }
  }
  return out;
}

bool validates_join_prime_witness(const ReducedSpaceVector& x, const JoinPrimeWitness& w) {
  return leq(x, join(w.first, w.second)) && !leq(x, w.first) && !leq(x, w.second);
}

namespace {

std::optional<JoinPrimeWitness> product_construction(const Vector& psi, const SystemShape& shape, int k,
                                                     const std::vector<Subspace>& local_ranges) {
  const int n = shape.num_particles();
  std::vector<Vector> u, u_perp;
  for (int i = 0; i < n; ++i) {
    u.push_back(local_ranges[i].basis().col(0));
    u_perp.push_back(complement(local_ranges[i]).basis().col(0));
  }
  // (|u_p u_q> + |u_p' u_q'>)/sqrt(2) on the pair (p, q) = (p, p+1), product elsewhere.
  auto entangle_pair = [&](int p) {
    std::vector<Vector> a = u, b = u;
    b[p] = u_perp[p];
    b[p + 1] = u_perp[p + 1];
    Vector v = (product_state(a) + product_state(b)) / std::sqrt(2.0);
    return Subspace::from_orthonormal(Matrix(v), kDefaultRankTol);
  };
  JoinPrimeWitness w{reduce(entangle_pair(0), shape, k), reduce(entangle_pair(n - 2), shape, k), "product", -1, {}};
  const ReducedSpaceVector x = reduce(Subspace::from_orthonormal(Matrix(psi)), shape, k);
  if (validates_join_prime_witness(x, w)) return w;
  return std::nullopt;
}

}  // namespace

JoinPrimeWitness join_prime_witness(const Subspace& s, const SystemShape& shape, int k) {
  if (s.rank() != 1) throw InvalidArgument("join_prime_witness: input must be spanned by a single state");
  if (s.ambient_dim() != shape.total_dim()) throw InvalidArgument("join_prime_witness: state does not live on this system");
  const int n = shape.num_particles();
  if (k < 1 || k > n) throw InvalidArgument("join_prime_witness: locality out of range");
  const Vector psi = s.basis().col(0);

  std::vector<Subspace> local_ranges;
  std::vector<Matrix> local_rdms;
  bool product = true;
  for (int i = 0; i < n; ++i) {
    const int one[] = {i};
    local_rdms.push_back(partial_trace_of_columns(s.basis(), shape, one));
    local_ranges.push_back(reduced_range(s.basis(), shape, one, s.tol()));
    if (local_ranges.back().rank() > 1) product = false;
  }

  if (product) {
    if (n < 3) throw Unsupported("join_prime_witness: product construction needs at least 3 particles");
    if (auto w = product_construction(psi, shape, k, local_ranges)) return *w;
    throw SearchExhausted("join_prime_witness: product construction does not validate for k=" + std::to_string(k));
  }

  const ReducedSpaceVector x = reduce(s, shape, k);
  for (int alpha = 0; alpha < n; ++alpha) {
    if (local_ranges[alpha].rank() < 2) continue;
    const int one[] = {alpha};
    const auto rest = complement_particles(one, n);
    const Subspace rest_range = reduced_range(s.basis(), shape, rest, s.tol());

    // Eigenvectors of rho_alpha spanning its range, largest eigenvalue first.
    Eigen::SelfAdjointEigenSolver<Matrix> es(local_rdms[alpha]);
    const int r = local_ranges[alpha].rank();
    const auto d = es.eigenvectors().cols();
    Matrix vecs(es.eigenvectors().rows(), r);
    for (int i = 0; i < r; ++i) vecs.col(i) = es.eigenvectors().col(d - 1 - i);

    for (unsigned mask = 1; mask + 1 < (1u << r); ++mask) {
      std::vector<int> first_idx, second_idx;
      for (int i = 0; i < r; ++i) ((mask >> i) & 1u ? first_idx : second_idx).push_back(i);
      auto part = [&](const std::vector<int>& idx) {
        Matrix cols(vecs.rows(), static_cast<Eigen::Index>(idx.size()));
        for (std::size_t j = 0; j < idx.size(); ++j) cols.col(static_cast<Eigen::Index>(j)) = vecs.col(idx[j]);
        const Subspace local = Subspace::from_orthonormal(cols, s.tol());
        return reduce(tensor_product(local, rest_range, shape, one), shape, k);
      };
      JoinPrimeWitness w{part(first_idx), part(second_idx), "entangled", alpha, first_idx};
      if (validates_join_prime_witness(x, w)) return w;
    }
  }
  throw SearchExhausted("join_prime_witness: no particle/spectral split validates");
}

namespace {

void decompose_into(const ReducedSpaceVector& v, const SearchBudget& budget, std::uint64_t& counter,
                    std::vector<DecompositionPart>& out) {
  SearchBudget local = budget;
  local.seed = Rng::derive_seed(budget.seed, counter++);
  const auto verdict = is_join_irreducible(v, local);
  if (verdict.status == VerdictStatus::kNo) {
    decompose_into(verdict.witness->first, budget, counter, out);
    decompose_into(verdict.witness->second, budget, counter, out);
    return;
  }
  out.push_back({v, verdict.status, verdict.rule});
}

}  // namespace

std::vector<DecompositionPart> decompose_irreducibles(const ReducedSpaceVector& v, const SearchBudget& budget) {
  std::uint64_t counter = 0;
  std::vector<DecompositionPart> parts;
  decompose_into(v, budget, counter, parts);
  // Drop repeats; the join is unchanged by duplicates.
  std::vector<DecompositionPart> unique;
  for (auto& p : parts) {
    const bool dup = std::any_of(unique.begin(), unique.end(),
                                 [&](const DecompositionPart& q) { return eq(q.element, p.element); });
    if (!dup) unique.push_back(std::move(p));
  }
  return unique;
}

}  // namespace rspace
