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

#include <gtest/gtest.h>

#include <vector>

#include "rspace/errors.hpp"
#include "rspace/fixtures.hpp"
#include "rspace/oracle.hpp"
#include "rspace/random.hpp"

namespace rspace {
namespace {

using fixtures::ket;
using fixtures::kets;
using fixtures::span;

const std::vector<int> kQ2{2, 2};
const std::vector<int> kQ3{2, 2, 2};
const double kH = 1.0 / std::sqrt(2.0);

Matrix pauli_z() {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = 1.0;
  m(1, 1) = -1.0;
  return m;
}

Matrix pauli_x() {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 1) = 1.0;
  m(1, 0) = 1.0;
  return m;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  }
  return out;
}

SearchBudget budget(std::size_t samples, std::uint64_t seed = 0) {
  SearchBudget b;
  b.random_samples = samples;
  b.seed = seed;
  return b;
}

ReducedSpaceVector red3(const Subspace& s) { return reduce(s, fixtures::three_qubits(), 2); }

TEST(LocalHamiltonian, RejectsZeroKernel) {
  const Subspace s00 = span({ket(kQ2, "00")});
  EXPECT_THROW(LocalHamiltonian(fixtures::three_qubits(), 2, {s00, Subspace::zero(4), s00}), InvalidArgument);
}

TEST(LocalHamiltonian, TermsAreProjectors) {
  const auto h = from_rsv(red3(span({fixtures::w_state()})));
  for (std::size_t j = 0; j < h.size(); ++j) {
    const Matrix p = h.term_projector(j);
    EXPECT_LT((p * p - p).norm(), 1e-10);
  }
}

TEST(FromRsv, ZeroKetKernels) {
  const auto h = from_rsv(red3(span({ket(kQ3, "000")})));
  for (const auto& k : h.kernels()) EXPECT_TRUE(equals(k, span({ket(kQ2, "00")})));
  EXPECT_TRUE(equals(ground_space(h), span({ket(kQ3, "000")})));
}

TEST(FromRsv, WStateGroundSpace) {
  const auto h = from_rsv(red3(span({fixtures::w_state()})));
  EXPECT_TRUE(equals(ground_space(h), span({fixtures::w_state(), ket(kQ3, "000")})));
}

TEST(FromRsv, FullComponentsGiveFullGroundSpace) {
  const auto h = from_rsv(fixtures::all_components(fixtures::three_qubits(), 2, Subspace::full(4)));
  EXPECT_LT(h.dense_matrix().norm(), 1e-14);
  EXPECT_EQ(ground_space(h).rank(), 8);
}

TEST(GroundSpace, NonMemberKernelVector) {
  const auto v = fixtures::non_member_kernel_vector();
  EXPECT_TRUE(equals(ground_space(from_rsv(v)), span({ket(kQ3, "000")})));
  EXPECT_TRUE(eq(red3(span({ket(kQ3, "000")})), fixtures::all_components(fixtures::three_qubits(), 2,
                                                                         span({ket(kQ2, "00")}))));
}

TEST(IsFrustrationFree, ZzChain) {
  const Matrix zz = kron(pauli_z(), pauli_z());
  const std::vector<LocalTerm> terms{{{0, 1}, zz}, {{1, 2}, zz}};
  const auto r = is_frustration_free(fixtures::three_qubits(), 2, terms);
  EXPECT_TRUE(r.frustration_free);
  ASSERT_TRUE(r.hamiltonian.has_value());
  const Subspace expected = span({ket(kQ3, "010"), ket(kQ3, "101")});
  EXPECT_TRUE(equals(r.ground, expected));
  const auto brute = oracle::brute_ground(fixtures::three_qubits(), terms);
  EXPECT_NEAR(brute.energy, -2.0, 1e-12);
  EXPECT_TRUE(equals(brute.space, expected));
}

TEST(IsFrustrationFree, ZzPlusXxSharesTheSinglet) {
  // Both terms are minimized by the singlet, so this pair is not frustrated.
  const std::vector<LocalTerm> terms{{{0, 1}, kron(pauli_z(), pauli_z())}, {{0, 1}, kron(pauli_x(), pauli_x())}};
  const SystemShape q2 = SystemShape::uniform(2, 2);
  const auto r = is_frustration_free(q2, 2, terms);
  EXPECT_TRUE(r.frustration_free);
  EXPECT_TRUE(equals(r.ground, span({kets(kQ2, {{"01", kH}, {"10", -kH}})})));
  EXPECT_TRUE(oracle::brute_frustration_free(q2, terms));
}

TEST(IsFrustrationFree, ZzPlusLocalXIsFrustrated) {
  const std::vector<LocalTerm> terms{{{0, 1}, kron(pauli_z(), pauli_z())}, {{0}, pauli_x()}};
  const SystemShape q2 = SystemShape::uniform(2, 2);
  const auto r = is_frustration_free(q2, 2, terms);
  EXPECT_FALSE(r.frustration_free);
  EXPECT_FALSE(r.hamiltonian.has_value());
  EXPECT_TRUE(r.ground.is_zero());
  const auto brute = oracle::brute_ground(q2, terms);
  EXPECT_NEAR(brute.energy, -std::sqrt(2.0), 1e-12);
  EXPECT_FALSE(oracle::brute_frustration_free(q2, terms));
}

TEST(IsFrustrationFree, WProjectorTerms) {
  const auto h = from_rsv(red3(span({fixtures::w_state()})));
  std::vector<LocalTerm> terms;
  for (std::size_t j = 0; j < h.size(); ++j) terms.push_back({h.subsets()[j].particles, h.term_projector(j)});
  const auto r = is_frustration_free(fixtures::three_qubits(), 2, terms);
  EXPECT_TRUE(r.frustration_free);
  EXPECT_TRUE(equals(r.ground, ground_space(h)));
}

TEST(IsFrustrationFree, RejectsNonHermitianAndBadSubsets) {
  Matrix m = Matrix::Zero(4, 4);
  m(0, 1) = 1.0;
  EXPECT_THROW(is_frustration_free(fixtures::three_qubits(), 2, {{{0, 1}, m}}), InvalidArgument);
  EXPECT_THROW(is_frustration_free(fixtures::three_qubits(), 2, {{{0, 1, 2}, Matrix::Identity(8, 8)}}),
               InvalidArgument);
  EXPECT_THROW(is_frustration_free(fixtures::three_qubits(), 2, {{{1, 0}, Matrix::Identity(4, 4)}}), InvalidArgument);
}

TEST(Meet, Examples) {
  const auto hw = from_rsv(red3(span({fixtures::w_state()})));
  const auto h0 = from_rsv(red3(span({ket(kQ3, "000")})));
  const auto m = meet(hw, h0);
  for (const auto& k : m.kernels()) EXPECT_TRUE(equals(k, span({ket(kQ2, "00")})));
  const auto same = meet(hw, hw);
  for (std::size_t j = 0; j < hw.size(); ++j) EXPECT_TRUE(equals(same.kernel(j), hw.kernel(j)));
}

TEST(Meet, UndefinedWhenKernelsAreDisjoint) {
  const auto a = from_rsv(red3(span({ket(kQ3, "000")})));
  const auto b = from_rsv(red3(span({ket(kQ3, "111")})));
  EXPECT_THROW(meet(a, b), MeetUndefined);
}

TEST(IsGroundSpace, Examples) {
  const SystemShape q3 = fixtures::three_qubits();
  EXPECT_TRUE(is_ground_space(span({fixtures::w_state(), ket(kQ3, "000")}), q3, 2));
  EXPECT_FALSE(is_ground_space(span({fixtures::w_state()}), q3, 2));
  EXPECT_TRUE(is_ground_space(span({ket(kQ3, "000")}), q3, 2));
}

TEST(IsMinimalGroundSpace, Examples) {
  const SystemShape q3 = fixtures::three_qubits();
  EXPECT_EQ(is_minimal_ground_space(span({ket(kQ3, "000")}), q3, 2, budget(10)).status,
            VerdictStatus::kCertifiedYes);
  const auto v = is_minimal_ground_space(span({fixtures::w_state(), ket(kQ3, "000")}), q3, 2, budget(50));
  ASSERT_EQ(v.status, VerdictStatus::kNo);
  EXPECT_TRUE(equals(*v.witness, span({ket(kQ3, "000")})));
  EXPECT_TRUE(is_ground_space(*v.witness, q3, 2));
  EXPECT_THROW(is_minimal_ground_space(span({fixtures::w_state()}), q3, 2, budget(10)), InvalidArgument);
}

TEST(IsMinimalGroundSpace, ToricRandomSamplingFindsNothing) {
  const auto tc = fixtures::toric_code_l2();
  const Subspace gs = is_frustration_free(tc.shape, 4, tc.terms).ground;
  SearchBudget b = budget(50);
  b.families.basis_states = false;
  b.families.space_basis = false;
  b.families.product_states = false;
  EXPECT_EQ(is_minimal_ground_space(gs, tc.shape, 4, b).status, VerdictStatus::kUnknown);
}

TEST(IsIrreducibleGroundSpace, Examples) {
  const SystemShape q3 = fixtures::three_qubits();
  const Subspace ghz = span({ket(kQ3, "000"), ket(kQ3, "111")});
  const auto v = is_irreducible_ground_space(ghz, q3, 2, budget(20));
  ASSERT_EQ(v.status, VerdictStatus::kNo);
  const auto& [a, b] = *v.witness;
  EXPECT_TRUE(is_ground_space(a, q3, 2));
  EXPECT_TRUE(is_ground_space(b, q3, 2));
  EXPECT_TRUE(equals(sum(a, b), ghz));
  EXPECT_EQ(a.rank() + b.rank(), 2);

  const auto w = is_irreducible_ground_space(span({fixtures::w_state(), ket(kQ3, "000")}), q3, 2, budget(200));
  EXPECT_EQ(w.status, VerdictStatus::kUnknown);
  EXPECT_EQ(is_irreducible_ground_space(span({ket(kQ3, "101")}), q3, 2, budget(5)).status,
            VerdictStatus::kCertifiedYes);
}

TEST(PairPartitions, Counts) {
  // Telephone numbers: involutions of n elements.
  EXPECT_EQ(pair_partitions(3).size(), 4u);
  EXPECT_EQ(pair_partitions(4).size(), 10u);
  EXPECT_EQ(pair_partitions(5).size(), 26u);
  EXPECT_EQ(pair_partitions(4).front().size(), 4u);
}

TEST(Qubit2ProductSearch, WStateHamiltonianFindsZeroKet) {
  const auto h = from_rsv(red3(span({fixtures::w_state()})));
  const auto r = qubit2_product_ground_search(h, budget(0));
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->blocks.size(), 3u);
  EXPECT_GT(std::abs(r->state.dot(ket(kQ3, "000"))), 1 - 1e-8);
  EXPECT_LT(r->energy, 1e-8);
}

TEST(Qubit2ProductSearch, BellTimesZero) {
  const Vector psi = kets(kQ3, {{"000", kH}, {"110", kH}});
  const auto h = from_rsv(red3(span({psi})));
  ASSERT_TRUE(equals(ground_space(h), span({psi})));
  const auto r = qubit2_product_ground_search(h, budget(0));
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->blocks, (std::vector<std::vector<int>>{{0, 1}, {2}}));
  EXPECT_GT(std::abs(r->state.dot(psi)), 1 - 1e-8);
}

TEST(Qubit2ProductSearch, RejectsQutritsAndFrustration) {
  const SystemShape s({2, 3, 2});
  const auto h = from_rsv(reduce(span({ket({2, 3, 2}, "010")}), s, 2));
  EXPECT_THROW(qubit2_product_ground_search(h, budget(0)), Unsupported);
  const auto k1 = from_rsv(reduce(span({ket(kQ3, "010")}), fixtures::three_qubits(), 1));
  EXPECT_THROW(qubit2_product_ground_search(k1, budget(0)), Unsupported);
}

TEST(Qubit2ProductSearch, RandomFourQubitHamiltonians) {
  Rng rng(41);
  const SystemShape q4 = SystemShape::uniform(4, 2);
  for (int t = 0; t < 5; ++t) {
    const auto h = from_rsv(reduce(rng.random_subspace(16, rng.uniform_int(1, 3)), q4, 2));
    const auto r = qubit2_product_ground_search(h, budget(0, t));
    ASSERT_TRUE(r.has_value()) << t;
    EXPECT_LT(r->energy, 1e-8);
    EXPECT_LT(ground_space(h).residual(r->state).norm(), 1e-4);
  }
}

class FfhamProperties : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(FfhamProperties, DualityAndSubsemilattice) {
  Rng rng(GetParam());
  const SystemShape shape({2, 3, 2});
  for (int t = 0; t < 5; ++t) {
    const Subspace s = rng.random_subspace(12, rng.uniform_int(1, 3));
    const auto v = reduce(s, shape, 2);
    const Subspace g = ground_space(from_rsv(v));
    EXPECT_TRUE(equals(g, mpi(v)));
    if (g.rank() >= 2) {
      const auto a = reduce(rng.random_subspace_of(g, 1), shape, 2);
      const auto b = reduce(rng.random_subspace_of(g, 1), shape, 2);
      EXPECT_TRUE(leq(join(a, b), reduce(g, shape, 2)));
    }
  }
}

TEST_P(FfhamProperties, MatchesBruteForce) {
  Rng rng(GetParam() + 50);
  const SystemShape shape = SystemShape::uniform(3, 2);
  for (int t = 0; t < 5; ++t) {
    std::vector<LocalTerm> terms;
    for (const auto& sub : enumerate_subsets(3, 2)) {
      if (rng.uniform() < 0.5) continue;
      // Low-rank positive terms keep frustration-free and frustrated cases
      // both common.
      const Subspace ker = rng.random_subspace(4, rng.uniform_int(1, 3));
      terms.push_back({sub.particles, Matrix::Identity(4, 4) - ker.projector()});
    }
    if (terms.empty()) continue;
    EXPECT_EQ(is_frustration_free(shape, 2, terms).frustration_free, oracle::brute_frustration_free(shape, terms));
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, FfhamProperties, ::testing::Values(1u, 2u, 3u));

}  // namespace
}  // namespace rspace
