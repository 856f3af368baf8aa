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

#include <gtest/gtest.h>

#include <vector>

#include "rspace/errors.hpp"
#include "rspace/fixtures.hpp"
#include "rspace/random.hpp"

namespace rspace {
namespace {

using fixtures::ket;
using fixtures::kets;
using fixtures::span;

const std::vector<int> kQ3{2, 2, 2};
const double kH = 1.0 / std::sqrt(2.0);

ReducedSpaceVector red3(const Subspace& s) { return reduce(s, fixtures::three_qubits(), 2); }

SearchBudget budget(std::size_t samples, std::uint64_t seed = 0) {
  SearchBudget b;
  b.random_samples = samples;
  b.seed = seed;
  return b;
}

TEST(IsAtom, ProductKetIsCertified) {
  const auto v = is_atom(red3(span({ket(kQ3, "001")})), budget(100));
  EXPECT_EQ(v.status, VerdictStatus::kCertifiedYes);
  EXPECT_EQ(v.rule, kRuleRankOneMpi);
  EXPECT_FALSE(v.witness.has_value());
}

TEST(IsAtom, WStateHasZeroKetBelow) {
  const auto x = red3(span({fixtures::w_state()}));
  const auto v = is_atom(x, budget(100));
  ASSERT_EQ(v.status, VerdictStatus::kNo);
  ASSERT_TRUE(v.witness.has_value());
  EXPECT_TRUE(eq(*v.witness, red3(span({ket(kQ3, "000")}))));
  EXPECT_TRUE(lt(*v.witness, x));
  EXPECT_TRUE(member_theta(*v.witness));
}

TEST(IsAtom, GhzPairHasZeroKetBelow) {
  const auto v = is_atom(red3(span({ket(kQ3, "000"), ket(kQ3, "111")})), budget(100));
  ASSERT_EQ(v.status, VerdictStatus::kNo);
  EXPECT_TRUE(eq(*v.witness, red3(span({ket(kQ3, "000")}))));
}

TEST(IsAtom, QutritExampleIsCertified) {
  EXPECT_EQ(is_atom(fixtures::qutrit_example_vector(), budget(100)).status, VerdictStatus::kCertifiedYes);
}

TEST(IsAtom, RejectsNonMembers) {
  EXPECT_THROW(is_atom(fixtures::non_member_kernel_vector(), budget(10)), InvalidArgument);
}

TEST(IsAtom, RandomFamiliesAloneFindNothingBelowW) {
  // Haar-random states of span{W, |000>} are entangled and reduce to the full
  // image of W; the witness needs the structured |000>.
  SearchBudget b = budget(200);
  b.families.basis_states = false;
  b.families.space_basis = false;
  b.families.product_states = false;
  const auto v = is_atom(red3(span({fixtures::w_state()})), b);
  EXPECT_EQ(v.status, VerdictStatus::kUnknown);
  EXPECT_EQ(v.samples_used, 200u);
}

TEST(IsAtom, ToricStructuredCandidatesFindLogicalEigenstate) {
  // On the 2x2 torus the logical strings have weight 2 < k, so eigenstates of
  // a logical operator reduce strictly below a generic ground state.
  const auto tc = fixtures::toric_code_l2();
  const Subspace gs = is_frustration_free(tc.shape, 4, tc.terms).ground;
  ASSERT_EQ(gs.rank(), 4);
  const auto x = reduce(gs, tc.shape, 4);
  SearchBudget b = budget(0);
  b.families.product_states = false;
  const auto v = is_atom(x, b);
  ASSERT_EQ(v.status, VerdictStatus::kNo);
  EXPECT_TRUE(lt(*v.witness, x));
}

TEST(IsJoinIrreducible, GhzPairSplits) {
  const auto x = red3(span({ket(kQ3, "000"), ket(kQ3, "111")}));
  const auto v = is_join_irreducible(x, budget(100));
  ASSERT_EQ(v.status, VerdictStatus::kNo);
  const auto& [a, b] = *v.witness;
  EXPECT_TRUE(lt(a, x));
  EXPECT_TRUE(lt(b, x));
  EXPECT_TRUE(eq(join(a, b), x));
  const auto r000 = red3(span({ket(kQ3, "000")}));
  const auto r111 = red3(span({ket(kQ3, "111")}));
  EXPECT_TRUE((eq(a, r000) && eq(b, r111)) || (eq(a, r111) && eq(b, r000)));
}

TEST(IsJoinIrreducible, WStateStaysUnknown) {
  const auto v = is_join_irreducible(red3(span({fixtures::w_state()})), budget(500));
  EXPECT_EQ(v.status, VerdictStatus::kUnknown);
  EXPECT_FALSE(v.witness.has_value());
  EXPECT_GE(v.samples_used, 500u);
}

TEST(IsJoinIrreducible, AtomIsCertified) {
  const auto v = is_join_irreducible(red3(span({ket(kQ3, "001")})), budget(10));
  EXPECT_EQ(v.status, VerdictStatus::kCertifiedYes);
  EXPECT_EQ(v.rule, kRuleAtomIsIrreducible);
}

TEST(JoinPrimeWitness, ProductKet) {
  const SystemShape q3 = fixtures::three_qubits();
  const Subspace s = span({ket(kQ3, "000")});
  const auto w = join_prime_witness(s, q3, 2);
  EXPECT_EQ(w.construction, "product");
  EXPECT_TRUE(validates_join_prime_witness(red3(s), w));
  EXPECT_TRUE(eq(w.first, red3(span({kets(kQ3, {{"000", kH}, {"110", kH}})}))));
  EXPECT_TRUE(eq(w.second, red3(span({kets(kQ3, {{"000", kH}, {"011", kH}})}))));
}

TEST(JoinPrimeWitness, FourQubitProductKet) {
  const SystemShape q4 = SystemShape::uniform(4, 2);
  const Subspace s = span({ket({2, 2, 2, 2}, "0000")});
  const auto w = join_prime_witness(s, q4, 2);
  EXPECT_TRUE(validates_join_prime_witness(reduce(s, q4, 2), w));
}

TEST(JoinPrimeWitness, RotatedProductState) {
  Rng rng(5);
  const SystemShape shape({2, 3, 2});
  const Vector psi = product_state({rng.haar_state(2), rng.haar_state(3), rng.haar_state(2)});
  const Subspace s = span({psi});
  const auto w = join_prime_witness(s, shape, 2);
  EXPECT_EQ(w.construction, "product");
  EXPECT_TRUE(validates_join_prime_witness(reduce(s, shape, 2), w));
}

TEST(JoinPrimeWitness, WStateUsesParticleZero) {
  const Subspace s = span({fixtures::w_state()});
  const auto w = join_prime_witness(s, fixtures::three_qubits(), 2);
  EXPECT_EQ(w.construction, "entangled");
  EXPECT_EQ(w.particle, 0);
  EXPECT_EQ(w.split.size(), 1u);
  EXPECT_TRUE(validates_join_prime_witness(red3(s), w));
}

TEST(JoinPrimeWitness, BellTimesZero) {
  const Subspace s = span({kets(kQ3, {{"000", kH}, {"110", kH}})});
  const auto w = join_prime_witness(s, fixtures::three_qubits(), 2);
  EXPECT_EQ(w.construction, "entangled");
  EXPECT_TRUE(validates_join_prime_witness(red3(s), w));
}

TEST(JoinPrimeWitness, Preconditions) {
  EXPECT_THROW(join_prime_witness(span({ket(kQ3, "000"), ket(kQ3, "111")}), fixtures::three_qubits(), 2),
               InvalidArgument);
  EXPECT_THROW(join_prime_witness(span({ket({2, 2}, "00")}), SystemShape::uniform(2, 2), 1), Unsupported);
}

TEST(JoinPrimeWitness, RandomEntangledStates) {
  Rng rng(17);
  for (int t = 0; t < 10; ++t) {
    const SystemShape shape = t % 2 ? SystemShape({2, 2, 3}) : SystemShape::uniform(4, 2);
    const Subspace s = span({rng.haar_state(shape.total_dim())});
    const auto w = join_prime_witness(s, shape, 2);
    EXPECT_TRUE(validates_join_prime_witness(reduce(s, shape, 2), w)) << t;
  }
}

TEST(Decompose, GhzPair) {
  const auto x = red3(span({ket(kQ3, "000"), ket(kQ3, "111")}));
  const auto parts = decompose_irreducibles(x, budget(50));
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_TRUE(eq(join(parts[0].element, parts[1].element), x));
  for (const auto& p : parts) EXPECT_EQ(p.status, VerdictStatus::kCertifiedYes);
}

TEST(Decompose, WStateIsSinglePart) {
  const auto x = red3(span({fixtures::w_state()}));
  const auto parts = decompose_irreducibles(x, budget(100));
  ASSERT_EQ(parts.size(), 1u);
  EXPECT_TRUE(eq(parts[0].element, x));
  EXPECT_EQ(parts[0].status, VerdictStatus::kUnknown);
}

TEST(Decompose, AtomIsSinglePart) {
  const auto x = fixtures::qutrit_example_vector();
  const auto parts = decompose_irreducibles(x, budget(10));
  ASSERT_EQ(parts.size(), 1u);
  EXPECT_EQ(parts[0].status, VerdictStatus::kCertifiedYes);
}

TEST(Decompose, RandomElementsJoinBack) {
  Rng rng(23);
  const SystemShape q3 = fixtures::three_qubits();
  for (int t = 0; t < 5; ++t) {
    const auto x = red3(rng.random_subspace(8, rng.uniform_int(1, 3)));
    const auto parts = decompose_irreducibles(x, budget(20, t));
    ASSERT_FALSE(parts.empty());
    ReducedSpaceVector acc = parts[0].element;
    for (std::size_t i = 1; i < parts.size(); ++i) acc = join(acc, parts[i].element);
    EXPECT_TRUE(eq(acc, x));
  }
}

TEST(Verdicts, FixedSeedIsReproducible) {
  const auto x = red3(span({fixtures::w_state()}));
  SearchBudget b = budget(50, 9);
  b.families.basis_states = false;
  b.families.space_basis = false;
  const auto v1 = is_join_irreducible(x, b);
  const auto v2 = is_join_irreducible(x, b);
  EXPECT_EQ(v1.status, v2.status);
  EXPECT_EQ(v1.samples_used, v2.samples_used);
}

TEST(Verdicts, RankOneMpiNeverRefuted) {
  Rng rng(31);
  const SystemShape shape({2, 2, 3});
  for (int t = 0; t < 5; ++t) {
    const auto x = reduce(span({rng.haar_state(12)}), shape, 2);
    if (mpi(x).rank() != 1) continue;
    EXPECT_EQ(is_atom(x, budget(50, t)).status, VerdictStatus::kCertifiedYes);
  }
}

}  // namespace
}  // namespace rspace
