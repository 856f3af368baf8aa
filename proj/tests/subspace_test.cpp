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

#include "rspace/subspace.hpp"

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

void expect_orthonormal(const Subspace& s) {
  const auto r = s.rank();
  EXPECT_LT((s.basis().adjoint() * s.basis() - Matrix::Identity(r, r)).norm(), 1e-10);
}

TEST(FromSpanningVectors, NearDuplicateCollapses) {
  const std::vector<Vector> v{ket(kQ2, "00"), kets(kQ2, {{"00", 1.0}, {"11", 1e-15}})};
  const Subspace s = Subspace::from_spanning_vectors(v, 1e-10);
  EXPECT_EQ(s.rank(), 1);
  EXPECT_TRUE(equals(s, span({ket(kQ2, "00")})));
}

TEST(FromSpanningVectors, OrthogonalPair) {
  const Subspace s = span({kets(kQ2, {{"01", 1.0}, {"10", 1.0}}), kets(kQ2, {{"01", 1.0}, {"10", -1.0}})});
  EXPECT_EQ(s.rank(), 2);
  EXPECT_TRUE(equals(s, span({ket(kQ2, "01"), ket(kQ2, "10")})));
  expect_orthonormal(s);
}

TEST(FromSpanningVectors, WAndZero) {
  EXPECT_EQ(span({ket(kQ3, "000"), fixtures::w_state()}).rank(), 2);
}

TEST(FromSpanningVectors, EmptyListRejectedZeroVectorsGiveRankZero) {
  EXPECT_THROW(Subspace::from_spanning_vectors(std::vector<Vector>{}), InvalidArgument);
  const std::vector<Vector> zeros{Vector::Zero(4), Vector::Zero(4)};
  const Subspace s = Subspace::from_spanning_vectors(zeros);
  EXPECT_TRUE(s.is_zero());
  EXPECT_EQ(s.ambient_dim(), 4u);
}

TEST(Sum, Examples) {
  const Subspace a = span({ket(kQ2, "00")});
  const Subspace b = span({ket(kQ2, "11")});
  EXPECT_TRUE(equals(sum(a, b), span({ket(kQ2, "00"), ket(kQ2, "11")})));
  EXPECT_TRUE(equals(sum(a, a), a));
  EXPECT_TRUE(equals(sum(a, Subspace::zero(4)), a));
  EXPECT_THROW(sum(a, Subspace::zero(8)), InvalidArgument);
}

TEST(Intersect, Examples) {
  const Subspace a = span({ket(kQ2, "00"), ket(kQ2, "11")});
  const Subspace b = span({ket(kQ2, "00"), ket(kQ2, "01")});
  EXPECT_TRUE(equals(intersect(a, b), span({ket(kQ2, "00")})));
  EXPECT_TRUE(equals(intersect(a, a), a));
  EXPECT_THROW(intersect(a, Subspace::zero(8)), InvalidArgument);
}

TEST(Contains, Examples) {
  const Subspace ab = span({ket(kQ2, "00"), ket(kQ2, "11")});
  EXPECT_TRUE(contains(ab, span({ket(kQ2, "00")})));
  EXPECT_FALSE(contains(ab, span({ket(kQ2, "01")})));
  EXPECT_THROW(contains(ab, Subspace::zero(8)), InvalidArgument);
}

TEST(Contains, SmallTiltIsResolved) {
  const double eps = 1e-3;
  const Subspace tilted = span({kets(kQ2, {{"00", 1.0}, {"11", eps}})});
  const Subspace s00 = span({ket(kQ2, "00")});
  // Residual is eps / sqrt(1 + eps^2).
  EXPECT_NEAR(inclusion_residual(tilted, s00), 9.99999500000375e-4, 1e-15);
  EXPECT_FALSE(contains(tilted, s00));
}

TEST(EqualsAndComplement, Examples) {
  const std::vector<int> q1{2};
  const Subspace plus = span({kets(q1, {{"0", 1.0}, {"1", 1.0}})});
  const Subspace minus = span({kets(q1, {{"0", 1.0}, {"1", -1.0}})});
  EXPECT_FALSE(equals(plus, minus));
  EXPECT_TRUE(equals(complement(plus), minus));
  const Subspace s00 = span({ket(kQ2, "00")});
  EXPECT_EQ(complement(s00).rank(), 3);
  EXPECT_TRUE(equals(complement(complement(s00)), s00));
  EXPECT_EQ(complement(Subspace::zero(4)).rank(), 4);
  EXPECT_TRUE(complement(Subspace::full(4)).is_zero());
}

TEST(TensorExtend, Examples) {
  const SystemShape q3 = fixtures::three_qubits();
  const Subspace s00 = span({ket(kQ2, "00")});
  const std::vector<int> j01{0, 1};
  const std::vector<int> j02{0, 2};
  EXPECT_TRUE(equals(tensor_extend(s00, q3, j01), span({ket(kQ3, "000"), ket(kQ3, "001")})));
  EXPECT_TRUE(equals(tensor_extend(s00, q3, j02), span({ket(kQ3, "000"), ket(kQ3, "010")})));
  EXPECT_EQ(tensor_extend(Subspace::full(4), q3, j01).rank(), 8);
  EXPECT_THROW(tensor_extend(Subspace::full(3), q3, j01), InvalidArgument);
}

TEST(TensorProduct, PlacesFactorsOnTheirParticles) {
  const SystemShape q3 = fixtures::three_qubits();
  const std::vector<int> j1{1};
  const Subspace one = span({ket({2}, "1")});
  const Subspace zz = span({ket(kQ2, "00")});
  EXPECT_TRUE(equals(tensor_product(one, zz, q3, j1), span({ket(kQ3, "010")})));
}

TEST(Eigenspace, SelectsWindow) {
  Matrix h = Matrix::Zero(3, 3);
  h(0, 0) = -1.0;
  h(1, 1) = 2.0;
  h(2, 2) = -1.0;
  const Subspace g = Subspace::eigenspace(h, -1.5, -0.5);
  EXPECT_TRUE(equals(g, span({basis_ket(3, 0), basis_ket(3, 2)})));
}

class SubspaceProperties : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(SubspaceProperties, LatticeLaws) {
  Rng rng(GetParam());
  const std::size_t dim = 12;
  for (int t = 0; t < 10; ++t) {
    const Subspace a = rng.random_subspace(dim, rng.uniform_int(1, 11));
    const Subspace b = rng.random_subspace(dim, rng.uniform_int(1, 11));
    const Subspace c = rng.random_subspace(dim, rng.uniform_int(1, 11));
    expect_orthonormal(sum(a, b));
    EXPECT_TRUE(equals(sum(a, b), sum(b, a)));
    EXPECT_TRUE(equals(intersect(a, b), intersect(b, a)));
    EXPECT_TRUE(equals(sum(sum(a, b), c), sum(a, sum(b, c))));
    EXPECT_TRUE(equals(intersect(intersect(a, b), c), intersect(a, intersect(b, c))));
    EXPECT_TRUE(equals(intersect(a, a), a));
    EXPECT_TRUE(contains(a, intersect(a, b)));
    EXPECT_TRUE(contains(sum(a, b), a));
    // Generic position: dimension formula.
    EXPECT_EQ(sum(a, b).rank() + intersect(a, b).rank(), a.rank() + b.rank());
  }
}

TEST_P(SubspaceProperties, StructuredIntersectionsMatchOracle) {
  // Force nontrivial intersections by sharing a random core.
  Rng rng(GetParam());
  const std::size_t dim = 10;
  for (int t = 0; t < 10; ++t) {
    const Subspace core = rng.random_subspace(dim, rng.uniform_int(1, 3));
    const Subspace a = sum(core, rng.random_subspace(dim, rng.uniform_int(1, 3)));
    const Subspace b = sum(core, rng.random_subspace(dim, rng.uniform_int(1, 3)));
    const Subspace i = intersect(a, b);
    EXPECT_TRUE(contains(i, core));
    EXPECT_TRUE(equals(i, oracle::naive_intersect(a, b)));
  }
}

TEST_P(SubspaceProperties, ExtendCommutesWithSum) {
  Rng rng(GetParam());
  const SystemShape shape({2, 3, 2});
  const std::vector<int> j{0, 2};
  for (int t = 0; t < 10; ++t) {
    const Subspace a = rng.random_subspace(4, rng.uniform_int(1, 3));
    const Subspace b = rng.random_subspace(4, rng.uniform_int(1, 3));
    EXPECT_TRUE(equals(tensor_extend(sum(a, b), shape, j), sum(tensor_extend(a, shape, j), tensor_extend(b, shape, j))));
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, SubspaceProperties, ::testing::Values(1u, 2u, 3u));

}  // namespace
}  // namespace rspace
