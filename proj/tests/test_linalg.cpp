// Copyright 2026 The twocp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include "support/fixtures.hpp"
#include "twocp/linalg.hpp"

namespace twocp {
namespace {

using testing::Rng;

TEST(Kron, MatchesIndexOracle) {
  Rng rng(1);
  for (int t = 0; t < 20; ++t) {
    const auto a = testing::random_matrix(rng, testing::uniform_index(rng, 1, 3),
                                          testing::uniform_index(rng, 1, 3));
    const auto b = testing::random_matrix(rng, testing::uniform_index(rng, 1, 4),
                                          testing::uniform_index(rng, 1, 4));
    EXPECT_LT(max_abs_diff(kron(a, b), testing::kron_oracle(a, b)), 1e-14);
  }
}

TEST(Kron, LeftMostSignificant) {
  const auto v = kron(basis_vector(2, 1), basis_vector(3, 2));
  EXPECT_EQ(v.rows(), 6);
  EXPECT_EQ(v(5, 0), Complex(1.0));
  EXPECT_DOUBLE_EQ(max_abs(v), 1.0);
}

TEST(Kron, AssociativeAndMixedProduct) {
  Rng rng(2);
  const auto a = testing::random_matrix(rng, 2, 3);
  const auto b = testing::random_matrix(rng, 3, 2);
  const auto c = testing::random_matrix(rng, 2, 2);
  const auto d = testing::random_matrix(rng, 2, 2);
  EXPECT_LT(max_abs_diff(kron(kron(a, b), c), kron(a, kron(b, c))), 1e-12);
  EXPECT_LT(max_abs_diff(kron(a, c) * kron(b, d), kron(a * b, c * d)), 1e-12);
}

TEST(Kron, EmptyFactor) {
  const auto k = kron(ComplexMatrix(0, 0), identity(3));
  EXPECT_EQ(k.rows(), 0);
  EXPECT_EQ(k.cols(), 0);
}

TEST(Dagger, InvolutionAndProducts) {
  Rng rng(3);
  const auto a = testing::random_matrix(rng, 3, 2);
  const auto b = testing::random_matrix(rng, 2, 4);
  EXPECT_EQ(dagger(dagger(a)), a);
  EXPECT_LT(max_abs_diff(dagger(a * b), dagger(b) * dagger(a)), 1e-12);
  EXPECT_LT(max_abs_diff(dagger(kron(a, b)), kron(dagger(a), dagger(b))), 1e-12);
}

TEST(Swap, ExchangesFactors) {
  Rng rng(4);
  const auto x = testing::random_matrix(rng, 2, 1);
  const auto y = testing::random_matrix(rng, 3, 1);
  EXPECT_LT(max_abs_diff(swap_matrix(2, 3) * kron(x, y), kron(y, x)), 1e-14);
  EXPECT_LT(max_abs_diff(swap_matrix(3, 2) * swap_matrix(2, 3), identity(6)), 1e-14);
}

TEST(PermuteFactors, MatchesSwapAndCycles) {
  EXPECT_EQ(permute_factors({2, 3}, {1, 0}), swap_matrix(2, 3));
  Rng rng(5);
  const auto x = testing::random_matrix(rng, 2, 1);
  const auto y = testing::random_matrix(rng, 3, 1);
  const auto z = testing::random_matrix(rng, 2, 1);
  EXPECT_LT(max_abs_diff(permute_factors({2, 3, 2}, {2, 0, 1}) * kron(x, y, z), kron(z, x, y)),
            1e-14);
}

TEST(DirectSum, BlockDiagonal) {
  const auto s = direct_sum(identity(2), 3.0 * identity(1));
  EXPECT_EQ(s.rows(), 3);
  EXPECT_EQ(s(2, 2), Complex(3.0));
  EXPECT_EQ(s(0, 2), Complex(0.0));
}

TEST(MaxAbsDiff, ShapeMismatchThrows) {
  EXPECT_THROW(max_abs_diff(identity(2), identity(3)), ShapeError);
}

TEST(Psd, AcceptsGramMatrices) {
  Rng rng(6);
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = testing::uniform_index(rng, 1, 5);
    EXPECT_TRUE(is_psd(testing::random_psd(rng, n, testing::uniform_index(rng, 1, n))));
  }
}

TEST(Psd, RejectsNegativeAndNonHermitian) {
  ComplexMatrix a = identity(2);
  a(1, 1) = -0.5;
  const auto r = psd_report(a);
  EXPECT_FALSE(r.psd);
  EXPECT_NEAR(r.min_eigenvalue, -0.5, 1e-12);

  ComplexMatrix b = identity(2);
  b(0, 1) = 1.0;
  EXPECT_FALSE(is_psd(b));
  EXPECT_THROW(is_psd(ComplexMatrix::Zero(2, 3)), ShapeError);
}

TEST(Psd, SqrtSquaresBack) {
  Rng rng(7);
  const auto p = testing::random_psd(rng, 4, 2);
  const auto s = psd_sqrt(p);
  EXPECT_LT(max_abs_diff(s * s, p), 1e-10);
  EXPECT_TRUE(is_psd(s));
}

TEST(Isometry, CertifyChecksColumns) {
  Rng rng(8);
  const auto u = testing::random_unitary(rng, 4);
  const auto i = Isometry::certify(u.leftCols(2));
  EXPECT_EQ(i.rank(), 2u);
  EXPECT_EQ(i.rows(), 4u);
  EXPECT_LT(max_abs_diff(i.projector() * i.projector(), i.projector()), 1e-12);
  EXPECT_THROW(Isometry::certify(2.0 * identity(2)), CertificationError);
}

// Property: random rank-r projectors split as i i^dagger with i^dagger i = I.
TEST(SplitProjection, RandomProjectors) {
  Rng rng(9);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = testing::uniform_index(rng, 1, 8);
    const std::size_t r = testing::uniform_index(rng, 0, n);
    const ComplexMatrix q = testing::random_unitary(rng, n).leftCols(static_cast<Eigen::Index>(r));
    const ComplexMatrix p = q * q.adjoint();
    const auto rep = dagger_idempotent_report(p);
    EXPECT_TRUE(rep.verdict.pass);
    const auto i = split_projection(p);
    EXPECT_EQ(i.rank(), r);
    EXPECT_LT(max_abs_diff(i.projector(), p), 1e-9);
    EXPECT_LT(max_abs_diff(dagger(i.matrix()) * i.matrix(), identity(r)), 1e-9);
  }
}

TEST(SplitProjection, CanonicalPhase) {
  Rng rng(10);
  const ComplexMatrix q = testing::random_unitary(rng, 5).leftCols(3);
  const auto i = split_projection(q * q.adjoint());
  for (Eigen::Index c = 0; c < i.matrix().cols(); ++c) {
    Eigen::Index r = 0;
    while (std::abs(i.matrix()(r, c)) <= 1e-9) ++r;
    EXPECT_NEAR(i.matrix()(r, c).imag(), 0.0, 1e-12);
    EXPECT_GT(i.matrix()(r, c).real(), 0.0);
  }
}

TEST(SplitProjection, RejectsNonIdempotent) {
  EXPECT_THROW(split_projection(0.5 * identity(2)), CertificationError);
  ComplexMatrix n = ComplexMatrix::Zero(2, 2);
  n(0, 1) = 1.0;
  EXPECT_FALSE(dagger_idempotent_report(n).verdict.pass);
  EXPECT_THROW(split_projection(n), CertificationError);
}

TEST(SplitProjection, ZeroAndIdentity) {
  EXPECT_EQ(split_projection(ComplexMatrix::Zero(3, 3)).rank(), 0u);
  EXPECT_EQ(split_projection(identity(3)).rank(), 3u);
}

TEST(Nullspace, SpansKernel) {
  ComplexMatrix a = ComplexMatrix::Zero(2, 3);
  a(0, 0) = 1.0;
  a(1, 1) = 1.0;
  const auto k = nullspace(a, 1e-9);
  ASSERT_EQ(k.cols(), 1);
  EXPECT_NEAR(std::abs(k(2, 0)), 1.0, 1e-12);
}

}  // namespace
}  // namespace twocp
