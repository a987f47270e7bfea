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
#include "twocp/cpstar.hpp"

namespace twocp {
namespace {

using testing::Rng;

CPMap transpose_m2() {
  ComplexMatrix t = ComplexMatrix::Zero(4, 4);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) t(b * 2 + a, a * 2 + b) = 1.0;
  return CPMap(CStarAlgebra::matrix(2), CStarAlgebra::matrix(2), t);
}

CPMap row_functional(std::initializer_list<double> entries) {
  ComplexMatrix m(1, static_cast<Eigen::Index>(entries.size()));
  Eigen::Index c = 0;
  for (double e : entries) m(0, c++) = e;
  return CPMap(CStarAlgebra::commutative(entries.size()), CStarAlgebra::trivial(), m);
}

ComplexMatrix pauli_x() {
  ComplexMatrix x = ComplexMatrix::Zero(2, 2);
  x(0, 1) = x(1, 0) = 1.0;
  return x;
}

TEST(CStarAlgebra, DimensionsAndOffsets) {
  const CStarAlgebra a({2, 1, 3});
  EXPECT_EQ(a.dim(), 14u);
  EXPECT_EQ(a.hilbert_dim(), 6u);
  EXPECT_EQ(a.offset(1), 4u);
  EXPECT_EQ(a.offset(2), 5u);
  EXPECT_FALSE(a.is_commutative());
  EXPECT_TRUE(CStarAlgebra::commutative(3).is_commutative());
  EXPECT_TRUE(CStarAlgebra().is_zero());
  EXPECT_THROW(CStarAlgebra({1, 0}), DomainError);
}

TEST(CStarAlgebra, TensorBlocksIMajor) {
  const auto t = tensor(CStarAlgebra({1, 2}), CStarAlgebra({3, 1}));
  EXPECT_EQ(t.blocks(), (std::vector<std::size_t>{3, 1, 6, 2}));
}

TEST(CStarAlgebra, TensorCoordinatesMatchOperators) {
  Rng rng(21);
  const CStarAlgebra a({1, 2});
  const CStarAlgebra b({2});
  const ComplexVector x = testing::random_matrix(rng, a.dim(), 1);
  const ComplexVector y = testing::random_matrix(rng, b.dim(), 1);
  const ComplexVector xy = tensor_coordinates(a, b) * kron(x, y);
  const auto t = tensor(a, b);
  const ComplexMatrix op = testing::kron_oracle(to_operator(a, x), to_operator(b, y));
  EXPECT_LT(max_abs_diff(to_operator(t, xy), op), 1e-12);
}

TEST(CStarAlgebra, OperatorRoundTrip) {
  Rng rng(22);
  const CStarAlgebra a({2, 1, 2});
  const ComplexVector x = testing::random_matrix(rng, a.dim(), 1);
  EXPECT_LT(max_abs_diff(from_operator(a, to_operator(a, x)), x), 1e-14);
  EXPECT_EQ(trace_row(a) * x, (ComplexMatrix(1, 1) << to_operator(a, x).trace()).finished());
}

TEST(CStarAlgebra, FrobeniusStructureIsStructural) {
  const auto f = frobenius_structure(CStarAlgebra({1, 2}));
  EXPECT_EQ(f.dim(), 5u);
  EXPECT_TRUE(check_frobenius(f).structural());
}

TEST(Choi, IdentityOnM2) {
  const auto blocks = choi_blocks(CPMap::identity(CStarAlgebra::matrix(2)));
  ASSERT_EQ(blocks.size(), 1u);
  const auto& c = blocks[0].choi;
  EXPECT_NEAR(c.trace().real(), 2.0, 1e-14);
  const auto eig = hermitian_eigen(c);
  EXPECT_NEAR(eig.values(3), 2.0, 1e-12);
  EXPECT_NEAR(eig.values(2), 0.0, 1e-12);
}

TEST(Choi, MatchesOracle) {
  Rng rng(23);
  const std::vector<ComplexMatrix> ops{testing::random_matrix(rng, 3, 2),
                                       testing::random_matrix(rng, 3, 2)};
  const auto f = kraus_map(ops);
  const auto expected = testing::choi_oracle(2, [&](const ComplexMatrix& e) {
    ComplexMatrix out = ComplexMatrix::Zero(3, 3);
    for (const auto& k : ops) out += k * e * k.adjoint();
    return out;
  });
  EXPECT_LT(max_abs_diff(choi_blocks(f)[0].choi, expected), 1e-12);
}

TEST(Choi, TransposeIsSwap) {
  const auto blocks = choi_blocks(transpose_m2());
  EXPECT_EQ(blocks[0].choi, swap_matrix(2, 2));
  const auto r = is_completely_positive(transpose_m2());
  EXPECT_FALSE(r.completely_positive);
  EXPECT_NEAR(r.min_eigenvalue, -1.0, 1e-9);
  EXPECT_FALSE(r.verdict().pass);
}

TEST(Choi, ZeroMap) {
  const CPMap z(CStarAlgebra({2, 1}), CStarAlgebra({1, 2}), ComplexMatrix::Zero(5, 5));
  for (const auto& b : choi_blocks(z)) EXPECT_EQ(max_abs(b.choi), 0.0);
  EXPECT_TRUE(is_completely_positive(z).completely_positive);
  EXPECT_TRUE(cp_witness(z).operators.empty());
}

TEST(CPMap, ShapesChecked) {
  EXPECT_THROW(CPMap(CStarAlgebra::matrix(2), CStarAlgebra::trivial(), identity(4)), ShapeError);
  EXPECT_THROW(compose_cp(CPMap::identity(CStarAlgebra::matrix(2)),
                          CPMap::identity(CStarAlgebra::commutative(4))),
               ShapeError);
}

TEST(ExampleMaps, FAndGAreCompletelyPositive) {
  const auto f = row_functional({1, 1, 0, 0});
  const auto g = row_functional({0, 0, 1, 1});
  EXPECT_TRUE(is_completely_positive(f).completely_positive);
  EXPECT_TRUE(is_completely_positive(g).completely_positive);
  EXPECT_TRUE(entrywise_positive(f).pass);
  EXPECT_TRUE(entrywise_positive(g).pass);
}

// Of the four listed states only x1 and x3 are equalized: f x2 = 2, g x2 = 0
// and f x4 = 0, g x4 = 2.
TEST(ExampleMaps, EqualizedStates) {
  const auto f = row_functional({1, 1, 0, 0});
  const auto g = row_functional({0, 0, 1, 1});
  const std::vector<std::vector<double>> xs{{1, 0, 1, 0}, {1, 1, 0, 0}, {0, 1, 0, 1}, {0, 0, 1, 1}};
  const std::vector<double> fx{1, 2, 1, 0};
  const std::vector<double> gx{1, 0, 1, 2};
  for (std::size_t i = 0; i < xs.size(); ++i) {
    ComplexVector x(4);
    for (Eigen::Index c = 0; c < 4; ++c) x(c) = xs[i][static_cast<std::size_t>(c)];
    EXPECT_EQ((f.map() * x)(0), Complex(fx[i])) << i;
    EXPECT_EQ((g.map() * x)(0), Complex(gx[i])) << i;
  }
}

TEST(EntrywisePositive, NegativeEntryRejected) {
  EXPECT_FALSE(entrywise_positive(row_functional({1, -1})).pass);
  EXPECT_THROW(entrywise_positive(CPMap::identity(CStarAlgebra::matrix(2))), DomainError);
}

// Property: on commutative algebras the two CP decisions agree.
TEST(EntrywisePositive, AgreesWithChoiOnCommutative) {
  Rng rng(24);
  std::normal_distribution<double> gauss;
  for (int t = 0; t < 200; ++t) {
    const std::size_t m = testing::uniform_index(rng, 1, 4);
    const std::size_t n = testing::uniform_index(rng, 1, 4);
    ComplexMatrix map(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(m));
    for (Eigen::Index r = 0; r < map.rows(); ++r)
      for (Eigen::Index c = 0; c < map.cols(); ++c) {
        const double v = gauss(rng);
        map(r, c) = t % 2 == 0 ? std::abs(v) : v;
      }
    const CPMap f(CStarAlgebra::commutative(m), CStarAlgebra::commutative(n), map);
    EXPECT_EQ(entrywise_positive(f).pass, is_completely_positive(f).completely_positive);
  }
}

TEST(CpWitness, IdentityHasOneKrausOperator) {
  const auto w = cp_witness(CPMap::identity(CStarAlgebra::matrix(2)));
  ASSERT_EQ(w.operators.size(), 1u);
  EXPECT_LT(max_abs_diff(w.operators[0].op, identity(2)), 1e-12);
}

TEST(CpWitness, HalfIdentityHalfFlip) {
  const auto f = kraus_map({std::sqrt(0.5) * identity(2), std::sqrt(0.5) * pauli_x()});
  const auto w = cp_witness(f);
  ASSERT_EQ(w.operators.size(), 2u);
  for (const auto& k : w.operators) {
    EXPECT_NEAR((k.op.adjoint() * k.op).trace().real() / 2.0, 0.5, 1e-12);
  }
  EXPECT_LT(max_abs_diff(w.reconstruct().map(), f.map()), 1e-12);
}

TEST(CpWitness, DepolarizingHasFourOperators) {
  std::vector<ComplexMatrix> ops;
  for (const auto& p : std::vector<ComplexMatrix>{identity(2), pauli_x()}) {
    ops.push_back(0.5 * p);
  }
  ComplexMatrix y = ComplexMatrix::Zero(2, 2);
  y(0, 1) = Complex(0, -1);
  y(1, 0) = Complex(0, 1);
  ComplexMatrix z = identity(2);
  z(1, 1) = -1.0;
  ops.push_back(0.5 * y);
  ops.push_back(0.5 * z);
  const auto f = kraus_map(ops);
  // Completely depolarizing: x |-> tr(x) I / 2.
  ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
  for (int a = 0; a < 2; ++a)
    for (int c = 0; c < 2; ++c) expected(c * 2 + c, a * 2 + a) = 0.5;
  EXPECT_LT(max_abs_diff(f.map(), expected), 1e-14);
  const auto w = cp_witness(f);
  EXPECT_EQ(w.operators.size(), 4u);
  EXPECT_LT(max_abs_diff(w.reconstruct().map(), f.map()), 1e-9);
}

TEST(CpWitness, RejectsTransposeNamingBlock) {
  try {
    cp_witness(transpose_m2());
    FAIL() << "expected CertificationError";
  } catch (const CertificationError& e) {
    EXPECT_NEAR(e.deviation(), 1.0, 1e-9);
    EXPECT_NE(std::string(e.what()).find("block"), std::string::npos);
  }
}

// Property: witness round trip on random multi-block CP maps.
TEST(CpWitness, RoundTripOnRandomMaps) {
  Rng rng(25);
  for (int t = 0; t < 100; ++t) {
    const auto dom = testing::random_algebra(rng, 3, 3);
    const auto cod = testing::random_algebra(rng, 3, 3);
    const auto f = testing::random_cp_map(rng, dom, cod);
    ASSERT_TRUE(is_completely_positive(f).completely_positive);
    const auto w = cp_witness(f);
    EXPECT_LT(max_abs_diff(w.reconstruct().map(), f.map()), 1e-8);
    const ComplexMatrix g = w.matrix();
    EXPECT_EQ(g.cols(), [&] {
      Eigen::Index total = 0;
      for (const auto& b : choi_blocks(f)) total += b.choi.rows();
      return total;
    }());
  }
}

TEST(CpWitness, KrausMapMatchesOracle) {
  Rng rng(26);
  const std::vector<ComplexMatrix> ops{testing::random_matrix(rng, 2, 3)};
  EXPECT_LT(max_abs_diff(kraus_map(ops).map(), testing::kraus_oracle(ops)), 1e-14);
}

// Property: CP is closed under composition, dagger and tensor.
TEST(CpClosure, ComposeDaggerTensor) {
  Rng rng(27);
  for (int t = 0; t < 40; ++t) {
    const auto a = testing::random_algebra(rng, 3, 3);
    const auto b = testing::random_algebra(rng, 3, 3);
    const auto c = testing::random_algebra(rng, 2, 2);
    const auto f = testing::random_cp_map(rng, a, b);
    const auto g = testing::random_cp_map(rng, b, c);
    const auto h = testing::random_cp_map(rng, c, a);
    EXPECT_TRUE(is_completely_positive(compose_cp(g, f), 1e-8).completely_positive);
    EXPECT_TRUE(is_completely_positive(dagger_cp(f), 1e-8).completely_positive);
    EXPECT_TRUE(is_completely_positive(tensor_cp(g, h), 1e-8).completely_positive);
    EXPECT_TRUE(is_completely_positive(direct_sum_cp(f, h), 1e-8).completely_positive);
  }
}

TEST(CpAlgebra, IdentitiesAndInvolution) {
  Rng rng(28);
  const CStarAlgebra a({1, 2});
  const CStarAlgebra b({2});
  const auto f = testing::random_cp_map(rng, a, b);
  EXPECT_LT(max_abs_diff(compose_cp(f, CPMap::identity(a)).map(), f.map()), 1e-14);
  EXPECT_LT(max_abs_diff(compose_cp(CPMap::identity(b), f).map(), f.map()), 1e-14);
  EXPECT_EQ(dagger_cp(dagger_cp(f)).map(), f.map());
  EXPECT_EQ(dagger_cp(f).dom(), b);
}

// Property: tensor_cp acts on each block pair as the Kronecker product of
// the factors' actions.
TEST(CpAlgebra, TensorMatchesOperatorOracle) {
  Rng rng(29);
  for (int t = 0; t < 10; ++t) {
    const auto a = testing::random_algebra(rng, 2, 2);
    const auto b = testing::random_algebra(rng, 2, 2);
    const auto c = testing::random_algebra(rng, 2, 2);
    const auto d = testing::random_algebra(rng, 2, 2);
    const auto f = testing::random_cp_map(rng, a, b);
    const auto g = testing::random_cp_map(rng, c, d);
    const ComplexVector x = testing::random_matrix(rng, a.dim(), 1);
    const ComplexVector y = testing::random_matrix(rng, c.dim(), 1);
    const ComplexVector xy = tensor_coordinates(a, c) * kron(x, y);
    const ComplexVector out = tensor_cp(f, g).map() * xy;
    const ComplexMatrix fx = to_operator(b, f.map() * x);
    const ComplexMatrix gy = to_operator(d, g.map() * y);
    ComplexMatrix expected = ComplexMatrix::Zero(fx.rows() * gy.rows(), fx.cols() * gy.cols());
    Eigen::Index at = 0;
    Eigen::Index bi = 0;
    for (const auto k : b.blocks()) {
      Eigen::Index dj = 0;
      for (const auto l : d.blocks()) {
        const auto kk = static_cast<Eigen::Index>(k);
        const auto ll = static_cast<Eigen::Index>(l);
        expected.block(at, at, kk * ll, kk * ll) =
            testing::kron_oracle(fx.block(bi, bi, kk, kk), gy.block(dj, dj, ll, ll));
        at += kk * ll;
        dj += ll;
      }
      bi += static_cast<Eigen::Index>(k);
    }
    EXPECT_LT(max_abs_diff(to_operator(tensor(b, d), out), expected), 1e-10);
  }
}

TEST(CpAlgebra, AssociatorReindexes) {
  Rng rng(30);
  const CStarAlgebra a({1, 2});
  const CStarAlgebra b({2});
  const CStarAlgebra c({1, 1});
  const ComplexVector x = testing::random_matrix(rng, a.dim(), 1);
  const ComplexVector y = testing::random_matrix(rng, b.dim(), 1);
  const ComplexVector z = testing::random_matrix(rng, c.dim(), 1);
  const ComplexVector right = tensor_coordinates(a, tensor(b, c)) * kron(x, tensor_coordinates(b, c) * kron(y, z));
  const ComplexVector left = tensor_coordinates(tensor(a, b), c) * kron(tensor_coordinates(a, b) * kron(x, y), z);
  const auto assoc = associator(a, b, c);
  EXPECT_LT(max_abs_diff(assoc.map() * right, left), 1e-14);
  EXPECT_TRUE(is_completely_positive(assoc).completely_positive);
}

TEST(CpAlgebra, StateAndTrace) {
  const CStarAlgebra a({2});
  ComplexVector rho(4);
  rho << 0.5, 0.0, 0.0, 0.5;
  const auto s = CPMap::state(a, rho);
  EXPECT_TRUE(is_completely_positive(s).completely_positive);
  EXPECT_NEAR(compose_cp(CPMap::trace(a), s).map()(0, 0).real(), 1.0, 1e-14);
}

TEST(CpAlgebra, ConjugationIsUnitalAndCp) {
  Rng rng(31);
  const auto u = testing::random_unitary(rng, 3);
  const auto f = conjugation_map(u);
  EXPECT_TRUE(is_completely_positive(f).completely_positive);
  const ComplexVector id = from_operator(CStarAlgebra::matrix(3), identity(3));
  EXPECT_LT(max_abs_diff(f.map() * id, id), 1e-12);
}

}  // namespace
}  // namespace twocp
