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

#pragma once

// Random generators and brute-force oracles shared by the unit and
// acceptance tests. Oracles are written from the definitions with explicit
// index loops and do not call the library routine they check.

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "twocp/bimodule.hpp"
#include "twocp/cpstar.hpp"
#include "twocp/groupoid.hpp"
#include "twocp/matrix_model.hpp"
#include "twocp/protocols.hpp"

namespace twocp::testing {

using Rng = std::mt19937_64;

std::size_t uniform_index(Rng& rng, std::size_t lo, std::size_t hi);  // inclusive
ComplexMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols);
ComplexMatrix random_unitary(Rng& rng, std::size_t n);
/// Random PSD matrix of the given rank.
ComplexMatrix random_psd(Rng& rng, std::size_t n, std::size_t rank);
ComplexMatrix random_density(Rng& rng, std::size_t n);

CStarAlgebra random_algebra(Rng& rng, std::size_t max_blocks, std::size_t max_block);

/// Random CP map with up to `kraus` operators per block pair, built by the
/// Kraus oracle below.
CPMap random_cp_map(Rng& rng, const CStarAlgebra& dom, const CStarAlgebra& cod,
                    std::size_t kraus = 2);

/// A random POVM with n elements on C^d. If `complete` is false the
/// elements are PSD but sum to something other than the identity.
POVM random_povm(Rng& rng, std::size_t d, std::size_t n, bool complete = true);

/// Grid cells drawn from {0, C, C^2, M_2}.
AlgebraMatrix random_grid(Rng& rng, std::size_t m, std::size_t n);
CPMatrix random_cp_matrix(Rng& rng, const AlgebraMatrix& source, const AlgebraMatrix& target);

/// A composable pair of certified bimodules M (C-D), N (D-E), small enough
/// for exhaustive checks.
std::pair<DaggerBimodule, DaggerBimodule> random_bimodule_pair(Rng& rng);

/// A random unitary error basis A U_i B on C^k from the shift-clock basis.
std::vector<ComplexMatrix> random_error_basis(Rng& rng, std::size_t k);

// ---- oracles ----

ComplexMatrix kron_oracle(const ComplexMatrix& a, const ComplexMatrix& b);

/// Map on coordinates from single-block Kraus operators:
/// f(e_ab)[c, d] = sum_k K[c, a] conj(K[d, b]).
ComplexMatrix kraus_oracle(const std::vector<ComplexMatrix>& ops);

/// Choi matrix sum_ab e_ab (x) f(e_ab) from an explicit map on operators.
template <typename F>
ComplexMatrix choi_oracle(std::size_t k, F&& f) {
  const auto n = static_cast<Eigen::Index>(k);
  ComplexMatrix out;
  for (Eigen::Index a = 0; a < n; ++a) {
    for (Eigen::Index b = 0; b < n; ++b) {
      ComplexMatrix e = ComplexMatrix::Zero(n, n);
      e(a, b) = 1.0;
      const ComplexMatrix img = f(e);
      if (out.size() == 0) out = ComplexMatrix::Zero(n * img.rows(), n * img.cols());
      out.block(a * img.rows(), b * img.cols(), img.rows(), img.cols()) = img;
    }
  }
  return out;
}

/// Partial trace over the first factor of C^a (x) C^b.
ComplexMatrix partial_trace_first(const ComplexMatrix& rho, std::size_t a, std::size_t b);

/// Density-matrix simulation of single-block teleportation: for input rho,
/// returns sigma_i = nu_i(tr_12[(P_i (x) I)(rho (x) resource)]) per outcome,
/// with Kraus operators of nu_i given per outcome.
std::vector<ComplexMatrix> teleport_oracle(const ComplexMatrix& rho,
                                           const ComplexMatrix& resource,
                                           const std::vector<ComplexMatrix>& povm,
                                           const std::vector<ComplexMatrix>& correction_unitaries);

/// Exhaustive one-time pad over a group: out[m][c][x] is the probability of
/// ciphertext c and decrypted message x for message m and key distribution p.
std::vector<std::vector<std::vector<double>>> otp_oracle(const FiniteGroupoid& group,
                                                        const std::vector<double>& key);

}  // namespace twocp::testing
