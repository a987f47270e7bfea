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

// Finite-dimensional C*-algebras and completely positive maps between them.
//
// An algebra M_{k_1} (+) ... (+) M_{k_m} is stored as its block sizes.
// Elements are coordinate vectors of length sum_i k_i^2: block by block,
// each block in the matrix-units basis e_ab at offset a * k + b. These
// coordinates are orthonormal for the Hilbert-Schmidt inner product, so
// adjoints of maps are conjugate transposes of their matrices.

#include <cstddef>
#include <vector>

#include "twocp/frobenius.hpp"
#include "twocp/linalg.hpp"

namespace twocp {

class CStarAlgebra {
 public:
  /// The zero algebra (no blocks).
  CStarAlgebra() = default;
  /// Throws DomainError if a block size is zero.
  explicit CStarAlgebra(std::vector<std::size_t> blocks);

  static CStarAlgebra trivial() { return CStarAlgebra({1}); }
  /// C^n, n blocks of size one.
  static CStarAlgebra commutative(std::size_t n);
  /// M_k.
  static CStarAlgebra matrix(std::size_t k) { return CStarAlgebra({k}); }

  const std::vector<std::size_t>& blocks() const noexcept { return blocks_; }
  std::size_t block_count() const noexcept { return blocks_.size(); }
  std::size_t block(std::size_t i) const { return blocks_.at(i); }

  /// Element-space dimension, sum of k_i^2.
  std::size_t dim() const noexcept { return dim_; }
  /// Dimension of the Hilbert space the algebra acts on, sum of k_i.
  std::size_t hilbert_dim() const noexcept;
  /// Coordinate offset of block i.
  std::size_t offset(std::size_t i) const { return offsets_.at(i); }

  bool is_commutative() const noexcept;
  bool is_zero() const noexcept { return blocks_.empty(); }

  friend bool operator==(const CStarAlgebra&, const CStarAlgebra&) = default;

 private:
  std::vector<std::size_t> blocks_;
  std::vector<std::size_t> offsets_;
  std::size_t dim_ = 0;
};

/// Blocks of A (x) B: all products k_i * l_j, ordered i-major.
CStarAlgebra tensor(const CStarAlgebra& a, const CStarAlgebra& b);
CStarAlgebra direct_sum(const CStarAlgebra& a, const CStarAlgebra& b);

/// Permutation taking kron(x, y) of coordinates to the coordinates of x (x) y
/// in tensor(a, b).
ComplexMatrix tensor_coordinates(const CStarAlgebra& a, const CStarAlgebra& b);

/// The special dagger Frobenius structure (+)_i matrix_algebra(k_i).
FrobeniusAlgebra frobenius_structure(const CStarAlgebra& a);

/// Trace functional as a 1 x dim row (sum of diagonal coordinates).
ComplexMatrix trace_row(const CStarAlgebra& a);

/// Element as a block-diagonal operator on C^{hilbert_dim}.
ComplexMatrix to_operator(const CStarAlgebra& a, const ComplexVector& coords);
/// Block-diagonal part of an operator, as coordinates.
ComplexVector from_operator(const CStarAlgebra& a, const ComplexMatrix& op);

/// Linear map between C*-algebras acting on element coordinates
/// (cod.dim() x dom.dim()). Construction validates shapes only; complete
/// positivity is certified by is_completely_positive.
class CPMap {
 public:
  CPMap(CStarAlgebra dom, CStarAlgebra cod, ComplexMatrix map);

  static CPMap identity(const CStarAlgebra& a);
  /// The state C -> a with the given coordinates.
  static CPMap state(const CStarAlgebra& a, const ComplexVector& coords);
  /// The trace a -> C.
  static CPMap trace(const CStarAlgebra& a);

  const CStarAlgebra& dom() const noexcept { return dom_; }
  const CStarAlgebra& cod() const noexcept { return cod_; }
  const ComplexMatrix& map() const noexcept { return map_; }

  /// Component M_{k_i} -> M_{l_j} between a domain and a codomain block.
  ComplexMatrix component(std::size_t dom_block, std::size_t cod_block) const;

 private:
  CStarAlgebra dom_;
  CStarAlgebra cod_;
  ComplexMatrix map_;
};

struct ChoiBlock {
  std::size_t dom_block = 0;
  std::size_t cod_block = 0;
  /// sum_ab e_ab (x) f_ji(e_ab), (k_i k_j) x (k_i k_j).
  ComplexMatrix choi;
};

std::vector<ChoiBlock> choi_blocks(const CPMap& f);

struct CpReport {
  bool completely_positive = true;
  /// Most negative eigenvalue over all Choi blocks and where it occurs.
  double min_eigenvalue = 0.0;
  std::size_t worst_dom_block = 0;
  std::size_t worst_cod_block = 0;
  double hermitian_deviation = 0.0;

  Verdict verdict() const {
    return {completely_positive,
            std::max(hermitian_deviation, std::max(0.0, -min_eigenvalue))};
  }
  explicit operator bool() const noexcept { return completely_positive; }
};

/// Every Choi block PSD within tol.
CpReport is_completely_positive(const CPMap& f, double tol = kDefaultTol);

/// Kraus decomposition read off the Choi blocks: f_ji(x) = sum K x K^dagger
/// over the operators attached to (i, j). Choi eigenvalues at or below tol
/// are dropped and accounted for in `truncated`.
struct CpWitness {
  struct Kraus {
    std::size_t dom_block = 0;
    std::size_t cod_block = 0;
    ComplexMatrix op;  // l_j x k_i
  };

  CStarAlgebra dom;
  CStarAlgebra cod;
  std::vector<Kraus> operators;
  std::size_t dropped = 0;
  double truncated = 0.0;

  /// The witness as one matrix g (rank x total Choi dimension) with
  /// dagger(g) * g the block-diagonal sum of all Choi blocks.
  ComplexMatrix matrix() const;
  /// The map the operators implement.
  CPMap reconstruct() const;
};

/// Throws CertificationError naming the most negative Choi eigenvalue and
/// its block when f is not completely positive.
CpWitness cp_witness(const CPMap& f, double tol = kDefaultTol);

/// Single-block map x |-> sum_k K_k x K_k^dagger from M_{cols} to M_{rows}.
CPMap kraus_map(const std::vector<ComplexMatrix>& ops);

/// x |-> u x u^dagger on M_k.
CPMap conjugation_map(const ComplexMatrix& u);

/// g after f.
CPMap compose_cp(const CPMap& g, const CPMap& f);
CPMap dagger_cp(const CPMap& f);
CPMap tensor_cp(const CPMap& f, const CPMap& g);
/// Block-diagonal map on the direct sums.
CPMap direct_sum_cp(const CPMap& f, const CPMap& g);

/// Coordinate permutation A (x) (B (x) C) -> (A (x) B) (x) C.
CPMap associator(const CStarAlgebra& a, const CStarAlgebra& b,
                 const CStarAlgebra& c);

/// Entries have nonnegative real part and vanishing imaginary part within
/// tol. For commutative domain and codomain this decides complete
/// positivity; throws DomainError otherwise.
Verdict entrywise_positive(const CPMap& f, double tol = kDefaultTol);

}  // namespace twocp
