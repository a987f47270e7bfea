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

// Bimodules between classical structures as matrices of C*-algebras, and CP
// maps between them as matrices of CP maps.

#include <cstddef>
#include <vector>

#include "twocp/bimodule.hpp"
#include "twocp/cpstar.hpp"

namespace twocp {

/// m x n grid of algebras, row-major. The zero algebra marks an empty cell.
class AlgebraMatrix {
 public:
  AlgebraMatrix(std::size_t m, std::size_t n, std::vector<CStarAlgebra> cells);

  std::size_t rows() const noexcept { return m_; }
  std::size_t cols() const noexcept { return n_; }
  const CStarAlgebra& at(std::size_t i, std::size_t j) const;
  const std::vector<CStarAlgebra>& cells() const noexcept { return cells_; }

  /// Sum of the cell element dimensions.
  std::size_t total_dim() const noexcept;

  friend bool operator==(const AlgebraMatrix&, const AlgebraMatrix&) = default;

 private:
  std::size_t m_;
  std::size_t n_;
  std::vector<CStarAlgebra> cells_;
};

/// Cellwise maps source(i, j) -> target(i, j).
class CPMatrix {
 public:
  CPMatrix(AlgebraMatrix source, AlgebraMatrix target, std::vector<CPMap> cells);

  static CPMatrix identity(const AlgebraMatrix& a);

  const AlgebraMatrix& source() const noexcept { return source_; }
  const AlgebraMatrix& target() const noexcept { return target_; }
  const CPMap& at(std::size_t i, std::size_t j) const;
  const std::vector<CPMap>& cells() const noexcept { return cells_; }

 private:
  AlgebraMatrix source_;
  AlgebraMatrix target_;
  std::vector<CPMap> cells_;
};

/// Every cell completely positive; the deviation is the worst cell's.
Verdict check_cp_matrix(const CPMatrix& f, double tol = kDefaultTol);

/// Carrier (+)_ij M_ij (row-major), acting from classical_structure(m) and
/// classical_structure(n) by projecting onto the (i, j) summand.
DaggerBimodule from_matrix_of_algebras(const AlgebraMatrix& g);

/// Recovers the grid from a bimodule between commutative algebras whose
/// carrier algebra is recorded. Cells are ordered by the copyable states of
/// the boundary algebras; block sizes within a cell are sorted ascending.
AlgebraMatrix to_matrix_of_algebras(const DaggerBimodule& b, double tol = kDefaultTol);

/// Block sizes of the C*-algebra underlying a special dagger Frobenius
/// algebra, ascending, read off from its center.
std::vector<std::size_t> block_structure(const FrobeniusAlgebra& f);

/// (i, k) cell (+)_j a_ij (x) b_jk.
AlgebraMatrix compose_matrix_model(const AlgebraMatrix& a, const AlgebraMatrix& b);

/// (i, k) cell (+)_j f_ij (x) g_jk.
CPMatrix compose_matrix_homs(const CPMatrix& f, const CPMatrix& g);

/// Cellwise g after f.
CPMatrix vertical_compose(const CPMatrix& f, const CPMatrix& g);

/// The block-diagonal map between from_matrix_of_algebras of source and
/// target.
BimoduleHom to_bimodule_hom(const CPMatrix& f);

}  // namespace twocp
