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

// Dense complex linear algebra over finite-dimensional Hilbert spaces.
//
// Tensor products use the left-most-significant convention: the basis
// vector e_i (x) e_j of C^m (x) C^n has index i * n + j. Every composite in
// the library (bimodule actions, CP maps on tensor algebras) relies on it.

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "twocp/errors.hpp"
#include "twocp/verdict.hpp"

namespace twocp {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

ComplexMatrix identity(std::size_t n);

/// Column vector e_i of C^n.
ComplexMatrix basis_vector(std::size_t n, std::size_t i);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

template <typename... Rest>
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b,
                   const ComplexMatrix& c, const Rest&... rest) {
  return kron(kron(a, b), c, rest...);
}

ComplexMatrix dagger(const ComplexMatrix& a);

/// Block-diagonal sum.
ComplexMatrix direct_sum(const ComplexMatrix& a, const ComplexMatrix& b);

/// Permutation C^m (x) C^n -> C^n (x) C^m, e_i (x) e_j |-> e_j (x) e_i.
ComplexMatrix swap_matrix(std::size_t m, std::size_t n);

/// Permutation of tensor factors: maps x_0 (x) ... (x) x_{r-1}, with x_t in
/// C^{dims[t]}, to x_{order[0]} (x) ... (x) x_{order[r-1]}.
ComplexMatrix permute_factors(const std::vector<std::size_t>& dims,
                              const std::vector<std::size_t>& order);

/// Max-absolute-entry norm; zero for empty matrices.
double max_abs(const ComplexMatrix& a);

/// max_abs(a - b), throwing ShapeError on mismatched shapes.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

struct HermitianEigen {
  Eigen::VectorXd values;  // ascending
  ComplexMatrix vectors;   // orthonormal columns, same order
};

/// Eigendecomposition of the Hermitian part of a square matrix.
HermitianEigen hermitian_eigen(const ComplexMatrix& a);

struct PsdReport {
  double hermitian_deviation = 0.0;
  double min_eigenvalue = 0.0;
  bool psd = false;
};

PsdReport psd_report(const ComplexMatrix& a, double tol = kDefaultTol);

/// Hermitian within tol and no eigenvalue below -tol. Throws ShapeError on
/// non-square input.
bool is_psd(const ComplexMatrix& a, double tol = kDefaultTol);

/// Principal square root of a PSD matrix; eigenvalues below zero are
/// clamped.
ComplexMatrix psd_sqrt(const ComplexMatrix& a);

/// A matrix with orthonormal columns.
class Isometry {
 public:
  /// Empty n x 0 isometry.
  explicit Isometry(std::size_t rows = 0);

  /// Checks dagger(m) * m == I within tol; throws CertificationError.
  static Isometry certify(ComplexMatrix m, double tol = kDefaultTol);

  const ComplexMatrix& matrix() const noexcept { return m_; }
  std::size_t rows() const noexcept { return static_cast<std::size_t>(m_.rows()); }
  std::size_t rank() const noexcept { return static_cast<std::size_t>(m_.cols()); }

  /// The projector i * dagger(i).
  ComplexMatrix projector() const;

 private:
  explicit Isometry(ComplexMatrix m) : m_(std::move(m)) {}
  ComplexMatrix m_;
};

struct IdempotentReport {
  double idempotent_deviation = 0.0;  // |p^2 - p|
  double hermitian_deviation = 0.0;   // |p - p^dagger|
  Verdict verdict;
};

IdempotentReport dagger_idempotent_report(const ComplexMatrix& p,
                                          double tol = kDefaultTol);

/// Splits a dagger idempotent p as i * dagger(i) with dagger(i) * i = I.
///
/// The rank is round(trace(p)). Columns of i are eigenvectors of p with
/// eigenvalue above 1/2, in eigensolver order, each scaled so that its first
/// entry of modulus > tol is real and positive. Throws CertificationError
/// when p is not a dagger idempotent or its trace is not an integer.
Isometry split_projection(const ComplexMatrix& p, double tol = kDefaultTol);

/// Nullspace basis (orthonormal columns) of a, using singular values below
/// `threshold`.
ComplexMatrix nullspace(const ComplexMatrix& a, double threshold);

}  // namespace twocp
