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

#include <cstddef>
#include <vector>

#include "twocp/linalg.hpp"

namespace twocp {

/// A (candidate) special dagger Frobenius algebra on C^dim, given by its
/// multiplication (dim x dim^2) and unit (dim x 1). The comultiplication and
/// counit are the daggers.
///
/// Construction only validates shapes. Values that do not come from the
/// named constructors below must pass check_frobenius before use.
class FrobeniusAlgebra {
 public:
  FrobeniusAlgebra(std::size_t dim, ComplexMatrix mult, ComplexMatrix unit);

  std::size_t dim() const noexcept { return dim_; }
  const ComplexMatrix& mult() const noexcept { return mult_; }
  const ComplexMatrix& unit() const noexcept { return unit_; }
  ComplexMatrix comult() const { return mult_.adjoint(); }
  ComplexMatrix counit() const { return unit_.adjoint(); }

  /// comult * unit : I -> A (x) A.
  ComplexMatrix cup() const { return mult_.adjoint() * unit_; }
  /// counit * mult : A (x) A -> I.
  ComplexMatrix cap() const { return unit_.adjoint() * mult_; }

 private:
  std::size_t dim_;
  ComplexMatrix mult_;
  ComplexMatrix unit_;
};

struct FrobeniusReport {
  Verdict associative;
  Verdict unital;
  Verdict frobenius;
  Verdict special;
  Verdict commutative;

  /// The four laws required of an object of CP*; commutativity is reported
  /// but not required.
  bool structural() const {
    return associative.pass && unital.pass && frobenius.pass && special.pass;
  }
};

FrobeniusReport check_frobenius(const FrobeniusAlgebra& f,
                                double tol = kDefaultTol);

/// Pointwise multiplication on C^n: e_i e_j = delta_ij e_i, unit sum_i e_i.
FrobeniusAlgebra classical_structure(std::size_t n);

/// The k x k matrix algebra on C^{k^2} in the matrix-units basis e_ab
/// (index a * k + b), with e_ab e_cd = delta_bc e_ad / sqrt(k) and unit
/// sqrt(k) sum_a e_aa. The scalars make the algebra special and unital at
/// the same time; the unscaled product has mult * comult = k * id.
FrobeniusAlgebra matrix_algebra(std::size_t k);

FrobeniusAlgebra direct_sum(const FrobeniusAlgebra& a,
                            const FrobeniusAlgebra& b);

/// Algebra on A (x) B with componentwise multiplication.
FrobeniusAlgebra tensor(const FrobeniusAlgebra& a, const FrobeniusAlgebra& b);

/// Same dimension and same structure maps within tol.
bool same_algebra(const FrobeniusAlgebra& a, const FrobeniusAlgebra& b,
                  double tol = kDefaultTol);

/// All copyable states x (comult(x) = x (x) x) of a commutative algebra,
/// ordered by the position of their first entry of modulus > tol. Throws
/// DomainError for non-commutative input.
std::vector<ComplexVector> copyable_states(const FrobeniusAlgebra& f,
                                           double tol = kDefaultTol);

/// Left multiplication operator x |-> mult(a (x) x).
ComplexMatrix left_multiplication(const FrobeniusAlgebra& f,
                                  const ComplexVector& a);

}  // namespace twocp
