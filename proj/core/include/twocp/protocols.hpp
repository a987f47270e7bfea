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

// Measurements, teleportation and its security equation, evaluated as CP
// maps on element coordinates (see cpstar.hpp).
//
// Scalars: resource states have trace 1 and the uniform classical state is
// (1/n) sum_i e_i, so both sides of the teleportation equation are
// trace-preserving channels.

#include <cstddef>
#include <vector>

#include "twocp/cpstar.hpp"
#include "twocp/groupoid.hpp"

namespace twocp {

/// A CP map from `system` to C^outcomes. The system must be a single matrix
/// block or commutative.
struct Measurement {
  Measurement(CStarAlgebra system, std::size_t outcomes, CPMap map);

  CStarAlgebra system;
  std::size_t outcomes;
  CPMap map;
};

/// Residual of counit preservation: sum of outcome coordinates against the
/// trace of the input.
Verdict is_measurement(const Measurement& m, double tol = kDefaultTol);

struct POVM {
  std::vector<ComplexMatrix> elements;
};

/// Each element PSD and the elements summing to the identity.
Verdict check_povm(const POVM& p, double tol = kDefaultTol);

/// P_i with mu(rho)_i = tr(P_i rho). Throws CertificationError if some P_i
/// is not PSD.
POVM povm_from_measurement(const Measurement& m, double tol = kDefaultTol);

/// rho |-> sum_i tr(P_i rho) e_i on `system` (default: the full matrix
/// algebra on the elements' space). Throws CertificationError if some P_i
/// is not PSD; the identity sum is not required.
Measurement measurement_from_povm(const POVM& p, double tol = kDefaultTol);
Measurement measurement_from_povm(const POVM& p, const CStarAlgebra& system,
                                  double tol = kDefaultTol);

struct TeleportationData {
  std::size_t n;
  CStarAlgebra system;
  /// Operator on the Hilbert space of system (x) system.
  ComplexMatrix resource;
  /// On message (x) first resource half.
  Measurement measurement;
  /// One per outcome, each system -> system.
  std::vector<CPMap> corrections;
};

/// A map input -> C^outcomes (x) input.
struct ChannelWithRecord {
  CStarAlgebra input;
  std::size_t outcomes;
  CPMap map;
};

/// (1/n) sum_i e_i.
ComplexVector uniform_state(std::size_t n);

/// Throws CertificationError naming the first failed precondition: shapes,
/// resource PSD, measurement counit preservation and CP, corrections CP and
/// invertible.
void certify(const TeleportationData& t, double tol = kDefaultTol);

/// Prepare the resource, measure message with its first half, record the
/// outcome and correct the second half.
ChannelWithRecord lhs_teleportation(const TeleportationData& t);
/// Uniform record next to the untouched input.
ChannelWithRecord rhs_teleportation(const TeleportationData& t);

/// Certifies, then compares the two sides entrywise.
Verdict check_teleportation(const TeleportationData& t, double tol = kDefaultTol);

/// Measurement record with the second resource half discarded, against a
/// fresh uniform record with the message discarded. Both system -> C^n.
CPMap security_lhs(const TeleportationData& t);
CPMap security_rhs(const TeleportationData& t);
Verdict check_security(const TeleportationData& t, double tol = kDefaultTol);

/// Checks tr(U_i^dagger U_j) = k delta_ij and unitarity; throws
/// CertificationError otherwise.
Verdict check_unitary_error_basis(const std::vector<ComplexMatrix>& basis,
                                  double tol = kDefaultTol);

/// X^a Z^b for a, b < k, index a * k + b.
std::vector<ComplexMatrix> shift_clock_basis(std::size_t k);

/// I, X, Y, Z.
std::vector<ComplexMatrix> pauli_basis();

/// Teleportation of M_k from a unitary error basis U_i: resource
/// (I (x) v) |Phi+><Phi+| (I (x) v)^dagger, measurement on the basis
/// (U_i (x) I)|Phi+>, corrections conjugation by U_i v^dagger.
TeleportationData teleportation_from_error_basis(const std::vector<ComplexMatrix>& basis,
                                                 const ComplexMatrix& v,
                                                 double tol = kDefaultTol);
TeleportationData teleportation_from_error_basis(const std::vector<ComplexMatrix>& basis,
                                                 double tol = kDefaultTol);

/// Pauli teleportation of a qubit.
TeleportationData standard_qubit_teleportation();

/// One-time pad over a group G (a one-object groupoid): key state
/// (1/n) sum_g e_g (x) e_g, ciphertext c = m g, correction e_k |-> e_{c k^-1}.
/// Throws DomainError for more than one object.
TeleportationData one_time_pad(const FiniteGroupoid& group);

/// Same protocol with an arbitrary key distribution p over G.
TeleportationData one_time_pad(const FiniteGroupoid& group, const std::vector<double>& key);

}  // namespace twocp
