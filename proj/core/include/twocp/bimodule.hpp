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

// Dagger bimodules between Frobenius algebras and their composition.
//
// Tensor factors of an action are ordered C (x) M (x) D, left-most
// significant, matching kron.

#include <cstddef>
#include <optional>

#include "twocp/frobenius.hpp"
#include "twocp/linalg.hpp"

namespace twocp {

class DaggerBimodule {
 public:
  /// Shape-checked. `carrier` optionally records the algebra structure of M
  /// itself; only the matrix-model decomposition needs it.
  DaggerBimodule(FrobeniusAlgebra left, FrobeniusAlgebra right,
                 std::size_t carrier_dim, ComplexMatrix action,
                 std::optional<FrobeniusAlgebra> carrier = std::nullopt);

  const FrobeniusAlgebra& left() const noexcept { return left_; }
  const FrobeniusAlgebra& right() const noexcept { return right_; }
  std::size_t carrier_dim() const noexcept { return carrier_dim_; }
  const ComplexMatrix& action() const noexcept { return action_; }
  const std::optional<FrobeniusAlgebra>& carrier() const noexcept { return carrier_; }

  /// C (x) M -> M, the action with D's unit plugged in.
  ComplexMatrix left_action() const;
  /// M (x) D -> M, the action with C's unit plugged in.
  ComplexMatrix right_action() const;

 private:
  FrobeniusAlgebra left_;
  FrobeniusAlgebra right_;
  std::size_t carrier_dim_;
  ComplexMatrix action_;
  std::optional<FrobeniusAlgebra> carrier_;
};

struct BimoduleReport {
  Verdict associative;
  Verdict unital;
  Verdict dagger;

  bool ok() const { return associative.pass && unital.pass && dagger.pass; }
  Verdict overall() const { return all_of({associative, unital, dagger}); }
};

BimoduleReport check_bimodule(const DaggerBimodule& b, double tol = kDefaultTol);

/// A as an A-A-bimodule acting by multiplication on both sides.
DaggerBimodule identity_bimodule(const FrobeniusAlgebra& a);

struct BimoduleHom {
  DaggerBimodule source;
  DaggerBimodule target;
  ComplexMatrix map;  // target.carrier_dim() x source.carrier_dim()
};

/// Residual of map * M = M' * (id (x) map (x) id). Throws DomainError if the
/// two bimodules are over different algebras.
Verdict check_hom(const BimoduleHom& h, double tol = kDefaultTol);

/// The dagger idempotent on M (x) N joining M's right action and N's left
/// action through D's cup. Throws DomainError when m.right() and n.left()
/// differ.
ComplexMatrix composite_idempotent(const DaggerBimodule& m, const DaggerBimodule& n,
                                   double tol = kDefaultTol);

struct Composite {
  DaggerBimodule bimodule;
  /// Inclusion of the composite carrier into M (x) N.
  Isometry inclusion;
};

/// Splits composite_idempotent and restricts the joined action to its image.
Composite compose_bimodules(const DaggerBimodule& m, const DaggerBimodule& n,
                            double tol = kDefaultTol);

/// The composite action on the image of a given inclusion into M (x) N.
DaggerBimodule composite_along(const DaggerBimodule& m, const DaggerBimodule& n,
                               const Isometry& inclusion);

/// i'^dagger (f (x) g) i, between the composites selected by i and i'.
BimoduleHom horizontal_compose_homs(const BimoduleHom& f, const BimoduleHom& g,
                                    const Isometry& i, const Isometry& i_prime);

/// g after f.
BimoduleHom vertical_compose_homs(const BimoduleHom& f, const BimoduleHom& g);

/// Comparison from identity_bimodule(C) composed with M (inclusion i) to M.
ComplexMatrix left_unitor(const DaggerBimodule& m, const Isometry& i);
/// Comparison from M composed with identity_bimodule(D) (inclusion i) to M.
ComplexMatrix right_unitor(const DaggerBimodule& m, const Isometry& i);

/// Comparison between (M N) P and M (N P) given the four inclusions
/// (i_mn: MN -> M (x) N, i_mn_p: (MN)P -> MN (x) P, and so on).
ComplexMatrix associator_comparison(std::size_t dim_m, std::size_t dim_n,
                                    std::size_t dim_p, const Isometry& i_mn,
                                    const Isometry& i_mn_p, const Isometry& i_np,
                                    const Isometry& i_m_np);

struct BoundaryPair {
  DaggerBimodule left;   // L, an A-I-bimodule
  DaggerBimodule right;  // R, an I-A-bimodule
};

/// The boundary bimodules of A, both acting by multiplication. The trivial
/// algebra I is classical_structure(1).
BoundaryPair boundary_bimodules(const FrobeniusAlgebra& a);

/// Comparison from the composite of R then L (inclusion i) to A.
ComplexMatrix boundary_comparison(const FrobeniusAlgebra& a, const Isometry& i);

struct BoundaryReport {
  Verdict zigzag_left;
  Verdict zigzag_right;
  Verdict bubble;
  Verdict twist;

  bool ok() const {
    return zigzag_left.pass && zigzag_right.pass && bubble.pass && twist.pass;
  }
};

/// Zig-zag and hole-elimination identities of the boundary of A. Throws
/// DomainError when A is not commutative.
BoundaryReport check_topological_boundary(const FrobeniusAlgebra& a,
                                          double tol = kDefaultTol);

/// (C (x) C')-(D (x) D')-bimodule on M (x) N.
DaggerBimodule tensor_bimodules(const DaggerBimodule& m, const DaggerBimodule& n);

/// Both over the same algebras; carrier M (+) N.
DaggerBimodule direct_sum_bimodules(const DaggerBimodule& m, const DaggerBimodule& n,
                                    double tol = kDefaultTol);

/// Transports the action along a unitary u : M -> M'.
DaggerBimodule conjugate_bimodule(const DaggerBimodule& m, const ComplexMatrix& u);

}  // namespace twocp
