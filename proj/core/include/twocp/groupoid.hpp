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

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "twocp/frobenius.hpp"

namespace twocp {

struct Morphism {
  std::size_t src = 0;
  std::size_t tgt = 0;

  friend bool operator==(const Morphism&, const Morphism&) = default;
};

/// A finite groupoid given by tables. comp(g, h) is g after h; an entry is
/// expected exactly when src(g) == tgt(h). The constructor checks index
/// ranges only; validate_groupoid checks the axioms.
class FiniteGroupoid {
 public:
  FiniteGroupoid(std::size_t objects, std::vector<Morphism> morphisms,
                 const std::vector<std::array<std::size_t, 3>>& comp,
                 std::vector<std::size_t> ids, std::vector<std::size_t> inv);

  std::size_t objects() const noexcept { return objects_; }
  std::size_t size() const noexcept { return morphisms_.size(); }
  const std::vector<Morphism>& morphisms() const noexcept { return morphisms_; }
  const Morphism& morphism(std::size_t g) const { return morphisms_.at(g); }
  const std::vector<std::size_t>& ids() const noexcept { return ids_; }
  const std::vector<std::size_t>& inv() const noexcept { return inv_; }

  std::optional<std::size_t> compose(std::size_t g, std::size_t h) const;
  /// All (g, h, g after h) triples, ordered by (g, h).
  std::vector<std::array<std::size_t, 3>> comp_table() const;

  bool is_commutative() const;

 private:
  std::size_t objects_;
  std::vector<Morphism> morphisms_;
  std::vector<std::optional<std::size_t>> comp_;
  std::vector<std::size_t> ids_;
  std::vector<std::size_t> inv_;
};

/// n objects, identities only.
FiniteGroupoid discrete_groupoid(std::size_t n);
/// Z_n on one object; morphism g composes as g + h mod n.
FiniteGroupoid cyclic_group(std::size_t n);
/// Exactly one morphism between any two of n objects; morphism t * n + s
/// goes from s to t.
FiniteGroupoid pair_groupoid(std::size_t n);
FiniteGroupoid disjoint_union(const FiniteGroupoid& a, const FiniteGroupoid& b);

struct GroupoidReport {
  std::vector<std::string> violations;
  bool valid() const noexcept { return violations.empty(); }
};

GroupoidReport validate_groupoid(const FiniteGroupoid& g);

/// Convolution algebra on C^{morphisms}: e_g e_h = e_{g after h} when
/// composable, unit the sum of identities. Throws DomainError for an invalid
/// groupoid.
FrobeniusAlgebra groupoid_to_algebra(const FiniteGroupoid& g);

/// Reads a groupoid off a 0/1 multiplication. Throws DomainError naming the
/// first entry outside {0, 1} (within tol), or the failed axioms.
FiniteGroupoid algebra_to_groupoid(const FrobeniusAlgebra& f, double tol = kDefaultTol);

/// A bijection on morphisms (index in a -> index in b) preserving
/// composition, found by exhaustive search. Throws DomainError above
/// max_morphisms morphisms.
std::optional<std::vector<std::size_t>> find_isomorphism(const FiniteGroupoid& a,
                                                         const FiniteGroupoid& b,
                                                         std::size_t max_morphisms = 8);

}  // namespace twocp
