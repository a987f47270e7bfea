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

#include "twocp/groupoid.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace twocp {

namespace {

Eigen::Index idx(std::size_t v) { return static_cast<Eigen::Index>(v); }

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : "; ") + p;
  return out;
}

}  // namespace

FiniteGroupoid::FiniteGroupoid(std::size_t objects, std::vector<Morphism> morphisms,
                               const std::vector<std::array<std::size_t, 3>>& comp,
                               std::vector<std::size_t> ids, std::vector<std::size_t> inv)
    : objects_(objects),
      morphisms_(std::move(morphisms)),
      comp_(morphisms_.size() * morphisms_.size()),
      ids_(std::move(ids)),
      inv_(std::move(inv)) {
  const std::size_t n = morphisms_.size();
  for (const auto& m : morphisms_) {
    if (m.src >= objects_ || m.tgt >= objects_) {
      throw ShapeError("FiniteGroupoid: morphism endpoint out of range");
    }
  }
  for (const auto& [g, h, k] : comp) {
    if (g >= n || h >= n || k >= n) {
      throw ShapeError("FiniteGroupoid: composition entry out of range");
    }
    auto& slot = comp_[g * n + h];
    if (slot && *slot != k) {
      std::ostringstream os;
      os << "FiniteGroupoid: conflicting composites for (" << g << ", " << h << ")";
      throw ShapeError(os.str());
    }
    slot = k;
  }
  if (ids_.size() != objects_) throw ShapeError("FiniteGroupoid: need one identity per object");
  if (inv_.size() != n) throw ShapeError("FiniteGroupoid: need one inverse per morphism");
  for (const auto i : ids_) {
    if (i >= n) throw ShapeError("FiniteGroupoid: identity index out of range");
  }
  for (const auto i : inv_) {
    if (i >= n) throw ShapeError("FiniteGroupoid: inverse index out of range");
  }
}

std::optional<std::size_t> FiniteGroupoid::compose(std::size_t g, std::size_t h) const {
  if (g >= size() || h >= size()) throw ShapeError("FiniteGroupoid: morphism out of range");
  return comp_[g * size() + h];
}

std::vector<std::array<std::size_t, 3>> FiniteGroupoid::comp_table() const {
  std::vector<std::array<std::size_t, 3>> out;
  for (std::size_t g = 0; g < size(); ++g) {
    for (std::size_t h = 0; h < size(); ++h) {
      if (const auto k = compose(g, h)) out.push_back({g, h, *k});
    }
  }
  return out;
}

bool FiniteGroupoid::is_commutative() const {
  for (std::size_t g = 0; g < size(); ++g) {
    for (std::size_t h = 0; h < size(); ++h) {
      if (compose(g, h) != compose(h, g)) return false;
    }
  }
  return true;
}

FiniteGroupoid discrete_groupoid(std::size_t n) {
  std::vector<Morphism> ms;
  std::vector<std::array<std::size_t, 3>> comp;
  std::vector<std::size_t> ids(n);
  for (std::size_t o = 0; o < n; ++o) {
    ms.push_back({o, o});
    comp.push_back({o, o, o});
    ids[o] = o;
  }
  return FiniteGroupoid(n, std::move(ms), comp, ids, ids);
}

FiniteGroupoid cyclic_group(std::size_t n) {
  if (n == 0) throw DomainError("cyclic_group: order must be at least 1");
  std::vector<Morphism> ms(n, Morphism{0, 0});
  std::vector<std::array<std::size_t, 3>> comp;
  std::vector<std::size_t> inv(n);
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t h = 0; h < n; ++h) comp.push_back({g, h, (g + h) % n});
    inv[g] = (n - g) % n;
  }
  return FiniteGroupoid(1, std::move(ms), comp, {0}, std::move(inv));
}

FiniteGroupoid pair_groupoid(std::size_t n) {
  std::vector<Morphism> ms;
  std::vector<std::array<std::size_t, 3>> comp;
  std::vector<std::size_t> ids(n);
  std::vector<std::size_t> inv(n * n);
  for (std::size_t t = 0; t < n; ++t) {
    ids[t] = t * n + t;
    for (std::size_t s = 0; s < n; ++s) {
      ms.push_back({s, t});
      inv[t * n + s] = s * n + t;
      // (t <- s) after (s <- r) is (t <- r).
      for (std::size_t r = 0; r < n; ++r) comp.push_back({t * n + s, s * n + r, t * n + r});
    }
  }
  return FiniteGroupoid(n, std::move(ms), comp, std::move(ids), std::move(inv));
}

FiniteGroupoid disjoint_union(const FiniteGroupoid& a, const FiniteGroupoid& b) {
  const std::size_t na = a.size();
  const std::size_t oa = a.objects();
  std::vector<Morphism> ms = a.morphisms();
  for (const auto& m : b.morphisms()) ms.push_back({m.src + oa, m.tgt + oa});
  auto comp = a.comp_table();
  for (const auto& [g, h, k] : b.comp_table()) comp.push_back({g + na, h + na, k + na});
  std::vector<std::size_t> ids = a.ids();
  for (const auto i : b.ids()) ids.push_back(i + na);
  std::vector<std::size_t> inv = a.inv();
  for (const auto i : b.inv()) inv.push_back(i + na);
  return FiniteGroupoid(oa + b.objects(), std::move(ms), comp, std::move(ids),
                        std::move(inv));
}

GroupoidReport validate_groupoid(const FiniteGroupoid& g) {
  GroupoidReport r;
  auto note = [&r](auto&&... parts) {
    std::ostringstream os;
    (os << ... << parts);
    r.violations.push_back(os.str());
  };
  const std::size_t n = g.size();
  const auto& ms = g.morphisms();

  for (std::size_t o = 0; o < g.objects(); ++o) {
    const auto& m = ms[g.ids()[o]];
    if (m.src != o || m.tgt != o) note("identity of object ", o, " is not a loop at ", o);
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const auto k = g.compose(a, b);
      const bool composable = ms[a].src == ms[b].tgt;
      if (composable && !k) note("composite of ", a, " after ", b, " is missing");
      if (!composable && k) note("composite of ", a, " after ", b, " defined but not composable");
      if (composable && k && (ms[*k].src != ms[b].src || ms[*k].tgt != ms[a].tgt)) {
        note("composite of ", a, " after ", b, " has wrong endpoints");
      }
    }
  }
  if (!r.valid()) return r;

  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const auto ab = g.compose(a, b);
      if (!ab) continue;
      for (std::size_t c = 0; c < n; ++c) {
        const auto bc = g.compose(b, c);
        if (!bc) continue;
        if (g.compose(*ab, c) != g.compose(a, *bc)) {
          note("composition not associative at (", a, ", ", b, ", ", c, ")");
        }
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (g.compose(a, g.ids()[ms[a].src]) != a || g.compose(g.ids()[ms[a].tgt], a) != a) {
      note("identities are not neutral for morphism ", a);
    }
    const std::size_t i = g.inv()[a];
    if (g.compose(a, i) != g.ids()[ms[a].tgt] || g.compose(i, a) != g.ids()[ms[a].src]) {
      note("inverse of morphism ", a, " is wrong");
    }
  }
  return r;
}

FrobeniusAlgebra groupoid_to_algebra(const FiniteGroupoid& g) {
  const auto report = validate_groupoid(g);
  if (!report.valid()) {
    throw DomainError("groupoid_to_algebra: invalid groupoid: " + join(report.violations));
  }
  const std::size_t n = g.size();
  if (n == 0) throw DomainError("groupoid_to_algebra: groupoid has no morphisms");
  ComplexMatrix mult = ComplexMatrix::Zero(idx(n), idx(n * n));
  for (const auto& [a, b, k] : g.comp_table()) mult(idx(k), idx(a * n + b)) = 1.0;
  ComplexMatrix unit = ComplexMatrix::Zero(idx(n), 1);
  for (const auto i : g.ids()) unit(idx(i), 0) = 1.0;
  return FrobeniusAlgebra(n, std::move(mult), std::move(unit));
}

namespace {

// 0 or 1, or throws naming the entry.
bool zero_one(const Complex& z, const char* name, Eigen::Index r, Eigen::Index c,
              double tol) {
  const bool zero = std::abs(z) <= tol;
  const bool one = std::abs(z - Complex(1.0)) <= tol;
  if (!zero && !one) {
    std::ostringstream os;
    os << "algebra_to_groupoid: " << name << "[" << r << ", " << c << "] = " << z.real();
    if (z.imag() != 0.0) os << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
    os << " is not 0 or 1";
    throw DomainError(os.str());
  }
  return one;
}

}  // namespace

FiniteGroupoid algebra_to_groupoid(const FrobeniusAlgebra& f, double tol) {
  const std::size_t n = f.dim();
  std::vector<std::array<std::size_t, 3>> comp;
  std::vector<std::optional<std::size_t>> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t k = 0; k < n; ++k) {
        if (!zero_one(f.mult()(idx(k), idx(a * n + b)), "mult", idx(k), idx(a * n + b), tol)) {
          continue;
        }
        if (table[a * n + b]) {
          std::ostringstream os;
          os << "algebra_to_groupoid: product of " << a << " and " << b
             << " has several components";
          throw DomainError(os.str());
        }
        table[a * n + b] = k;
        comp.push_back({a, b, k});
      }
    }
  }
  std::vector<std::size_t> ids;
  for (std::size_t k = 0; k < n; ++k) {
    if (zero_one(f.unit()(idx(k), 0), "unit", idx(k), 0, tol)) ids.push_back(k);
  }

  // Endpoints: the identity fixing a morphism on each side.
  auto object_of = [&](std::size_t a, bool source) -> std::size_t {
    std::optional<std::size_t> found;
    for (std::size_t o = 0; o < ids.size(); ++o) {
      const auto k = source ? table[a * n + ids[o]] : table[ids[o] * n + a];
      if (k && *k == a) {
        if (found) {
          found.reset();
          break;
        }
        found = o;
      }
    }
    if (!found) {
      std::ostringstream os;
      os << "algebra_to_groupoid: morphism " << a << " has no unique "
         << (source ? "source" : "target") << " identity";
      throw DomainError(os.str());
    }
    return *found;
  };
  std::vector<Morphism> ms;
  for (std::size_t a = 0; a < n; ++a) ms.push_back({object_of(a, true), object_of(a, false)});

  std::vector<std::size_t> inv(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::optional<std::size_t> found;
    for (std::size_t b = 0; b < n && !found; ++b) {
      if (table[a * n + b] == ids[ms[a].tgt]) found = b;
    }
    if (!found) {
      std::ostringstream os;
      os << "algebra_to_groupoid: morphism " << a << " has no inverse";
      throw DomainError(os.str());
    }
    inv[a] = *found;
  }

  const std::size_t objects = ids.size();
  FiniteGroupoid g(objects, std::move(ms), comp, std::move(ids), std::move(inv));
  const auto report = validate_groupoid(g);
  if (!report.valid()) {
    throw DomainError("algebra_to_groupoid: not a groupoid: " + join(report.violations));
  }
  return g;
}

std::optional<std::vector<std::size_t>> find_isomorphism(const FiniteGroupoid& a,
                                                         const FiniteGroupoid& b,
                                                         std::size_t max_morphisms) {
  if (a.size() > max_morphisms || b.size() > max_morphisms) {
    std::ostringstream os;
    os << "find_isomorphism: more than " << max_morphisms << " morphisms";
    throw DomainError(os.str());
  }
  if (a.size() != b.size() || a.objects() != b.objects()) return std::nullopt;
  const std::size_t n = a.size();
  std::vector<bool> is_id_b(n, false);
  for (const auto i : b.ids()) is_id_b[i] = true;

  std::vector<std::size_t> pi(n);
  std::iota(pi.begin(), pi.end(), 0);
  do {
    bool ok = std::all_of(a.ids().begin(), a.ids().end(),
                          [&](std::size_t i) { return is_id_b[pi[i]]; });
    for (std::size_t g = 0; ok && g < n; ++g) {
      for (std::size_t h = 0; ok && h < n; ++h) {
        const auto k = a.compose(g, h);
        const auto l = b.compose(pi[g], pi[h]);
        ok = k.has_value() == l.has_value() && (!k || pi[*k] == *l);
      }
    }
    if (ok) return pi;
  } while (std::next_permutation(pi.begin(), pi.end()));
  return std::nullopt;
}

}  // namespace twocp
