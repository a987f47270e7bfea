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

#include "twocp/bimodule.hpp"

#include <sstream>

namespace twocp {

namespace {

Eigen::Index idx(std::size_t v) { return static_cast<Eigen::Index>(v); }

void require_same(const FrobeniusAlgebra& a, const FrobeniusAlgebra& b,
                  double tol, const char* what) {
  if (!same_algebra(a, b, tol)) {
    std::ostringstream os;
    os << what << ": algebras differ (dims " << a.dim() << " and " << b.dim() << ")";
    throw DomainError(os.str());
  }
}

// Sum over the cup of D = sum_ab cup_ab e_a (x) e_b of kron(x_a, y_b).
template <typename LeftFn, typename RightFn>
ComplexMatrix through_cup(const FrobeniusAlgebra& d, LeftFn x, RightFn y) {
  const ComplexMatrix cup = d.cup();
  ComplexMatrix out;
  for (std::size_t a = 0; a < d.dim(); ++a) {
    for (std::size_t b = 0; b < d.dim(); ++b) {
      const Complex w = cup(idx(a * d.dim() + b), 0);
      if (w == Complex(0.0)) continue;
      ComplexMatrix term = w * kron(x(a), y(b));
      if (out.size() == 0) {
        out = std::move(term);
      } else {
        out += term;
      }
    }
  }
  return out;
}

}  // namespace

DaggerBimodule::DaggerBimodule(FrobeniusAlgebra left, FrobeniusAlgebra right,
                               std::size_t carrier_dim, ComplexMatrix action,
                               std::optional<FrobeniusAlgebra> carrier)
    : left_(std::move(left)),
      right_(std::move(right)),
      carrier_dim_(carrier_dim),
      action_(std::move(action)),
      carrier_(std::move(carrier)) {
  const auto m = idx(carrier_dim_);
  const auto cols = idx(left_.dim() * carrier_dim_ * right_.dim());
  if (action_.rows() != m || action_.cols() != cols) {
    std::ostringstream os;
    os << "DaggerBimodule: action must be " << m << "x" << cols << ", got "
       << action_.rows() << "x" << action_.cols();
    throw ShapeError(os.str());
  }
  if (carrier_ && carrier_->dim() != carrier_dim_) {
    throw ShapeError("DaggerBimodule: carrier algebra has the wrong dimension");
  }
}

ComplexMatrix DaggerBimodule::left_action() const {
  return action_ * kron(identity(left_.dim()), identity(carrier_dim_), right_.unit());
}

ComplexMatrix DaggerBimodule::right_action() const {
  return action_ * kron(left_.unit(), identity(carrier_dim_), identity(right_.dim()));
}

BimoduleReport check_bimodule(const DaggerBimodule& b, double tol) {
  const auto& c = b.left();
  const auto& d = b.right();
  const ComplexMatrix im = identity(b.carrier_dim());
  const ComplexMatrix ic = identity(c.dim());
  const ComplexMatrix id = identity(d.dim());
  const ComplexMatrix& act = b.action();
  const ComplexMatrix stacked = kron(ic, act, id);

  BimoduleReport r;
  r.associative = Verdict::within(
      max_abs_diff(act * stacked, act * kron(c.mult(), im, d.mult())), tol);
  r.unital = Verdict::within(max_abs_diff(act * kron(c.unit(), im, d.unit()), im), tol);
  r.dagger = Verdict::within(
      max_abs_diff(act.adjoint(), stacked * kron(c.cup(), im, d.cup())), tol);
  return r;
}

DaggerBimodule identity_bimodule(const FrobeniusAlgebra& a) {
  return DaggerBimodule(a, a, a.dim(), a.mult() * kron(a.mult(), identity(a.dim())), a);
}

Verdict check_hom(const BimoduleHom& h, double tol) {
  require_same(h.source.left(), h.target.left(), tol, "check_hom");
  require_same(h.source.right(), h.target.right(), tol, "check_hom");
  if (h.map.rows() != idx(h.target.carrier_dim()) ||
      h.map.cols() != idx(h.source.carrier_dim())) {
    throw ShapeError("check_hom: map does not fit the carriers");
  }
  const ComplexMatrix lhs = h.map * h.source.action();
  const ComplexMatrix rhs =
      h.target.action() *
      kron(identity(h.source.left().dim()), h.map, identity(h.source.right().dim()));
  return Verdict::within(max_abs_diff(lhs, rhs), tol);
}

ComplexMatrix composite_idempotent(const DaggerBimodule& m, const DaggerBimodule& n,
                                   double tol) {
  require_same(m.right(), n.left(), tol, "composite_idempotent");
  const auto& d = m.right();
  const ComplexMatrix im = identity(m.carrier_dim());
  const ComplexMatrix in = identity(n.carrier_dim());
  return through_cup(
      d,
      [&](std::size_t a) {
        return ComplexMatrix(m.action() *
                             kron(m.left().unit(), im, basis_vector(d.dim(), a)));
      },
      [&](std::size_t b) {
        return ComplexMatrix(n.action() *
                             kron(basis_vector(d.dim(), b), in, n.right().unit()));
      });
}

DaggerBimodule composite_along(const DaggerBimodule& m, const DaggerBimodule& n,
                               const Isometry& inclusion) {
  const auto& d = m.right();
  if (inclusion.rows() != m.carrier_dim() * n.carrier_dim()) {
    throw ShapeError("composite_along: inclusion does not land in M (x) N");
  }
  const ComplexMatrix ic = identity(m.left().dim());
  const ComplexMatrix ie = identity(n.right().dim());
  const ComplexMatrix im = identity(m.carrier_dim());
  const ComplexMatrix in = identity(n.carrier_dim());
  // C (x) M (x) N (x) E -> M (x) N, middle wires joined through D.
  const ComplexMatrix joined = through_cup(
      d,
      [&](std::size_t a) {
        return ComplexMatrix(m.action() * kron(ic, im, basis_vector(d.dim(), a)));
      },
      [&](std::size_t b) {
        return ComplexMatrix(n.action() * kron(basis_vector(d.dim(), b), in, ie));
      });
  const ComplexMatrix& i = inclusion.matrix();
  return DaggerBimodule(m.left(), n.right(), inclusion.rank(),
                        i.adjoint() * joined * kron(ic, i, ie));
}

Composite compose_bimodules(const DaggerBimodule& m, const DaggerBimodule& n,
                            double tol) {
  const ComplexMatrix p = composite_idempotent(m, n, tol);
  Isometry i = split_projection(p, tol);
  DaggerBimodule b = composite_along(m, n, i);
  return {std::move(b), std::move(i)};
}

BimoduleHom horizontal_compose_homs(const BimoduleHom& f, const BimoduleHom& g,
                                    const Isometry& i, const Isometry& i_prime) {
  if (i.rows() != f.source.carrier_dim() * g.source.carrier_dim() ||
      i_prime.rows() != f.target.carrier_dim() * g.target.carrier_dim()) {
    throw ShapeError("horizontal_compose_homs: inclusions do not match the homs");
  }
  return {composite_along(f.source, g.source, i),
          composite_along(f.target, g.target, i_prime),
          i_prime.matrix().adjoint() * kron(f.map, g.map) * i.matrix()};
}

BimoduleHom vertical_compose_homs(const BimoduleHom& f, const BimoduleHom& g) {
  if (f.target.carrier_dim() != g.source.carrier_dim()) {
    throw ShapeError("vertical_compose_homs: carriers do not match");
  }
  return {f.source, g.target, g.map * f.map};
}

ComplexMatrix left_unitor(const DaggerBimodule& m, const Isometry& i) {
  return m.left_action() * i.matrix();
}

ComplexMatrix right_unitor(const DaggerBimodule& m, const Isometry& i) {
  return m.right_action() * i.matrix();
}

ComplexMatrix associator_comparison(std::size_t dim_m, std::size_t dim_n,
                                    std::size_t dim_p, const Isometry& i_mn,
                                    const Isometry& i_mn_p, const Isometry& i_np,
                                    const Isometry& i_m_np) {
  const ComplexMatrix j1 = kron(i_mn.matrix(), identity(dim_p)) * i_mn_p.matrix();
  const ComplexMatrix j2 = kron(identity(dim_m), i_np.matrix()) * i_m_np.matrix();
  if (j1.rows() != idx(dim_m * dim_n * dim_p) || j2.rows() != j1.rows()) {
    throw ShapeError("associator_comparison: inclusions do not match the carriers");
  }
  return j1.adjoint() * j2;
}

BoundaryPair boundary_bimodules(const FrobeniusAlgebra& a) {
  const FrobeniusAlgebra unit = classical_structure(1);
  return {DaggerBimodule(a, unit, a.dim(), a.mult(), a),
          DaggerBimodule(unit, a, a.dim(), a.mult(), a)};
}

ComplexMatrix boundary_comparison(const FrobeniusAlgebra& a, const Isometry& i) {
  if (i.rows() != a.dim() * a.dim()) {
    throw ShapeError("boundary_comparison: inclusion does not land in A (x) A");
  }
  return a.mult() * i.matrix();
}

BoundaryReport check_topological_boundary(const FrobeniusAlgebra& a, double tol) {
  const ComplexMatrix swap = swap_matrix(a.dim(), a.dim());
  const double comm = max_abs_diff(a.mult() * swap, a.mult());
  if (comm > tol) {
    std::ostringstream os;
    os << "check_topological_boundary: algebra is not commutative (deviation "
       << comm << ")";
    throw DomainError(os.str());
  }
  const ComplexMatrix ia = identity(a.dim());
  BoundaryReport r;
  r.zigzag_left =
      Verdict::within(max_abs_diff(kron(a.cap(), ia) * kron(ia, a.cup()), ia), tol);
  r.zigzag_right =
      Verdict::within(max_abs_diff(kron(ia, a.cap()) * kron(a.cup(), ia), ia), tol);
  r.bubble = Verdict::within(max_abs_diff(a.mult() * a.comult(), ia), tol);
  r.twist = Verdict::within(comm, tol);
  return r;
}

DaggerBimodule tensor_bimodules(const DaggerBimodule& m, const DaggerBimodule& n) {
  const std::vector<std::size_t> dims = {m.left().dim(),   n.left().dim(),
                                         m.carrier_dim(),  n.carrier_dim(),
                                         m.right().dim(),  n.right().dim()};
  const ComplexMatrix shuffle = permute_factors(dims, {0, 2, 4, 1, 3, 5});
  std::optional<FrobeniusAlgebra> carrier;
  if (m.carrier() && n.carrier()) carrier = tensor(*m.carrier(), *n.carrier());
  return DaggerBimodule(tensor(m.left(), n.left()), tensor(m.right(), n.right()),
                        m.carrier_dim() * n.carrier_dim(),
                        kron(m.action(), n.action()) * shuffle, std::move(carrier));
}

DaggerBimodule direct_sum_bimodules(const DaggerBimodule& m, const DaggerBimodule& n,
                                    double tol) {
  require_same(m.left(), n.left(), tol, "direct_sum_bimodules");
  require_same(m.right(), n.right(), tol, "direct_sum_bimodules");
  const std::size_t c = m.left().dim();
  const std::size_t d = m.right().dim();
  const std::size_t dm = m.carrier_dim();
  const std::size_t dn = n.carrier_dim();
  const std::size_t s = dm + dn;
  ComplexMatrix act = ComplexMatrix::Zero(idx(s), idx(c * s * d));
  for (std::size_t a = 0; a < c; ++a) {
    for (std::size_t b = 0; b < d; ++b) {
      for (std::size_t x = 0; x < dm; ++x) {
        act.block(0, idx((a * s + x) * d + b), idx(dm), 1) =
            m.action().col(idx((a * dm + x) * d + b));
      }
      for (std::size_t x = 0; x < dn; ++x) {
        act.block(idx(dm), idx((a * s + dm + x) * d + b), idx(dn), 1) =
            n.action().col(idx((a * dn + x) * d + b));
      }
    }
  }
  std::optional<FrobeniusAlgebra> carrier;
  if (m.carrier() && n.carrier()) carrier = direct_sum(*m.carrier(), *n.carrier());
  return DaggerBimodule(m.left(), m.right(), s, std::move(act), std::move(carrier));
}

DaggerBimodule conjugate_bimodule(const DaggerBimodule& m, const ComplexMatrix& u) {
  if (u.rows() != u.cols() || u.cols() != idx(m.carrier_dim())) {
    throw ShapeError("conjugate_bimodule: unitary does not act on the carrier");
  }
  const ComplexMatrix ud = u.adjoint();
  std::optional<FrobeniusAlgebra> carrier;
  if (m.carrier()) {
    carrier = FrobeniusAlgebra(m.carrier_dim(), u * m.carrier()->mult() * kron(ud, ud),
                               u * m.carrier()->unit());
  }
  return DaggerBimodule(
      m.left(), m.right(), m.carrier_dim(),
      u * m.action() * kron(identity(m.left().dim()), ud, identity(m.right().dim())),
      std::move(carrier));
}

}  // namespace twocp
