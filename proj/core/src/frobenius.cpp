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

#include "twocp/frobenius.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace twocp {

FrobeniusAlgebra::FrobeniusAlgebra(std::size_t dim, ComplexMatrix mult,
                                   ComplexMatrix unit)
    : dim_(dim), mult_(std::move(mult)), unit_(std::move(unit)) {
  const auto n = static_cast<Eigen::Index>(dim);
  if (mult_.rows() != n || mult_.cols() != n * n) {
    std::ostringstream os;
    os << "FrobeniusAlgebra: mult must be " << n << "x" << n * n << ", got "
       << mult_.rows() << "x" << mult_.cols();
    throw ShapeError(os.str());
  }
  if (unit_.rows() != n || unit_.cols() != 1) {
    std::ostringstream os;
    os << "FrobeniusAlgebra: unit must be " << n << "x1, got " << unit_.rows()
       << "x" << unit_.cols();
    throw ShapeError(os.str());
  }
}

FrobeniusReport check_frobenius(const FrobeniusAlgebra& f, double tol) {
  const auto& m = f.mult();
  const auto& u = f.unit();
  const ComplexMatrix id = identity(f.dim());
  const ComplexMatrix md = m.adjoint();

  FrobeniusReport r;
  r.associative =
      Verdict::within(max_abs_diff(m * kron(m, id), m * kron(id, m)), tol);
  r.unital = Verdict::within(std::max(max_abs_diff(m * kron(u, id), id),
                                      max_abs_diff(m * kron(id, u), id)),
                             tol);
  const ComplexMatrix middle = md * m;
  r.frobenius = Verdict::within(
      std::max(max_abs_diff(kron(id, m) * kron(md, id), middle),
               max_abs_diff(kron(m, id) * kron(id, md), middle)),
      tol);
  r.special = Verdict::within(max_abs_diff(m * md, id), tol);
  r.commutative =
      Verdict::within(max_abs_diff(m * swap_matrix(f.dim(), f.dim()), m), tol);
  return r;
}

FrobeniusAlgebra classical_structure(std::size_t n) {
  if (n == 0) throw DomainError("classical_structure: n must be at least 1");
  const auto ni = static_cast<Eigen::Index>(n);
  ComplexMatrix mult = ComplexMatrix::Zero(ni, ni * ni);
  for (Eigen::Index i = 0; i < ni; ++i) mult(i, i * ni + i) = 1.0;
  return {n, std::move(mult), ComplexMatrix::Ones(ni, 1)};
}

FrobeniusAlgebra matrix_algebra(std::size_t k) {
  if (k == 0) throw DomainError("matrix_algebra: k must be at least 1");
  const auto ki = static_cast<Eigen::Index>(k);
  const Eigen::Index d = ki * ki;
  const double scale = 1.0 / std::sqrt(static_cast<double>(k));
  ComplexMatrix mult = ComplexMatrix::Zero(d, d * d);
  for (Eigen::Index a = 0; a < ki; ++a) {
    for (Eigen::Index b = 0; b < ki; ++b) {
      for (Eigen::Index c = 0; c < ki; ++c) {
        // e_ab * e_bc = e_ac
        mult(a * ki + c, (a * ki + b) * d + (b * ki + c)) = scale;
      }
    }
  }
  ComplexMatrix unit = ComplexMatrix::Zero(d, 1);
  for (Eigen::Index a = 0; a < ki; ++a) unit(a * ki + a, 0) = 1.0 / scale;
  return {k * k, std::move(mult), std::move(unit)};
}

FrobeniusAlgebra direct_sum(const FrobeniusAlgebra& a,
                            const FrobeniusAlgebra& b) {
  const auto da = static_cast<Eigen::Index>(a.dim());
  const auto db = static_cast<Eigen::Index>(b.dim());
  const Eigen::Index d = da + db;
  ComplexMatrix mult = ComplexMatrix::Zero(d, d * d);
  for (Eigen::Index x = 0; x < da; ++x) {
    for (Eigen::Index y = 0; y < da; ++y) {
      mult.block(0, x * d + y, da, 1) = a.mult().col(x * da + y);
    }
  }
  for (Eigen::Index x = 0; x < db; ++x) {
    for (Eigen::Index y = 0; y < db; ++y) {
      mult.block(da, (da + x) * d + (da + y), db, 1) = b.mult().col(x * db + y);
    }
  }
  ComplexMatrix unit(d, 1);
  unit << a.unit(), b.unit();
  return {a.dim() + b.dim(), std::move(mult), std::move(unit)};
}

FrobeniusAlgebra tensor(const FrobeniusAlgebra& a, const FrobeniusAlgebra& b) {
  // (a1 b1)(a2 b2) = (a1 a2)(b1 b2): route A B A B to A A B B first.
  const ComplexMatrix shuffle =
      kron(identity(a.dim()), swap_matrix(b.dim(), a.dim()), identity(b.dim()));
  return {a.dim() * b.dim(), kron(a.mult(), b.mult()) * shuffle,
          kron(a.unit(), b.unit())};
}

bool same_algebra(const FrobeniusAlgebra& a, const FrobeniusAlgebra& b,
                  double tol) {
  return a.dim() == b.dim() && max_abs_diff(a.mult(), b.mult()) <= tol &&
         max_abs_diff(a.unit(), b.unit()) <= tol;
}

ComplexMatrix left_multiplication(const FrobeniusAlgebra& f,
                                  const ComplexVector& a) {
  return f.mult() * kron(ComplexMatrix(a), identity(f.dim()));
}

namespace {

Eigen::Index leading_index(const ComplexVector& v, double tol) {
  for (Eigen::Index k = 0; k < v.size(); ++k) {
    if (std::abs(v(k)) > tol) return k;
  }
  return v.size();
}

// Candidate copyable states from one generic multiplication operator. In a
// commutative dagger Frobenius algebra the operators L_a are normal and
// commute, so the eigenvectors of L_a + L_a^dagger for generic a are the
// copyable directions.
std::vector<ComplexVector> candidates(const FrobeniusAlgebra& f,
                                      std::mt19937_64& rng, double tol) {
  std::normal_distribution<double> gauss;
  ComplexVector a(static_cast<Eigen::Index>(f.dim()));
  for (auto& z : a) z = Complex(gauss(rng), gauss(rng));
  const ComplexMatrix l = left_multiplication(f, a);
  const auto eig = hermitian_eigen(l + l.adjoint());
  const ComplexMatrix comult = f.comult();

  std::vector<ComplexVector> out;
  for (Eigen::Index k = 0; k < eig.vectors.cols(); ++k) {
    const ComplexVector v = eig.vectors.col(k);
    const ComplexMatrix vv = kron(ComplexMatrix(v), ComplexMatrix(v));
    const Complex c = (vv.adjoint() * comult * v)(0, 0);
    if (std::abs(c) <= tol) continue;
    // comult(c v) = c^2 v (x) v exactly when comult(v) = c v (x) v.
    const ComplexVector x = c * v;
    const ComplexMatrix xx = kron(ComplexMatrix(x), ComplexMatrix(x));
    if (max_abs(comult * x - xx) <= tol) out.push_back(x);
  }
  return out;
}

}  // namespace

std::vector<ComplexVector> copyable_states(const FrobeniusAlgebra& f,
                                           double tol) {
  const double comm = max_abs_diff(f.mult() * swap_matrix(f.dim(), f.dim()),
                                   f.mult());
  if (comm > tol) {
    std::ostringstream os;
    os << "copyable_states: algebra is not commutative (deviation " << comm
       << ")";
    throw DomainError(os.str());
  }

  std::mt19937_64 rng(0x5eed);
  std::vector<ComplexVector> found;
  // A degenerate spectrum mixes copyable directions; retry with another
  // generic element. Distinct copyable states are orthogonal, so a full
  // set has f.dim() elements.
  for (int attempt = 0; attempt < 8 && found.size() < f.dim(); ++attempt) {
    for (auto& x : candidates(f, rng, tol)) {
      const bool known = std::any_of(found.begin(), found.end(),
                                     [&](const ComplexVector& y) {
                                       return (x - y).cwiseAbs().maxCoeff() <=
                                              std::sqrt(tol);
                                     });
      if (!known) found.push_back(std::move(x));
    }
  }
  std::sort(found.begin(), found.end(),
            [tol](const ComplexVector& x, const ComplexVector& y) {
              return leading_index(x, tol) < leading_index(y, tol);
            });
  return found;
}

}  // namespace twocp
