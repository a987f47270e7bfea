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

#include "twocp/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace twocp {

ComplexMatrix identity(std::size_t n) {
  return ComplexMatrix::Identity(static_cast<Eigen::Index>(n),
                                 static_cast<Eigen::Index>(n));
}

ComplexMatrix basis_vector(std::size_t n, std::size_t i) {
  if (i >= n) throw ShapeError("basis_vector: index out of range");
  ComplexMatrix v = ComplexMatrix::Zero(static_cast<Eigen::Index>(n), 1);
  v(static_cast<Eigen::Index>(i), 0) = 1.0;
  return v;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const Eigen::Index br = b.rows();
  const Eigen::Index bc = b.cols();
  ComplexMatrix out(a.rows() * br, a.cols() * bc);
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * br, j * bc, br, bc) = a(i, j) * b;
    }
  }
  return out;
}

ComplexMatrix dagger(const ComplexMatrix& a) { return a.adjoint(); }

ComplexMatrix direct_sum(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out =
      ComplexMatrix::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  out.topLeftCorner(a.rows(), a.cols()) = a;
  out.bottomRightCorner(b.rows(), b.cols()) = b;
  return out;
}

ComplexMatrix swap_matrix(std::size_t m, std::size_t n) {
  const auto mi = static_cast<Eigen::Index>(m);
  const auto ni = static_cast<Eigen::Index>(n);
  ComplexMatrix s = ComplexMatrix::Zero(mi * ni, mi * ni);
  for (Eigen::Index i = 0; i < mi; ++i) {
    for (Eigen::Index j = 0; j < ni; ++j) s(j * mi + i, i * ni + j) = 1.0;
  }
  return s;
}

ComplexMatrix permute_factors(const std::vector<std::size_t>& dims,
                              const std::vector<std::size_t>& order) {
  const std::size_t r = dims.size();
  std::vector<bool> seen(r, false);
  if (order.size() != r) throw ShapeError("permute_factors: order has wrong length");
  for (const auto t : order) {
    if (t >= r || seen[t]) throw ShapeError("permute_factors: order is not a permutation");
    seen[t] = true;
  }
  std::size_t total = 1;
  for (const auto d : dims) total *= d;
  const auto n = static_cast<Eigen::Index>(total);
  ComplexMatrix p = ComplexMatrix::Zero(n, n);
  std::vector<std::size_t> digit(r, 0);
  for (std::size_t in = 0; in < total; ++in) {
    std::size_t rest = in;
    for (std::size_t t = r; t-- > 0;) {
      digit[t] = rest % dims[t];
      rest /= dims[t];
    }
    std::size_t out = 0;
    for (const auto t : order) out = out * dims[t] + digit[t];
    p(static_cast<Eigen::Index>(out), static_cast<Eigen::Index>(in)) = 1.0;
  }
  return p;
}

double max_abs(const ComplexMatrix& a) {
  if (a.size() == 0) return 0.0;
  return a.cwiseAbs().maxCoeff();
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    std::ostringstream os;
    os << "shape mismatch: " << a.rows() << "x" << a.cols() << " vs "
       << b.rows() << "x" << b.cols();
    throw ShapeError(os.str());
  }
  return max_abs(a - b);
}

HermitianEigen hermitian_eigen(const ComplexMatrix& a) {
  if (a.rows() != a.cols()) {
    throw ShapeError("hermitian_eigen: non-square input");
  }
  if (a.rows() == 0) return {Eigen::VectorXd(0), ComplexMatrix(0, 0)};
  const ComplexMatrix h = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
  return {solver.eigenvalues(), solver.eigenvectors()};
}

PsdReport psd_report(const ComplexMatrix& a, double tol) {
  if (a.rows() != a.cols()) throw ShapeError("is_psd: non-square input");
  PsdReport r;
  r.hermitian_deviation = max_abs(a - a.adjoint());
  r.min_eigenvalue = a.rows() == 0 ? 0.0 : hermitian_eigen(a).values(0);
  r.psd = r.hermitian_deviation <= tol && r.min_eigenvalue >= -tol;
  return r;
}

bool is_psd(const ComplexMatrix& a, double tol) {
  return psd_report(a, tol).psd;
}

ComplexMatrix psd_sqrt(const ComplexMatrix& a) {
  const auto eig = hermitian_eigen(a);
  const Eigen::VectorXd roots = eig.values.cwiseMax(0.0).cwiseSqrt();
  return eig.vectors * roots.cast<Complex>().asDiagonal() *
         eig.vectors.adjoint();
}

Isometry::Isometry(std::size_t rows)
    : m_(ComplexMatrix::Zero(static_cast<Eigen::Index>(rows), 0)) {}

Isometry Isometry::certify(ComplexMatrix m, double tol) {
  const double dev = max_abs_diff(
      m.adjoint() * m, identity(static_cast<std::size_t>(m.cols())));
  if (dev > tol) {
    std::ostringstream os;
    os << "not an isometry: |i^dagger i - I| = " << dev;
    throw CertificationError(os.str(), dev);
  }
  return Isometry(std::move(m));
}

ComplexMatrix Isometry::projector() const { return m_ * m_.adjoint(); }

IdempotentReport dagger_idempotent_report(const ComplexMatrix& p, double tol) {
  if (p.rows() != p.cols()) {
    throw ShapeError("dagger idempotent must be square");
  }
  IdempotentReport r;
  r.idempotent_deviation = max_abs(p * p - p);
  r.hermitian_deviation = max_abs(p - p.adjoint());
  r.verdict = Verdict::within(
      std::max(r.idempotent_deviation, r.hermitian_deviation), tol);
  return r;
}

namespace {

// Rotates v so that its first entry of modulus > tol is real and positive.
void canonicalize_phase(Eigen::Ref<ComplexMatrix> v, double tol) {
  for (Eigen::Index k = 0; k < v.rows(); ++k) {
    const double mod = std::abs(v(k, 0));
    if (mod > tol) {
      v *= std::conj(v(k, 0)) / mod;
      v(k, 0) = mod;
      return;
    }
  }
}

}  // namespace

Isometry split_projection(const ComplexMatrix& p, double tol) {
  const auto report = dagger_idempotent_report(p, tol);
  if (!report.verdict.pass) {
    std::ostringstream os;
    os << "split_projection: input is not a dagger idempotent (max deviation "
       << report.verdict.deviation << ")";
    throw CertificationError(os.str(), report.verdict.deviation);
  }
  const double trace = p.trace().real();
  const double rank_f = std::round(trace);
  if (std::abs(trace - rank_f) > tol) {
    std::ostringstream os;
    os << "split_projection: trace " << trace << " is not an integer";
    throw CertificationError(os.str(), std::abs(trace - rank_f));
  }
  const auto rank = static_cast<Eigen::Index>(rank_f);
  if (rank == 0) return Isometry(static_cast<std::size_t>(p.rows()));

  // Eigenvalues of a certified idempotent cluster at 0 and 1.
  const auto eig = hermitian_eigen(p);
  std::vector<Eigen::Index> ones;
  for (Eigen::Index k = 0; k < eig.values.size(); ++k) {
    if (eig.values(k) > 0.5) ones.push_back(k);
  }
  if (static_cast<Eigen::Index>(ones.size()) != rank) {
    throw CertificationError(
        "split_projection: eigenvalue count disagrees with trace",
        std::abs(static_cast<double>(ones.size()) - rank_f));
  }
  ComplexMatrix cols(p.rows(), rank);
  for (Eigen::Index c = 0; c < rank; ++c) {
    cols.col(c) = eig.vectors.col(ones[static_cast<std::size_t>(c)]);
    canonicalize_phase(cols.col(c), tol);
  }
  return Isometry::certify(std::move(cols), std::max(tol, 1e-10));
}

ComplexMatrix nullspace(const ComplexMatrix& a, double threshold) {
  const Eigen::Index n = a.cols();
  if (n == 0) return ComplexMatrix(0, 0);
  if (a.rows() == 0) return ComplexMatrix::Identity(n, n);
  // Right singular vectors of a are the eigenvectors of a^dagger a.
  const auto eig = hermitian_eigen(a.adjoint() * a);
  std::vector<Eigen::Index> keep;
  for (Eigen::Index k = 0; k < n; ++k) {
    if (std::sqrt(std::max(eig.values(k), 0.0)) < threshold) keep.push_back(k);
  }
  ComplexMatrix out(n, static_cast<Eigen::Index>(keep.size()));
  for (std::size_t c = 0; c < keep.size(); ++c) {
    out.col(static_cast<Eigen::Index>(c)) = eig.vectors.col(keep[c]);
  }
  return out;
}

}  // namespace twocp
