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

#include "support/fixtures.hpp"

#include <cmath>

namespace twocp::testing {

namespace {

Eigen::Index idx(std::size_t v) { return static_cast<Eigen::Index>(v); }

FrobeniusAlgebra random_small_algebra(Rng& rng) {
  switch (uniform_index(rng, 0, 3)) {
    case 0:
      return classical_structure(2);
    case 1:
      return classical_structure(3);
    case 2:
      return matrix_algebra(2);
    default:
      return direct_sum(classical_structure(1), matrix_algebra(2));
  }
}

DaggerBimodule scramble(Rng& rng, const DaggerBimodule& b) {
  return conjugate_bimodule(b, random_unitary(rng, b.carrier_dim()));
}

DaggerBimodule random_grid_bimodule(Rng& rng, std::size_t m, std::size_t n) {
  for (;;) {
    const AlgebraMatrix g = random_grid(rng, m, n);
    if (g.total_dim() > 0 && g.total_dim() <= 8) return from_matrix_of_algebras(g);
  }
}

}  // namespace

std::size_t uniform_index(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

ComplexMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
  std::normal_distribution<double> gauss;
  ComplexMatrix m(idx(rows), idx(cols));
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) m(r, c) = Complex(gauss(rng), gauss(rng));
  return m;
}

ComplexMatrix random_unitary(Rng& rng, std::size_t n) {
  if (n == 0) return ComplexMatrix(0, 0);
  const ComplexMatrix g = random_matrix(rng, n, n);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  return qr.householderQ() * ComplexMatrix::Identity(idx(n), idx(n));
}

ComplexMatrix random_psd(Rng& rng, std::size_t n, std::size_t rank) {
  const ComplexMatrix g = random_matrix(rng, n, rank);
  return g * g.adjoint();
}

ComplexMatrix random_density(Rng& rng, std::size_t n) {
  const ComplexMatrix p = random_psd(rng, n, n);
  return p / p.trace();
}

CStarAlgebra random_algebra(Rng& rng, std::size_t max_blocks, std::size_t max_block) {
  std::vector<std::size_t> blocks(uniform_index(rng, 1, max_blocks));
  for (auto& k : blocks) k = uniform_index(rng, 1, max_block);
  return CStarAlgebra(std::move(blocks));
}

CPMap random_cp_map(Rng& rng, const CStarAlgebra& dom, const CStarAlgebra& cod,
                    std::size_t kraus) {
  ComplexMatrix map = ComplexMatrix::Zero(idx(cod.dim()), idx(dom.dim()));
  for (std::size_t i = 0; i < dom.block_count(); ++i) {
    for (std::size_t j = 0; j < cod.block_count(); ++j) {
      const std::size_t count = uniform_index(rng, 0, kraus);
      if (count == 0) continue;
      std::vector<ComplexMatrix> ops;
      for (std::size_t c = 0; c < count; ++c) {
        ops.push_back(random_matrix(rng, cod.block(j), dom.block(i)));
      }
      const ComplexMatrix comp = kraus_oracle(ops);
      map.block(idx(cod.offset(j)), idx(dom.offset(i)), comp.rows(), comp.cols()) = comp;
    }
  }
  return CPMap(dom, cod, std::move(map));
}

POVM random_povm(Rng& rng, std::size_t d, std::size_t n, bool complete) {
  std::vector<ComplexMatrix> raw;
  ComplexMatrix sum = ComplexMatrix::Zero(idx(d), idx(d));
  for (std::size_t i = 0; i < n; ++i) {
    raw.push_back(random_psd(rng, d, i == 0 ? d : uniform_index(rng, 1, d)));
    sum += raw.back();
  }
  // S^{-1/2} A_i S^{-1/2} sums to the identity.
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(sum);
  const ComplexMatrix inv_sqrt = eig.eigenvectors() *
                                 eig.eigenvalues().cwiseSqrt().cwiseInverse().cast<Complex>().asDiagonal() *
                                 eig.eigenvectors().adjoint();
  POVM p;
  for (const auto& a : raw) {
    ComplexMatrix e = inv_sqrt * a * inv_sqrt;
    p.elements.push_back(0.5 * (e + e.adjoint()));
  }
  if (!complete) {
    std::uniform_real_distribution<double> scale(0.2, 0.8);
    const std::size_t i = uniform_index(rng, 0, n - 1);
    p.elements[i] *= scale(rng);
  }
  return p;
}

AlgebraMatrix random_grid(Rng& rng, std::size_t m, std::size_t n) {
  std::vector<CStarAlgebra> cells;
  for (std::size_t c = 0; c < m * n; ++c) {
    switch (uniform_index(rng, 0, 3)) {
      case 0:
        cells.emplace_back();
        break;
      case 1:
        cells.push_back(CStarAlgebra::trivial());
        break;
      case 2:
        cells.push_back(CStarAlgebra::commutative(2));
        break;
      default:
        cells.push_back(CStarAlgebra::matrix(2));
        break;
    }
  }
  return AlgebraMatrix(m, n, std::move(cells));
}

CPMatrix random_cp_matrix(Rng& rng, const AlgebraMatrix& source, const AlgebraMatrix& target) {
  std::vector<CPMap> cells;
  for (std::size_t c = 0; c < source.cells().size(); ++c) {
    cells.push_back(random_cp_map(rng, source.cells()[c], target.cells()[c]));
  }
  return CPMatrix(source, target, std::move(cells));
}

std::pair<DaggerBimodule, DaggerBimodule> random_bimodule_pair(Rng& rng) {
  switch (uniform_index(rng, 0, 5)) {
    case 0: {
      const std::size_t m = uniform_index(rng, 1, 2);
      const std::size_t n = uniform_index(rng, 1, 2);
      const std::size_t p = uniform_index(rng, 1, 2);
      return {scramble(rng, random_grid_bimodule(rng, m, n)),
              scramble(rng, random_grid_bimodule(rng, n, p))};
    }
    case 1: {
      const FrobeniusAlgebra a = random_small_algebra(rng);
      return {scramble(rng, identity_bimodule(a)), scramble(rng, identity_bimodule(a))};
    }
    case 2: {
      const FrobeniusAlgebra a = random_small_algebra(rng);
      const auto b = boundary_bimodules(a);
      return {scramble(rng, b.right), scramble(rng, b.left)};
    }
    case 3: {
      const FrobeniusAlgebra a = random_small_algebra(rng);
      const auto b = boundary_bimodules(a);
      return {scramble(rng, identity_bimodule(a)), scramble(rng, b.left)};
    }
    case 4: {
      const auto a = boundary_bimodules(random_small_algebra(rng));
      const auto b = boundary_bimodules(random_small_algebra(rng));
      return {scramble(rng, a.left), scramble(rng, b.right)};
    }
    default: {
      const FrobeniusAlgebra a = uniform_index(rng, 0, 1) ? classical_structure(2) : matrix_algebra(2);
      const DaggerBimodule id = identity_bimodule(a);
      return {scramble(rng, direct_sum_bimodules(id, id)), scramble(rng, boundary_bimodules(a).left)};
    }
  }
}

std::vector<ComplexMatrix> random_error_basis(Rng& rng, std::size_t k) {
  const ComplexMatrix a = random_unitary(rng, k);
  const ComplexMatrix b = random_unitary(rng, k);
  std::vector<ComplexMatrix> out;
  for (const auto& u : shift_clock_basis(k)) out.push_back(a * u * b);
  return out;
}

ComplexMatrix kron_oracle(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      for (Eigen::Index k = 0; k < b.rows(); ++k)
        for (Eigen::Index l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

ComplexMatrix kraus_oracle(const std::vector<ComplexMatrix>& ops) {
  const Eigen::Index l = ops.front().rows();
  const Eigen::Index k = ops.front().cols();
  ComplexMatrix map = ComplexMatrix::Zero(l * l, k * k);
  for (const auto& op : ops)
    for (Eigen::Index a = 0; a < k; ++a)
      for (Eigen::Index b = 0; b < k; ++b)
        for (Eigen::Index c = 0; c < l; ++c)
          for (Eigen::Index d = 0; d < l; ++d)
            map(c * l + d, a * k + b) += op(c, a) * std::conj(op(d, b));
  return map;
}

ComplexMatrix partial_trace_first(const ComplexMatrix& rho, std::size_t a, std::size_t b) {
  const auto n = idx(b);
  ComplexMatrix out = ComplexMatrix::Zero(n, n);
  for (std::size_t i = 0; i < a; ++i) {
    out += rho.block(idx(i * b), idx(i * b), n, n);
  }
  return out;
}

std::vector<ComplexMatrix> teleport_oracle(const ComplexMatrix& rho,
                                           const ComplexMatrix& resource,
                                           const std::vector<ComplexMatrix>& povm,
                                           const std::vector<ComplexMatrix>& correction_unitaries) {
  const auto k = static_cast<std::size_t>(rho.rows());
  const ComplexMatrix total = kron_oracle(rho, resource);
  const ComplexMatrix id = ComplexMatrix::Identity(idx(k), idx(k));
  std::vector<ComplexMatrix> out;
  for (std::size_t i = 0; i < povm.size(); ++i) {
    const ComplexMatrix bob = partial_trace_first(kron_oracle(povm[i], id) * total, k * k, k);
    const ComplexMatrix& u = correction_unitaries[i];
    out.push_back(u * bob * u.adjoint());
  }
  return out;
}

std::vector<std::vector<std::vector<double>>> otp_oracle(const FiniteGroupoid& group,
                                                        const std::vector<double>& key) {
  const std::size_t n = group.size();
  std::vector<std::vector<std::vector<double>>> out(
      n, std::vector<std::vector<double>>(n, std::vector<double>(n, 0.0)));
  for (std::size_t m = 0; m < n; ++m) {
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t c = *group.compose(m, k);
      const std::size_t x = *group.compose(c, group.inv()[k]);
      out[m][c][x] += key[k];
    }
  }
  return out;
}

}  // namespace twocp::testing
