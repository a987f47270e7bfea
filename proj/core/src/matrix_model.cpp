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

#include "twocp/matrix_model.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace twocp {

namespace {

Eigen::Index idx(std::size_t v) { return static_cast<Eigen::Index>(v); }

FrobeniusAlgebra empty_algebra() {
  return FrobeniusAlgebra(0, ComplexMatrix(0, 0), ComplexMatrix(0, 1));
}

constexpr double kCenterThreshold = 1e-6;
constexpr double kClusterGap = 1e-6;

}  // namespace

AlgebraMatrix::AlgebraMatrix(std::size_t m, std::size_t n,
                             std::vector<CStarAlgebra> cells)
    : m_(m), n_(n), cells_(std::move(cells)) {
  if (m_ == 0 || n_ == 0) throw ShapeError("AlgebraMatrix: grid must be nonempty");
  if (cells_.size() != m_ * n_) {
    std::ostringstream os;
    os << "AlgebraMatrix: expected " << m_ * n_ << " cells, got " << cells_.size();
    throw ShapeError(os.str());
  }
}

const CStarAlgebra& AlgebraMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= m_ || j >= n_) throw ShapeError("AlgebraMatrix: cell out of range");
  return cells_[i * n_ + j];
}

std::size_t AlgebraMatrix::total_dim() const noexcept {
  std::size_t total = 0;
  for (const auto& c : cells_) total += c.dim();
  return total;
}

CPMatrix::CPMatrix(AlgebraMatrix source, AlgebraMatrix target, std::vector<CPMap> cells)
    : source_(std::move(source)), target_(std::move(target)), cells_(std::move(cells)) {
  if (source_.rows() != target_.rows() || source_.cols() != target_.cols()) {
    throw ShapeError("CPMatrix: source and target grids differ in shape");
  }
  if (cells_.size() != source_.cells().size()) {
    throw ShapeError("CPMatrix: wrong number of cells");
  }
  for (std::size_t c = 0; c < cells_.size(); ++c) {
    if (!(cells_[c].dom() == source_.cells()[c]) || !(cells_[c].cod() == target_.cells()[c])) {
      std::ostringstream os;
      os << "CPMatrix: cell (" << c / source_.cols() << ", " << c % source_.cols()
         << ") does not map between the grid cells";
      throw ShapeError(os.str());
    }
  }
}

CPMatrix CPMatrix::identity(const AlgebraMatrix& a) {
  std::vector<CPMap> cells;
  cells.reserve(a.cells().size());
  for (const auto& c : a.cells()) cells.push_back(CPMap::identity(c));
  return CPMatrix(a, a, std::move(cells));
}

const CPMap& CPMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= source_.rows() || j >= source_.cols()) {
    throw ShapeError("CPMatrix: cell out of range");
  }
  return cells_[i * source_.cols() + j];
}

Verdict check_cp_matrix(const CPMatrix& f, double tol) {
  Verdict out;
  for (const auto& c : f.cells()) {
    const Verdict v = is_completely_positive(c, tol).verdict();
    out.pass = out.pass && v.pass;
    out.deviation = std::max(out.deviation, v.deviation);
  }
  return out;
}

DaggerBimodule from_matrix_of_algebras(const AlgebraMatrix& g) {
  const std::size_t m = g.rows();
  const std::size_t n = g.cols();
  const std::size_t total = g.total_dim();
  ComplexMatrix act = ComplexMatrix::Zero(idx(total), idx(m * total * n));
  FrobeniusAlgebra carrier = empty_algebra();
  std::size_t offset = 0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto& cell = g.at(i, j);
      for (std::size_t x = offset; x < offset + cell.dim(); ++x) {
        act(idx(x), idx((i * total + x) * n + j)) = 1.0;
      }
      if (!cell.is_zero()) carrier = direct_sum(carrier, frobenius_structure(cell));
      offset += cell.dim();
    }
  }
  return DaggerBimodule(classical_structure(m), classical_structure(n), total,
                        std::move(act), std::move(carrier));
}

std::vector<std::size_t> block_structure(const FrobeniusAlgebra& f) {
  const std::size_t d = f.dim();
  if (d == 0) return {};
  const ComplexMatrix id = identity(d);
  // Column k: L_{e_k} - R_{e_k}, flattened. Its kernel is the center.
  ComplexMatrix k(idx(d * d), idx(d));
  for (std::size_t c = 0; c < d; ++c) {
    const ComplexMatrix e = basis_vector(d, c);
    const ComplexMatrix diff = f.mult() * kron(e, id) - f.mult() * kron(id, e);
    k.col(idx(c)) = diff.reshaped();
  }
  const ComplexMatrix center = nullspace(k, kCenterThreshold);
  const auto r = static_cast<std::size_t>(center.cols());
  if (r == 0) throw CertificationError("block_structure: algebra has trivial center", 1.0);

  std::mt19937_64 rng(0xb10c);
  std::normal_distribution<double> gauss;
  for (int attempt = 0; attempt < 8; ++attempt) {
    ComplexVector coeff(center.cols());
    for (auto& z : coeff) z = Complex(gauss(rng), gauss(rng));
    const ComplexVector c = center * coeff;
    const ComplexMatrix l = left_multiplication(f, c);
    const auto eig = hermitian_eigen(l + l.adjoint());

    // A central element acts as a scalar on each block, so the spectrum
    // clusters into one group of size k^2 per block.
    std::vector<std::size_t> sizes;
    std::size_t run = 1;
    for (Eigen::Index e = 1; e <= eig.values.size(); ++e) {
      if (e == eig.values.size() || eig.values(e) - eig.values(e - 1) > kClusterGap) {
        sizes.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    if (sizes.size() != r) continue;
    std::vector<std::size_t> blocks;
    bool square = true;
    for (const auto s : sizes) {
      const auto root = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(s))));
      square = square && root * root == s;
      blocks.push_back(root);
    }
    if (!square) continue;
    std::sort(blocks.begin(), blocks.end());
    return blocks;
  }
  throw CertificationError(
      "block_structure: spectrum of central elements is not a union of square blocks", 1.0);
}

AlgebraMatrix to_matrix_of_algebras(const DaggerBimodule& b, double tol) {
  if (!b.carrier()) {
    throw DomainError("to_matrix_of_algebras: bimodule has no carrier algebra");
  }
  const auto xs = copyable_states(b.left(), tol);
  const auto ys = copyable_states(b.right(), tol);
  if (xs.size() != b.left().dim() || ys.size() != b.right().dim()) {
    throw DomainError("to_matrix_of_algebras: boundary algebras are not classical structures");
  }
  const ComplexMatrix im = identity(b.carrier_dim());
  const FrobeniusAlgebra& carrier = *b.carrier();
  std::vector<CStarAlgebra> cells;
  for (const auto& x : xs) {
    for (const auto& y : ys) {
      const ComplexMatrix p = b.action() * kron(ComplexMatrix(x), im, ComplexMatrix(y));
      const Isometry v = split_projection(p, tol);
      if (v.rank() == 0) {
        cells.emplace_back();
        continue;
      }
      const ComplexMatrix& vm = v.matrix();
      const FrobeniusAlgebra cell(v.rank(), vm.adjoint() * carrier.mult() * kron(vm, vm),
                                  vm.adjoint() * carrier.unit());
      cells.emplace_back(block_structure(cell));
    }
  }
  return AlgebraMatrix(xs.size(), ys.size(), std::move(cells));
}

AlgebraMatrix compose_matrix_model(const AlgebraMatrix& a, const AlgebraMatrix& b) {
  if (a.cols() != b.rows()) {
    std::ostringstream os;
    os << "compose_matrix_model: inner dimensions " << a.cols() << " and " << b.rows()
       << " differ";
    throw ShapeError(os.str());
  }
  std::vector<CStarAlgebra> cells;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < b.cols(); ++k) {
      CStarAlgebra cell;
      for (std::size_t j = 0; j < a.cols(); ++j) {
        cell = direct_sum(cell, tensor(a.at(i, j), b.at(j, k)));
      }
      cells.push_back(std::move(cell));
    }
  }
  return AlgebraMatrix(a.rows(), b.cols(), std::move(cells));
}

CPMatrix compose_matrix_homs(const CPMatrix& f, const CPMatrix& g) {
  const AlgebraMatrix source = compose_matrix_model(f.source(), g.source());
  const AlgebraMatrix target = compose_matrix_model(f.target(), g.target());
  std::vector<CPMap> cells;
  for (std::size_t i = 0; i < source.rows(); ++i) {
    for (std::size_t k = 0; k < source.cols(); ++k) {
      CPMap cell(CStarAlgebra(), CStarAlgebra(), ComplexMatrix(0, 0));
      for (std::size_t j = 0; j < f.source().cols(); ++j) {
        cell = direct_sum_cp(cell, tensor_cp(f.at(i, j), g.at(j, k)));
      }
      cells.push_back(std::move(cell));
    }
  }
  return CPMatrix(source, target, std::move(cells));
}

CPMatrix vertical_compose(const CPMatrix& f, const CPMatrix& g) {
  if (!(f.target() == g.source())) {
    throw ShapeError("vertical_compose: target of the first is not the source of the second");
  }
  std::vector<CPMap> cells;
  for (std::size_t c = 0; c < f.cells().size(); ++c) {
    cells.push_back(compose_cp(g.cells()[c], f.cells()[c]));
  }
  return CPMatrix(f.source(), g.target(), std::move(cells));
}

BimoduleHom to_bimodule_hom(const CPMatrix& f) {
  ComplexMatrix map(0, 0);
  for (const auto& c : f.cells()) map = direct_sum(map, c.map());
  return {from_matrix_of_algebras(f.source()), from_matrix_of_algebras(f.target()),
          std::move(map)};
}

}  // namespace twocp
