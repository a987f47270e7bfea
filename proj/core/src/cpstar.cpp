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

#include "twocp/cpstar.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace twocp {

namespace {

Eigen::Index idx(std::size_t v) { return static_cast<Eigen::Index>(v); }

std::string blocks_str(const CStarAlgebra& a) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < a.block_count(); ++i) {
    os << (i ? "," : "") << a.block(i);
  }
  os << "]";
  return os.str();
}

}  // namespace

CStarAlgebra::CStarAlgebra(std::vector<std::size_t> blocks)
    : blocks_(std::move(blocks)) {
  offsets_.reserve(blocks_.size());
  for (const auto k : blocks_) {
    if (k == 0) throw DomainError("CStarAlgebra: block sizes must be >= 1");
    offsets_.push_back(dim_);
    dim_ += k * k;
  }
}

CStarAlgebra CStarAlgebra::commutative(std::size_t n) {
  return CStarAlgebra(std::vector<std::size_t>(n, 1));
}

std::size_t CStarAlgebra::hilbert_dim() const noexcept {
  return std::accumulate(blocks_.begin(), blocks_.end(), std::size_t{0});
}

bool CStarAlgebra::is_commutative() const noexcept {
  return std::all_of(blocks_.begin(), blocks_.end(),
                     [](std::size_t k) { return k == 1; });
}

CStarAlgebra tensor(const CStarAlgebra& a, const CStarAlgebra& b) {
  std::vector<std::size_t> blocks;
  blocks.reserve(a.block_count() * b.block_count());
  for (const auto k : a.blocks()) {
    for (const auto l : b.blocks()) blocks.push_back(k * l);
  }
  return CStarAlgebra(std::move(blocks));
}

CStarAlgebra direct_sum(const CStarAlgebra& a, const CStarAlgebra& b) {
  std::vector<std::size_t> blocks = a.blocks();
  blocks.insert(blocks.end(), b.blocks().begin(), b.blocks().end());
  return CStarAlgebra(std::move(blocks));
}

namespace {

// pos[in] = out for the permutation behind tensor_coordinates.
std::vector<std::size_t> tensor_positions(const CStarAlgebra& a, const CStarAlgebra& b) {
  const CStarAlgebra ab = tensor(a, b);
  std::vector<std::size_t> pos(a.dim() * b.dim());
  std::size_t out_block = 0;
  for (std::size_t i = 0; i < a.block_count(); ++i) {
    const std::size_t k = a.block(i);
    for (std::size_t j = 0; j < b.block_count(); ++j, ++out_block) {
      const std::size_t l = b.block(j);
      const std::size_t base = ab.offset(out_block);
      // e_{a1 b1} (x) e_{a2 b2} -> e_{(a1 a2),(b1 b2)} in M_{k l}.
      for (std::size_t a1 = 0; a1 < k; ++a1)
        for (std::size_t b1 = 0; b1 < k; ++b1)
          for (std::size_t a2 = 0; a2 < l; ++a2)
            for (std::size_t b2 = 0; b2 < l; ++b2) {
              const std::size_t in = (a.offset(i) + a1 * k + b1) * b.dim() +
                                     b.offset(j) + a2 * l + b2;
              pos[in] = base + (a1 * l + a2) * (k * l) + (b1 * l + b2);
            }
    }
  }
  return pos;
}

}  // namespace

ComplexMatrix tensor_coordinates(const CStarAlgebra& a, const CStarAlgebra& b) {
  const auto pos = tensor_positions(a, b);
  const auto d = idx(pos.size());
  ComplexMatrix perm = ComplexMatrix::Zero(d, d);
  for (std::size_t in = 0; in < pos.size(); ++in) perm(idx(pos[in]), idx(in)) = 1.0;
  return perm;
}

FrobeniusAlgebra frobenius_structure(const CStarAlgebra& a) {
  if (a.is_zero()) {
    return FrobeniusAlgebra(0, ComplexMatrix(0, 0), ComplexMatrix(0, 1));
  }
  FrobeniusAlgebra out = matrix_algebra(a.block(0));
  for (std::size_t i = 1; i < a.block_count(); ++i) {
    out = direct_sum(out, matrix_algebra(a.block(i)));
  }
  return out;
}

ComplexMatrix trace_row(const CStarAlgebra& a) {
  ComplexMatrix row = ComplexMatrix::Zero(1, idx(a.dim()));
  for (std::size_t i = 0; i < a.block_count(); ++i) {
    const std::size_t k = a.block(i);
    for (std::size_t x = 0; x < k; ++x) row(0, idx(a.offset(i) + x * k + x)) = 1.0;
  }
  return row;
}

ComplexMatrix to_operator(const CStarAlgebra& a, const ComplexVector& coords) {
  if (coords.size() != idx(a.dim())) throw ShapeError("to_operator: wrong length");
  const auto h = idx(a.hilbert_dim());
  ComplexMatrix op = ComplexMatrix::Zero(h, h);
  Eigen::Index corner = 0;
  for (std::size_t i = 0; i < a.block_count(); ++i) {
    const auto k = idx(a.block(i));
    for (Eigen::Index r = 0; r < k; ++r)
      for (Eigen::Index c = 0; c < k; ++c)
        op(corner + r, corner + c) = coords(idx(a.offset(i)) + r * k + c);
    corner += k;
  }
  return op;
}

ComplexVector from_operator(const CStarAlgebra& a, const ComplexMatrix& op) {
  const auto h = idx(a.hilbert_dim());
  if (op.rows() != h || op.cols() != h) {
    throw ShapeError("from_operator: operator does not act on the algebra's Hilbert space");
  }
  ComplexVector coords(idx(a.dim()));
  Eigen::Index corner = 0;
  for (std::size_t i = 0; i < a.block_count(); ++i) {
    const auto k = idx(a.block(i));
    for (Eigen::Index r = 0; r < k; ++r)
      for (Eigen::Index c = 0; c < k; ++c)
        coords(idx(a.offset(i)) + r * k + c) = op(corner + r, corner + c);
    corner += k;
  }
  return coords;
}

CPMap::CPMap(CStarAlgebra dom, CStarAlgebra cod, ComplexMatrix map)
    : dom_(std::move(dom)), cod_(std::move(cod)), map_(std::move(map)) {
  if (map_.rows() != idx(cod_.dim()) || map_.cols() != idx(dom_.dim())) {
    std::ostringstream os;
    os << "CPMap: map must be " << cod_.dim() << "x" << dom_.dim() << ", got "
       << map_.rows() << "x" << map_.cols();
    throw ShapeError(os.str());
  }
}

CPMap CPMap::identity(const CStarAlgebra& a) {
  return CPMap(a, a, twocp::identity(a.dim()));
}

CPMap CPMap::state(const CStarAlgebra& a, const ComplexVector& coords) {
  return CPMap(CStarAlgebra::trivial(), a, ComplexMatrix(coords));
}

CPMap CPMap::trace(const CStarAlgebra& a) {
  return CPMap(a, CStarAlgebra::trivial(), trace_row(a));
}

ComplexMatrix CPMap::component(std::size_t dom_block, std::size_t cod_block) const {
  const auto k = idx(dom_.block(dom_block));
  const auto l = idx(cod_.block(cod_block));
  return map_.block(idx(cod_.offset(cod_block)), idx(dom_.offset(dom_block)),
                    l * l, k * k);
}

std::vector<ChoiBlock> choi_blocks(const CPMap& f) {
  std::vector<ChoiBlock> out;
  for (std::size_t i = 0; i < f.dom().block_count(); ++i) {
    const auto k = idx(f.dom().block(i));
    for (std::size_t j = 0; j < f.cod().block_count(); ++j) {
      const auto l = idx(f.cod().block(j));
      const ComplexMatrix comp = f.component(i, j);
      ComplexMatrix choi(k * l, k * l);
      // C[(a,c),(b,d)] = f(e_ab)[c,d]
      for (Eigen::Index a = 0; a < k; ++a)
        for (Eigen::Index b = 0; b < k; ++b)
          for (Eigen::Index c = 0; c < l; ++c)
            for (Eigen::Index d = 0; d < l; ++d)
              choi(a * l + c, b * l + d) = comp(c * l + d, a * k + b);
      out.push_back({i, j, std::move(choi)});
    }
  }
  return out;
}

CpReport is_completely_positive(const CPMap& f, double tol) {
  CpReport r;
  bool first = true;
  for (const auto& block : choi_blocks(f)) {
    const auto psd = psd_report(block.choi, tol);
    r.hermitian_deviation = std::max(r.hermitian_deviation, psd.hermitian_deviation);
    if (first || psd.min_eigenvalue < r.min_eigenvalue) {
      r.min_eigenvalue = psd.min_eigenvalue;
      r.worst_dom_block = block.dom_block;
      r.worst_cod_block = block.cod_block;
      first = false;
    }
    r.completely_positive = r.completely_positive && psd.psd;
  }
  if (first) r.min_eigenvalue = 0.0;
  return r;
}

ComplexMatrix CpWitness::matrix() const {
  // Column offsets of each (i, j) Choi block in the concatenated space.
  std::vector<std::size_t> offsets;
  std::size_t total = 0;
  for (std::size_t i = 0; i < dom.block_count(); ++i) {
    for (std::size_t j = 0; j < cod.block_count(); ++j) {
      offsets.push_back(total);
      total += dom.block(i) * cod.block(j);
    }
  }
  ComplexMatrix g = ComplexMatrix::Zero(idx(operators.size()), idx(total));
  for (std::size_t r = 0; r < operators.size(); ++r) {
    const auto& kr = operators[r];
    const auto k = idx(dom.block(kr.dom_block));
    const auto l = idx(cod.block(kr.cod_block));
    const std::size_t base = offsets[kr.dom_block * cod.block_count() + kr.cod_block];
    // Choi = v v^dagger with v_(a,c) = K[c,a]; row r of g is v^dagger.
    for (Eigen::Index a = 0; a < k; ++a)
      for (Eigen::Index c = 0; c < l; ++c)
        g(idx(r), idx(base) + a * l + c) = std::conj(kr.op(c, a));
  }
  return g;
}

CPMap CpWitness::reconstruct() const {
  ComplexMatrix map = ComplexMatrix::Zero(idx(cod.dim()), idx(dom.dim()));
  for (const auto& kr : operators) {
    const auto k = idx(dom.block(kr.dom_block));
    const auto l = idx(cod.block(kr.cod_block));
    // Row-major vec(K x K^dagger) = (K (x) conj(K)) vec(x).
    map.block(idx(cod.offset(kr.cod_block)), idx(dom.offset(kr.dom_block)), l * l, k * k) +=
        kron(kr.op, kr.op.conjugate());
  }
  return CPMap(dom, cod, std::move(map));
}

CpWitness cp_witness(const CPMap& f, double tol) {
  const auto report = is_completely_positive(f, tol);
  if (!report) {
    std::ostringstream os;
    os << "cp_witness: map is not completely positive; Choi block (dom "
       << report.worst_dom_block << ", cod " << report.worst_cod_block
       << ") has eigenvalue " << report.min_eigenvalue;
    if (report.hermitian_deviation > tol) {
      os << " and Hermitian deviation " << report.hermitian_deviation;
    }
    throw CertificationError(os.str(), report.verdict().deviation);
  }
  CpWitness w{f.dom(), f.cod(), {}, 0, 0.0};
  for (const auto& block : choi_blocks(f)) {
    const auto k = idx(f.dom().block(block.dom_block));
    const auto l = idx(f.cod().block(block.cod_block));
    const auto eig = hermitian_eigen(block.choi);
    for (Eigen::Index e = 0; e < eig.values.size(); ++e) {
      const double lambda = eig.values(e);
      if (lambda <= tol) {
        ++w.dropped;
        w.truncated += std::abs(lambda);
        continue;
      }
      ComplexMatrix op(l, k);
      const double s = std::sqrt(lambda);
      for (Eigen::Index a = 0; a < k; ++a)
        for (Eigen::Index c = 0; c < l; ++c) op(c, a) = s * eig.vectors(a * l + c, e);
      w.operators.push_back({block.dom_block, block.cod_block, std::move(op)});
    }
  }
  return w;
}

CPMap kraus_map(const std::vector<ComplexMatrix>& ops) {
  if (ops.empty()) throw DomainError("kraus_map: no operators");
  const auto rows = ops.front().rows();
  const auto cols = ops.front().cols();
  ComplexMatrix map = ComplexMatrix::Zero(rows * rows, cols * cols);
  for (const auto& k : ops) {
    if (k.rows() != rows || k.cols() != cols) {
      throw ShapeError("kraus_map: operators of different shapes");
    }
    map += kron(k, k.conjugate());
  }
  return CPMap(CStarAlgebra::matrix(static_cast<std::size_t>(cols)),
               CStarAlgebra::matrix(static_cast<std::size_t>(rows)), std::move(map));
}

CPMap conjugation_map(const ComplexMatrix& u) { return kraus_map({u}); }

CPMap compose_cp(const CPMap& g, const CPMap& f) {
  if (!(f.cod() == g.dom())) {
    throw ShapeError("compose_cp: codomain " + blocks_str(f.cod()) +
                     " does not match domain " + blocks_str(g.dom()));
  }
  return CPMap(f.dom(), g.cod(), g.map() * f.map());
}

CPMap dagger_cp(const CPMap& f) { return CPMap(f.cod(), f.dom(), f.map().adjoint()); }

CPMap tensor_cp(const CPMap& f, const CPMap& g) {
  const auto in = tensor_positions(f.dom(), g.dom());
  const auto out = tensor_positions(f.cod(), g.cod());
  const ComplexMatrix k = kron(f.map(), g.map());
  ComplexMatrix map(k.rows(), k.cols());
  for (Eigen::Index c = 0; c < k.cols(); ++c) {
    for (Eigen::Index r = 0; r < k.rows(); ++r) {
      map(idx(out[static_cast<std::size_t>(r)]), idx(in[static_cast<std::size_t>(c)])) = k(r, c);
    }
  }
  return CPMap(tensor(f.dom(), g.dom()), tensor(f.cod(), g.cod()), std::move(map));
}

CPMap direct_sum_cp(const CPMap& f, const CPMap& g) {
  return CPMap(direct_sum(f.dom(), g.dom()), direct_sum(f.cod(), g.cod()),
               twocp::direct_sum(f.map(), g.map()));
}

CPMap associator(const CStarAlgebra& a, const CStarAlgebra& b,
                 const CStarAlgebra& c) {
  // Both bracketings are permutations of kron(x, y, z).
  const CStarAlgebra ab = tensor(a, b);
  const CStarAlgebra bc = tensor(b, c);
  const auto pos_ab = tensor_positions(a, b);
  const auto pos_bc = tensor_positions(b, c);
  const auto pos_a_bc = tensor_positions(a, bc);
  const auto pos_ab_c = tensor_positions(ab, c);
  const std::size_t d = a.dim() * b.dim() * c.dim();
  ComplexMatrix map = ComplexMatrix::Zero(idx(d), idx(d));
  for (std::size_t x = 0; x < a.dim(); ++x)
    for (std::size_t y = 0; y < b.dim(); ++y)
      for (std::size_t z = 0; z < c.dim(); ++z) {
        const std::size_t right = pos_a_bc[x * bc.dim() + pos_bc[y * c.dim() + z]];
        const std::size_t left = pos_ab_c[pos_ab[x * b.dim() + y] * c.dim() + z];
        map(idx(left), idx(right)) = 1.0;
      }
  return CPMap(tensor(a, bc), tensor(ab, c), std::move(map));
}

Verdict entrywise_positive(const CPMap& f, double tol) {
  if (!f.dom().is_commutative() || !f.cod().is_commutative()) {
    throw DomainError("entrywise_positive: domain and codomain must be commutative");
  }
  double dev = 0.0;
  for (Eigen::Index r = 0; r < f.map().rows(); ++r) {
    for (Eigen::Index c = 0; c < f.map().cols(); ++c) {
      const Complex z = f.map()(r, c);
      dev = std::max({dev, -z.real(), std::abs(z.imag())});
    }
  }
  return Verdict::within(dev, tol);
}

}  // namespace twocp
