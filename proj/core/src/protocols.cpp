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

#include "twocp/protocols.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace twocp {

namespace {

Eigen::Index idx(std::size_t v) { return static_cast<Eigen::Index>(v); }

[[noreturn]] void fail(const std::string& what, double deviation) {
  throw CertificationError(what, deviation);
}

CPMap classical_record(const TeleportationData& t) {
  const CStarAlgebra& s = t.system;
  const CStarAlgebra ss = tensor(s, s);
  const CPMap prep =
      tensor_cp(CPMap::identity(s), CPMap::state(ss, from_operator(ss, t.resource)));
  const CPMap measure = tensor_cp(t.measurement.map, CPMap::identity(s));
  // s -> s (x) (s (x) s) -> (s (x) s) (x) s -> C^n (x) s
  return compose_cp(measure, compose_cp(associator(s, s, s), prep));
}

}  // namespace

Measurement::Measurement(CStarAlgebra system_, std::size_t outcomes_, CPMap map_)
    : system(std::move(system_)), outcomes(outcomes_), map(std::move(map_)) {
  if (system.block_count() != 1 && !system.is_commutative()) {
    throw DomainError("Measurement: system must be one matrix block or commutative");
  }
  if (outcomes == 0) throw DomainError("Measurement: at least one outcome required");
  if (!(map.dom() == system) || !(map.cod() == CStarAlgebra::commutative(outcomes))) {
    throw ShapeError("Measurement: map must go from the system to C^outcomes");
  }
}

Verdict is_measurement(const Measurement& m, double tol) {
  const ComplexMatrix lhs = trace_row(m.map.cod()) * m.map.map();
  return Verdict::within(max_abs_diff(lhs, trace_row(m.system)), tol);
}

Verdict check_povm(const POVM& p, double tol) {
  if (p.elements.empty()) return {false, 1.0};
  const auto d = p.elements.front().rows();
  ComplexMatrix sum = ComplexMatrix::Zero(d, d);
  double dev = 0.0;
  for (const auto& e : p.elements) {
    if (e.rows() != d || e.cols() != d) throw ShapeError("check_povm: elements differ in shape");
    const auto psd = psd_report(e, tol);
    dev = std::max({dev, psd.hermitian_deviation, -psd.min_eigenvalue});
    sum += e;
  }
  dev = std::max(dev, max_abs_diff(sum, ComplexMatrix::Identity(d, d)));
  return Verdict::within(dev, tol);
}

POVM povm_from_measurement(const Measurement& m, double tol) {
  POVM p;
  for (std::size_t i = 0; i < m.outcomes; ++i) {
    // mu[i, (a, b)] = P_i[b, a]
    const ComplexVector row = m.map.map().row(idx(i)).transpose();
    ComplexMatrix e = to_operator(m.system, row).transpose();
    const auto psd = psd_report(e, tol);
    if (!psd.psd) {
      std::ostringstream os;
      os << "povm_from_measurement: element " << i << " is not positive (min eigenvalue "
         << psd.min_eigenvalue << ")";
      fail(os.str(), std::max(psd.hermitian_deviation, -psd.min_eigenvalue));
    }
    p.elements.push_back(std::move(e));
  }
  return p;
}

Measurement measurement_from_povm(const POVM& p, double tol) {
  if (p.elements.empty()) throw DomainError("measurement_from_povm: no elements");
  return measurement_from_povm(
      p, CStarAlgebra::matrix(static_cast<std::size_t>(p.elements.front().rows())), tol);
}

Measurement measurement_from_povm(const POVM& p, const CStarAlgebra& system, double tol) {
  const std::size_t n = p.elements.size();
  if (n == 0) throw DomainError("measurement_from_povm: no elements");
  ComplexMatrix map(idx(n), idx(system.dim()));
  for (std::size_t i = 0; i < n; ++i) {
    const auto& e = p.elements[i];
    const auto psd = psd_report(e, tol);
    if (!psd.psd) {
      std::ostringstream os;
      os << "measurement_from_povm: element " << i << " is not positive (min eigenvalue "
         << psd.min_eigenvalue << ")";
      fail(os.str(), std::max(psd.hermitian_deviation, -psd.min_eigenvalue));
    }
    map.row(idx(i)) = from_operator(system, e.transpose()).transpose();
  }
  return Measurement(system, n, CPMap(system, CStarAlgebra::commutative(n), std::move(map)));
}

ComplexVector uniform_state(std::size_t n) {
  if (n == 0) throw DomainError("uniform_state: n must be at least 1");
  return ComplexVector::Constant(idx(n), 1.0 / static_cast<double>(n));
}

void certify(const TeleportationData& t, double tol) {
  const CStarAlgebra& s = t.system;
  const CStarAlgebra ss = tensor(s, s);
  if (t.n == 0) fail("teleportation: n must be at least 1", 1.0);
  if (t.corrections.size() != t.n) fail("teleportation: need one correction per outcome", 1.0);
  if (t.measurement.outcomes != t.n) {
    fail("teleportation: measurement outcome count differs from n", 1.0);
  }
  if (!(t.measurement.system == ss)) {
    fail("teleportation: measurement must act on system (x) system", 1.0);
  }
  const auto h = idx(ss.hilbert_dim());
  if (t.resource.rows() != h || t.resource.cols() != h) {
    fail("teleportation: resource must act on the Hilbert space of system (x) system", 1.0);
  }
  const double outside =
      max_abs_diff(to_operator(ss, from_operator(ss, t.resource)), t.resource);
  if (outside > tol) fail("teleportation: resource is not an element of system (x) system", outside);
  const auto psd = psd_report(t.resource, tol);
  if (!psd.psd) {
    std::ostringstream os;
    os << "teleportation: resource is not positive (min eigenvalue " << psd.min_eigenvalue << ")";
    fail(os.str(), std::max(psd.hermitian_deviation, -psd.min_eigenvalue));
  }
  const Verdict counit = is_measurement(t.measurement, tol);
  if (!counit.pass) fail("teleportation: measurement does not preserve the counit", counit.deviation);
  const Verdict mcp = is_completely_positive(t.measurement.map, tol).verdict();
  if (!mcp.pass) fail("teleportation: measurement is not completely positive", mcp.deviation);
  for (std::size_t i = 0; i < t.n; ++i) {
    const CPMap& nu = t.corrections[i];
    std::ostringstream os;
    os << "teleportation: correction " << i;
    if (!(nu.dom() == s) || !(nu.cod() == s)) fail(os.str() + " does not act on the system", 1.0);
    const Verdict cp = is_completely_positive(nu, tol).verdict();
    if (!cp.pass) fail(os.str() + " is not completely positive", cp.deviation);
    const auto eig = hermitian_eigen(nu.map().adjoint() * nu.map());
    const double smallest = eig.values.size() ? std::sqrt(std::max(eig.values(0), 0.0)) : 0.0;
    if (smallest <= std::sqrt(tol)) fail(os.str() + " is not invertible", std::sqrt(tol) - smallest);
  }
}

ChannelWithRecord lhs_teleportation(const TeleportationData& t) {
  const CStarAlgebra& s = t.system;
  CPMap corrections = t.corrections.front();
  for (std::size_t i = 1; i < t.corrections.size(); ++i) {
    corrections = direct_sum_cp(corrections, t.corrections[i]);
  }
  const CPMap record = classical_record(t);
  // C^n (x) s is the direct sum of n copies of s; apply nu_i on copy i.
  const CPMap corrected(record.cod(), record.cod(), corrections.map());
  return {s, t.n, CPMap(s, record.cod(), compose_cp(corrected, record).map())};
}

ChannelWithRecord rhs_teleportation(const TeleportationData& t) {
  const CStarAlgebra& s = t.system;
  const CPMap f = tensor_cp(CPMap::state(CStarAlgebra::commutative(t.n), uniform_state(t.n)),
                            CPMap::identity(s));
  return {s, t.n, CPMap(s, f.cod(), f.map())};
}

Verdict check_teleportation(const TeleportationData& t, double tol) {
  certify(t, tol);
  return Verdict::within(
      max_abs_diff(lhs_teleportation(t).map.map(), rhs_teleportation(t).map.map()), tol);
}

CPMap security_lhs(const TeleportationData& t) {
  const CStarAlgebra record = CStarAlgebra::commutative(t.n);
  const CPMap discard = tensor_cp(CPMap::identity(record), CPMap::trace(t.system));
  return CPMap(t.system, record, (discard.map() * classical_record(t).map()));
}

CPMap security_rhs(const TeleportationData& t) {
  const CStarAlgebra record = CStarAlgebra::commutative(t.n);
  return CPMap(t.system, record, ComplexMatrix(uniform_state(t.n)) * trace_row(t.system));
}

Verdict check_security(const TeleportationData& t, double tol) {
  certify(t, tol);
  return Verdict::within(max_abs_diff(security_lhs(t).map(), security_rhs(t).map()), tol);
}

Verdict check_unitary_error_basis(const std::vector<ComplexMatrix>& basis, double tol) {
  if (basis.empty()) fail("unitary error basis: empty", 1.0);
  const auto k = basis.front().rows();
  if (basis.size() != static_cast<std::size_t>(k * k)) {
    fail("unitary error basis: need k^2 operators", 1.0);
  }
  double dev = 0.0;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].rows() != k || basis[i].cols() != k) {
      fail("unitary error basis: operators differ in shape", 1.0);
    }
    dev = std::max(dev, max_abs_diff(basis[i].adjoint() * basis[i], ComplexMatrix::Identity(k, k)));
    for (std::size_t j = 0; j < i; ++j) {
      dev = std::max(dev, std::abs((basis[j].adjoint() * basis[i]).trace()));
    }
  }
  if (dev > tol) {
    std::ostringstream os;
    os << "unitary error basis: deviation " << dev;
    fail(os.str(), dev);
  }
  return {true, dev};
}

std::vector<ComplexMatrix> shift_clock_basis(std::size_t k) {
  if (k == 0) throw DomainError("shift_clock_basis: k must be at least 1");
  const auto n = idx(k);
  ComplexMatrix shift = ComplexMatrix::Zero(n, n);
  ComplexMatrix clock = ComplexMatrix::Zero(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    shift((j + 1) % n, j) = 1.0;
    clock(j, j) = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(j) /
                                      static_cast<double>(k));
  }
  std::vector<ComplexMatrix> out;
  ComplexMatrix xa = ComplexMatrix::Identity(n, n);
  for (std::size_t a = 0; a < k; ++a) {
    ComplexMatrix zb = ComplexMatrix::Identity(n, n);
    for (std::size_t b = 0; b < k; ++b) {
      out.push_back(xa * zb);
      zb = clock * zb;
    }
    xa = shift * xa;
  }
  return out;
}

std::vector<ComplexMatrix> pauli_basis() {
  const Complex i(0.0, 1.0);
  ComplexMatrix id(2, 2), x(2, 2), y(2, 2), z(2, 2);
  id << 1, 0, 0, 1;
  x << 0, 1, 1, 0;
  y << 0, -i, i, 0;
  z << 1, 0, 0, -1;
  return {id, x, y, z};
}

TeleportationData teleportation_from_error_basis(const std::vector<ComplexMatrix>& basis,
                                                 const ComplexMatrix& v, double tol) {
  check_unitary_error_basis(basis, tol);
  const auto k = basis.front().rows();
  const auto ku = static_cast<std::size_t>(k);
  if (v.rows() != k || v.cols() != k) throw ShapeError("teleportation: v must be k x k");
  const ComplexMatrix id = ComplexMatrix::Identity(k, k);
  ComplexMatrix phi = ComplexMatrix::Zero(k * k, 1);
  for (Eigen::Index a = 0; a < k; ++a) phi(a * k + a, 0) = 1.0 / std::sqrt(static_cast<double>(k));

  const ComplexMatrix half = kron(id, v) * phi;
  POVM povm;
  std::vector<CPMap> corrections;
  for (const auto& u : basis) {
    const ComplexMatrix bell = kron(u, id) * phi;
    povm.elements.push_back(bell * bell.adjoint());
    corrections.push_back(conjugation_map(u * v.adjoint()));
  }
  const CStarAlgebra s = CStarAlgebra::matrix(ku);
  return {ku * ku, s, half * half.adjoint(),
          measurement_from_povm(povm, tensor(s, s), tol), std::move(corrections)};
}

TeleportationData teleportation_from_error_basis(const std::vector<ComplexMatrix>& basis,
                                                 double tol) {
  if (basis.empty()) fail("unitary error basis: empty", 1.0);
  const auto k = basis.front().rows();
  return teleportation_from_error_basis(basis, ComplexMatrix::Identity(k, k), tol);
}

TeleportationData standard_qubit_teleportation() {
  return teleportation_from_error_basis(pauli_basis());
}

TeleportationData one_time_pad(const FiniteGroupoid& group) {
  const std::size_t n = group.size();
  return one_time_pad(group, std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

TeleportationData one_time_pad(const FiniteGroupoid& group, const std::vector<double>& key) {
  if (group.objects() != 1) throw DomainError("one_time_pad: groupoid must have one object");
  const auto report = validate_groupoid(group);
  if (!report.valid()) throw DomainError("one_time_pad: invalid group: " + report.violations.front());
  const std::size_t n = group.size();
  if (key.size() != n) throw ShapeError("one_time_pad: key distribution has the wrong length");

  const CStarAlgebra s = CStarAlgebra::commutative(n);
  ComplexMatrix resource = ComplexMatrix::Zero(idx(n * n), idx(n * n));
  for (std::size_t g = 0; g < n; ++g) resource(idx(g * n + g), idx(g * n + g)) = key[g];

  // Message m and key g read off jointly; the record is c = m g.
  ComplexMatrix mu = ComplexMatrix::Zero(idx(n), idx(n * n));
  for (std::size_t m = 0; m < n; ++m) {
    for (std::size_t g = 0; g < n; ++g) mu(idx(*group.compose(m, g)), idx(m * n + g)) = 1.0;
  }
  std::vector<CPMap> corrections;
  for (std::size_t c = 0; c < n; ++c) {
    ComplexMatrix nu = ComplexMatrix::Zero(idx(n), idx(n));
    for (std::size_t k = 0; k < n; ++k) nu(idx(*group.compose(c, group.inv()[k])), idx(k)) = 1.0;
    corrections.emplace_back(s, s, std::move(nu));
  }
  const CStarAlgebra ss = tensor(s, s);
  return {n, s, std::move(resource), Measurement(ss, n, CPMap(ss, CStarAlgebra::commutative(n), std::move(mu))),
          std::move(corrections)};
}

}  // namespace twocp
