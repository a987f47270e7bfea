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

#include <benchmark/benchmark.h>

#include "twocp/bimodule.hpp"
#include "twocp/cpstar.hpp"
#include "twocp/frobenius.hpp"
#include "twocp/groupoid.hpp"
#include "twocp/protocols.hpp"

namespace {

using namespace twocp;

void BM_CheckFrobeniusMatrix(benchmark::State& state) {
  const auto a = matrix_algebra(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check_frobenius(a));
}
BENCHMARK(BM_CheckFrobeniusMatrix)->DenseRange(2, 4);

void BM_ChoiCheckIdentity(benchmark::State& state) {
  const auto f = CPMap::identity(CStarAlgebra::matrix(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(is_completely_positive(f));
}
BENCHMARK(BM_ChoiCheckIdentity)->RangeMultiplier(2)->Range(2, 8);

void BM_CpWitness(benchmark::State& state) {
  const auto f = CPMap::identity(CStarAlgebra::matrix(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(cp_witness(f));
}
BENCHMARK(BM_CpWitness)->RangeMultiplier(2)->Range(2, 8);

void BM_ComposeIdentityBimodules(benchmark::State& state) {
  const auto id = identity_bimodule(classical_structure(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(compose_bimodules(id, id));
}
BENCHMARK(BM_ComposeIdentityBimodules)->DenseRange(2, 6, 2);

void BM_GroupoidRoundTrip(benchmark::State& state) {
  const auto g = cyclic_group(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(algebra_to_groupoid(groupoid_to_algebra(g)));
}
BENCHMARK(BM_GroupoidRoundTrip)->DenseRange(2, 6, 2);

void BM_QubitTeleportation(benchmark::State& state) {
  const auto t = standard_qubit_teleportation();
  for (auto _ : state) benchmark::DoNotOptimize(check_teleportation(t));
}
BENCHMARK(BM_QubitTeleportation);

void BM_OneTimePadSecurity(benchmark::State& state) {
  const auto t = one_time_pad(cyclic_group(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(check_security(t));
}
BENCHMARK(BM_OneTimePadSecurity)->DenseRange(2, 4);

}  // namespace

BENCHMARK_MAIN();
