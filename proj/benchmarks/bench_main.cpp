// Copyright 2026 The dualsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dualsim/circuit.hpp"
#include "dualsim/measurement.hpp"
#include "dualsim/qubit.hpp"
#include "dualsim/qumode.hpp"
#include "dualsim/wigner.hpp"

#include <benchmark/benchmark.h>

#include <array>
#include <random>

namespace {

using namespace dualsim;

StateVector random_state(std::size_t dim) {
  std::mt19937_64 gen(1);
  std::normal_distribution<double> normal;
  StateVector v(static_cast<Eigen::Index>(dim));
  for (auto& c : v) c = Complex(normal(gen), normal(gen));
  return v / v.norm();
}

void BM_QubitApplyTwoWire(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  QubitRegister reg(n, random_state(std::size_t{1} << n));
  const std::array<double, 1> theta{0.3};
  const QubitGate cp = standard_gate(QubitGateKind::CP, theta);
  const std::array<std::size_t, 2> targets{0, n - 1};
  for (auto _ : state) {
    reg = apply(reg, cp, targets);
    benchmark::DoNotOptimize(reg.state().data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(std::size_t{1} << n));
}
BENCHMARK(BM_QubitApplyTwoWire)->DenseRange(8, 20, 4);

void BM_SqueezerExpm(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(squeezer(0.5, d).matrix.data());
}
BENCHMARK(BM_SqueezerExpm)->RangeMultiplier(2)->Range(8, 64);

void BM_BeamsplitterDense(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(beamsplitter(0.7, 0.1, d).matrix.data());
}
BENCHMARK(BM_BeamsplitterDense)->RangeMultiplier(2)->Range(4, 16);

void BM_BeamsplitterSectors(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  const auto blocks = beamsplitter_blocks(0.7, 0.1, d);
  QumodeRegister reg(3, d, random_state(d * d * d));
  for (auto _ : state) {
    reg = apply(reg, blocks, 0, 2);
    benchmark::DoNotOptimize(reg.state().data());
  }
}
BENCHMARK(BM_BeamsplitterSectors)->RangeMultiplier(2)->Range(4, 32);

void BM_Sample(benchmark::State& state) {
  const StateVector psi = random_state(1024);
  const auto shots = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sample_indices(psi, shots, 7));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Sample)->RangeMultiplier(10)->Range(1000, 1000000);

void BM_WignerPoint(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  const StateVector psi = prepare_squeezed_vacuum(0.5, d);
  for (auto _ : state) benchmark::DoNotOptimize(wigner(psi, 0.4, -0.3));
}
BENCHMARK(BM_WignerPoint)->RangeMultiplier(2)->Range(4, 32);

void BM_ParseSerialize(benchmark::State& state) {
  std::string text = "register qubit 6\n";
  for (int i = 0; i < 200; ++i) text += "RX " + std::to_string(i % 6) + " 0.12345678901234567\nCNOT 0 5\n";
  text += "measure probabilities\n";
  for (auto _ : state) benchmark::DoNotOptimize(serialize(*parse(text).circuit));
}
BENCHMARK(BM_ParseSerialize);

}  // namespace

BENCHMARK_MAIN();
