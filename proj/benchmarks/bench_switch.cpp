// Copyright 2026 The qswitch authors
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

#include <cmath>
#include <random>

#include "qsw/gates.hpp"
#include "qsw/quantum_switch.hpp"
#include "qsw/relabel.hpp"

namespace {

// Gram-Schmidt on Ginibre columns; good enough for timing.
qsw::Operator random_unitary(std::size_t d, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<std::vector<qsw::Complex>> cols(d, std::vector<qsw::Complex>(d));
  for (auto& col : cols) {
    for (auto& c : col) c = qsw::Complex{gauss(rng), gauss(rng)};
  }
  for (std::size_t k = 0; k < d; ++k) {
    for (std::size_t j = 0; j < k; ++j) {
      qsw::Complex proj{0.0, 0.0};
      for (std::size_t i = 0; i < d; ++i) {
        proj += std::conj(cols[j][i]) * cols[k][i];
      }
      for (std::size_t i = 0; i < d; ++i) cols[k][i] -= proj * cols[j][i];
    }
    double n = 0.0;
    for (const auto& c : cols[k]) n += std::norm(c);
    n = std::sqrt(n);
    for (auto& c : cols[k]) c /= n;
  }
  std::vector<qsw::Complex> entries(d * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t k = 0; k < d; ++k) entries[i * d + k] = cols[k][i];
  }
  return qsw::Operator(d, std::move(entries));
}

qsw::StateVector random_state(std::size_t d, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<qsw::Complex> amps(d);
  for (auto& a : amps) a = qsw::Complex{gauss(rng), gauss(rng)};
  double n = 0.0;
  for (const auto& a : amps) n += std::norm(a);
  n = std::sqrt(n);
  for (auto& a : amps) a /= n;
  return qsw::StateVector(std::move(amps));
}

void BM_SwitchUnitary(benchmark::State& state) {
  std::mt19937_64 rng(11);
  const std::size_t d = static_cast<std::size_t>(state.range(0));
  const qsw::SwitchCircuit c(random_unitary(d, rng), random_unitary(d, rng));
  for (auto _ : state) {
    benchmark::DoNotOptimize(qsw::switch_unitary(c));
  }
}
BENCHMARK(BM_SwitchUnitary)->Arg(2)->Arg(4)->Arg(8);

void BM_RunAndMeasure(benchmark::State& state) {
  std::mt19937_64 rng(12);
  const std::size_t d = static_cast<std::size_t>(state.range(0));
  const qsw::SwitchCircuit c(random_unitary(d, rng), random_unitary(d, rng));
  const qsw::StateVector control = random_state(2, rng);
  const qsw::StateVector target = random_state(d, rng);
  const qsw::ControlBasis basis = qsw::ControlBasis::computational();
  for (auto _ : state) {
    const qsw::StateVector joint = qsw::run_switch(c, control, target);
    benchmark::DoNotOptimize(qsw::measure_control(joint, basis));
  }
}
BENCHMARK(BM_RunAndMeasure)->Arg(2)->Arg(4)->Arg(8);

void BM_Relabel(benchmark::State& state) {
  std::mt19937_64 rng(13);
  const std::size_t d = static_cast<std::size_t>(state.range(0));
  const qsw::Operator a = random_unitary(d, rng);
  const qsw::Operator b = random_unitary(d, rng);
  const qsw::StateVector control = random_state(2, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qsw::relabel(a, b, control));
  }
}
BENCHMARK(BM_Relabel)->Arg(2)->Arg(4)->Arg(8);

void BM_ConsistencyReport(benchmark::State& state) {
  std::mt19937_64 rng(14);
  const std::size_t d = static_cast<std::size_t>(state.range(0));
  const qsw::SwitchCircuit c(random_unitary(d, rng), random_unitary(d, rng));
  const qsw::StateVector control = random_state(2, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qsw::consistency_report(c, control));
  }
}
BENCHMARK(BM_ConsistencyReport)->Arg(2)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
