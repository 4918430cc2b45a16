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

#include <random>

#include "qsw/linalg.hpp"
#include "qsw/process_space.hpp"

namespace {

qsw::Operator random_operator(std::size_t d, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<qsw::Complex> entries(d * d);
  for (auto& e : entries) e = qsw::Complex{gauss(rng), gauss(rng)};
  return qsw::Operator(d, std::move(entries));
}

void BM_TensorProduct(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const std::size_t d = static_cast<std::size_t>(state.range(0));
  const qsw::Operator x = random_operator(d, rng);
  const qsw::Operator y = random_operator(d, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qsw::tensor_product(x, y));
  }
}
BENCHMARK(BM_TensorProduct)->Arg(2)->Arg(4)->Arg(8);

void BM_MatrixProduct(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const std::size_t d = static_cast<std::size_t>(state.range(0));
  const qsw::Operator x = random_operator(d, rng);
  const qsw::Operator y = random_operator(d, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(x * y);
  }
}
BENCHMARK(BM_MatrixProduct)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

void BM_UnitarityDefect(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const std::size_t d = static_cast<std::size_t>(state.range(0));
  const qsw::Operator x = random_operator(d, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qsw::unitarity_defect(x));
  }
}
BENCHMARK(BM_UnitarityDefect)->Arg(2)->Arg(8);

void BM_VectorizeRoundTrip(benchmark::State& state) {
  std::mt19937_64 rng(4);
  const std::size_t d = static_cast<std::size_t>(state.range(0));
  const qsw::Operator x = random_operator(d, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        qsw::devectorize(qsw::vectorize(x, "U")));
  }
}
BENCHMARK(BM_VectorizeRoundTrip)->Arg(2)->Arg(4)->Arg(8);

void BM_DistillOrthogonal(benchmark::State& state) {
  std::mt19937_64 rng(5);
  const std::size_t d = static_cast<std::size_t>(state.range(0));
  const qsw::ProcessVector v = qsw::vectorize(random_operator(d, rng), "V");
  const qsw::ProcessVector w = qsw::vectorize(random_operator(d, rng), "W");
  for (auto _ : state) {
    benchmark::DoNotOptimize(qsw::distill_orthogonal(v, w));
  }
}
BENCHMARK(BM_DistillOrthogonal)->Arg(2)->Arg(4)->Arg(8);

}  // namespace
