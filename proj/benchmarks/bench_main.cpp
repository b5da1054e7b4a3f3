// Copyright 2026 The rbg Authors
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

#include "rbg/cyclic_algebra.hpp"
#include "rbg/generators.hpp"
#include "rbg/spectrum.hpp"
#include "rbg/tree_ball.hpp"
#include "rbg/unitary_groups.hpp"

namespace {

void BM_CycloMul(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto a = rbg::random_cyclo(rng, 50), b = rbg::random_cyclo(rng, 50);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_CycloMul);

void BM_GaloisAlgebraMul(benchmark::State& state) {
  const auto p = rbg::AlgebraParams::default_galois();
  std::mt19937_64 rng(2);
  const auto d = rbg::random_galois_elem(p, rng), e = rbg::random_galois_elem(p, rng);
  for (auto _ : state) benchmark::DoNotOptimize(d * e);
}
BENCHMARK(BM_GaloisAlgebraMul);

void BM_GaloisInvolution(benchmark::State& state) {
  const auto p = rbg::AlgebraParams::default_galois();
  std::mt19937_64 rng(3);
  const auto d = rbg::random_galois_elem(p, rng);
  for (auto _ : state) benchmark::DoNotOptimize(rbg::involution(d));
}
BENCHMARK(BM_GaloisInvolution);

void BM_Spectrum(benchmark::State& state) {
  const auto n1 = static_cast<std::size_t>(state.range(0));
  const rbg::Graph g = rbg::random_biregular(n1, 3 * n1, 9, 3, 7);
  for (auto _ : state) benchmark::DoNotOptimize(rbg::spectrum(g));
}
BENCHMARK(BM_Spectrum)->Arg(10)->Arg(40)->Arg(100);

void BM_CertifyRandomBigraph(benchmark::State& state) {
  const rbg::Graph g = rbg::random_biregular(40, 120, 9, 3, 8);
  for (auto _ : state) benchmark::DoNotOptimize(rbg::certify_ramanujan(g));
}
BENCHMARK(BM_CertifyRandomBigraph);

void BM_EnumerateSU3(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rbg::enumerate_su3(2, n));
}
BENCHMARK(BM_EnumerateSU3)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_TreeBall(benchmark::State& state) {
  const auto r = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rbg::biregular_tree_ball(9, 3, r));
}
BENCHMARK(BM_TreeBall)->DenseRange(2, 6, 2);

}  // namespace
BENCHMARK_MAIN();
