/**
 * This code is part of kpmap.
 *
 * (C) Copyright kpmap developers 2026.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license in the LICENSE.txt file in the root directory
 * of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.
 *
 * Any modifications or derivative works of this code must retain this
 * copyright notice, and modified files need to carry a notice indicating
 * that they have been altered from the originals.
 */

#include <benchmark/benchmark.h>

#include "kpmap/certify.hpp"
#include "kpmap/jamiolkowski.hpp"
#include "kpmap/positivity.hpp"
#include "kpmap/rng.hpp"
#include "kpmap/schmidt.hpp"

namespace {

using namespace kpmap;

void BM_Tensor(benchmark::State &state) {
  const Index n = state.range(0);
  Rng rng(1);
  const CMatrix a = random_gaussian(n, n, rng);
  const CMatrix b = random_gaussian(n, n, rng);
  for (auto _ : state)
    benchmark::DoNotOptimize(tensor(a, b));
  state.SetComplexityN(n);
}
BENCHMARK(BM_Tensor)->RangeMultiplier(2)->Range(2, 16)->Complexity();

void BM_Apply(benchmark::State &state) {
  const Index n = state.range(0);
  Rng rng(2);
  const LinearMap t(n, n, random_hermitian(n * n, rng));
  const CMatrix a = random_gaussian(n, n, rng);
  for (auto _ : state)
    benchmark::DoNotOptimize(t.apply(a));
}
BENCHMARK(BM_Apply)->DenseRange(2, 8, 2);

void BM_SchmidtDecompose(benchmark::State &state) {
  const Index n = state.range(0);
  Rng rng(3);
  CVector v(n * n);
  for (Index i = 0; i < v.size(); ++i)
    v(i) = rng.complex_normal();
  for (auto _ : state)
    benchmark::DoNotOptimize(schmidt_decompose(v, n, n));
}
BENCHMARK(BM_SchmidtDecompose)->DenseRange(2, 8, 2);

void BM_HermiticityDefect(benchmark::State &state) {
  const Index n = state.range(0);
  Rng rng(4);
  const LinearMap t(n, n, random_hermitian(n * n, rng));
  for (auto _ : state)
    benchmark::DoNotOptimize(hermiticity_defect(t));
}
BENCHMARK(BM_HermiticityDefect)->DenseRange(2, 8, 2);

void BM_MinimizeRankConstrained(benchmark::State &state) {
  const Index n = state.range(0);
  Rng rng(5);
  const CMatrix w = random_hermitian(n * n, rng);
  const SearchBudget budget{8, 200, 42};
  for (auto _ : state)
    benchmark::DoNotOptimize(
        minimize_rank_constrained(w, n, n, 1, budget, 42));
}
BENCHMARK(BM_MinimizeRankConstrained)->DenseRange(2, 4, 1);

void BM_IsCompletelyPositive(benchmark::State &state) {
  const Index n = state.range(0);
  Rng rng(6);
  const LinearMap t(n, n, random_hermitian(n * n, rng));
  for (auto _ : state)
    benchmark::DoNotOptimize(is_completely_positive(t));
}
BENCHMARK(BM_IsCompletelyPositive)->DenseRange(2, 8, 2);

} // namespace

BENCHMARK_MAIN();
