// SPDX-License-Identifier: Apache-2.0
//
// Microbenchmarks for the hot paths: closed-form Eulerian rows, character
// table construction, insertion round trips, tensor traces, and the
// coinvariant machinery.  Everything is exact arithmetic, so these mostly
// track GMP allocation behavior; treat the numbers as regression canaries,
// not as a performance contract.

#include <benchmark/benchmark.h>

#include "wreathchar/char_table.hpp"
#include "wreathchar/coinvariant.hpp"
#include "wreathchar/colored_perm.hpp"
#include "wreathchar/foulkes.hpp"
#include "wreathchar/rsk.hpp"
#include "wreathchar/tensor.hpp"

using namespace wreathchar;

namespace {

void BM_EulerianRow(benchmark::State& state) {
  const auto r = static_cast<unsigned long>(state.range(0));
  const auto n = static_cast<unsigned long>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(eulerian_row(r, n));
}
BENCHMARK(BM_EulerianRow)->Args({2, 6})->Args({3, 5})->Args({2, 12});

void BM_CharacterTable(benchmark::State& state) {
  const auto r = static_cast<unsigned long>(state.range(0));
  const auto n = static_cast<unsigned long>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(irreducible_table(r, n));
}
BENCHMARK(BM_CharacterTable)
    ->Args({2, 3})
    ->Args({3, 3})
    ->Args({2, 4})
    ->Unit(benchmark::kMillisecond);

// One unit = inserting and inverting every element of W(2,4).
void BM_RskRoundTrip(benchmark::State& state) {
  const auto elems = all_elements(2, 4);
  for (auto _ : state)
    for (const auto& w : elems) {
      auto [s, t] = rsk(w);
      benchmark::DoNotOptimize(rsk_inverse(s, t));
    }
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) *
                          static_cast<int64_t>(elems.size()));
}
BENCHMARK(BM_RskRoundTrip)->Unit(benchmark::kMillisecond);

void BM_UnsignedTraceCharacter(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(unsigned_trace_character(3, 3, 2));
}
BENCHMARK(BM_UnsignedTraceCharacter)->Unit(benchmark::kMillisecond);

void BM_FoulkesDecomposition(benchmark::State& state) {
  const CharacterTable table = irreducible_table(2, 4);
  for (auto _ : state)
    for (unsigned long k = 0; k <= 4; ++k)
      benchmark::DoNotOptimize(foulkes_multiplicities(table, k));
}
BENCHMARK(BM_FoulkesDecomposition)->Unit(benchmark::kMillisecond);

void BM_CoinvariantConstruction(benchmark::State& state) {
  const auto r = static_cast<unsigned long>(state.range(0));
  const auto n = static_cast<unsigned long>(state.range(1));
  for (auto _ : state) {
    CoinvariantAlgebra alg(r, n, FlagVariant::InteriorColor);
    benchmark::DoNotOptimize(alg.dimension());
  }
}
BENCHMARK(BM_CoinvariantConstruction)
    ->Args({1, 4})
    ->Args({2, 3})
    ->Unit(benchmark::kMillisecond);

void BM_GradedTrace(benchmark::State& state) {
  const CoinvariantAlgebra alg(2, 3, FlagVariant::InteriorColor);
  const auto classes = conjugacy_classes(2, 3);
  for (auto _ : state)
    for (const auto& mu : classes)
      benchmark::DoNotOptimize(alg.graded_trace(class_representative(2, mu)));
}
BENCHMARK(BM_GradedTrace)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
