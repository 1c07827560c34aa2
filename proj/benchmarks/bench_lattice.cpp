#include <benchmark/benchmark.h>

#include "mcl/lattice.hpp"

using namespace mcl;

static void BM_MeetJoinSweep(benchmark::State& state) {
  const Modulus modulus(static_cast<int>(state.range(0)));
  const auto elems = enumerate_elements(modulus, IndexSet(2), false);
  for (auto _ : state) {
    for (const auto& a : elems) {
      for (const auto& b : elems) {
        benchmark::DoNotOptimize(meet(a, b));
        benchmark::DoNotOptimize(join(a, b));
      }
    }
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                          static_cast<std::int64_t>(elems.size() * elems.size()) * 2);
}
BENCHMARK(BM_MeetJoinSweep)->Arg(5)->Arg(9);

static void BM_AtomEnumeration(benchmark::State& state) {
  const Modulus modulus(7);
  const IndexSet indices(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(atoms(modulus, indices));
  }
}
BENCHMARK(BM_AtomEnumeration)->Arg(2)->Arg(4);

static void BM_DeltaSweep(benchmark::State& state) {
  const Modulus modulus(5);
  const auto elems = enumerate_elements(modulus, IndexSet(2), false);
  for (auto _ : state) {
    for (const auto& b : elems) {
      for (const auto& a : elems) {
        if (!leq(a, b)) continue;
        benchmark::DoNotOptimize(delta(b, a));
      }
    }
  }
}
BENCHMARK(BM_DeltaSweep);
