#include <benchmark/benchmark.h>

#include "mcl/groups.hpp"

using namespace mcl;

static void BM_CentralizerBruteForce(benchmark::State& state) {
  const Modulus modulus(static_cast<int>(state.range(0)));
  const auto gens = unit_group_perms(modulus);
  for (auto _ : state) {
    benchmark::DoNotOptimize(centralizer_in_sym(gens, modulus.symbols()));
  }
}
BENCHMARK(BM_CentralizerBruteForce)->Arg(5)->Arg(7)->Arg(9)->Unit(benchmark::kMillisecond);

static void BM_AutClosure(benchmark::State& state) {
  const Modulus modulus(static_cast<int>(state.range(0)));
  const IndexSet indices(2);
  const auto gens = aut_generators(modulus, indices);
  for (auto _ : state) {
    benchmark::DoNotOptimize(atom_action_group(gens, modulus, indices).order());
  }
}
BENCHMARK(BM_AutClosure)->Arg(3)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

static void BM_WreathAtomAction(benchmark::State& state) {
  const Modulus modulus(5);
  const IndexSet indices(3);
  const auto gens = aut_generators(modulus, indices);
  for (auto _ : state) {
    for (const auto& w : gens) {
      benchmark::DoNotOptimize(w.atom_action(modulus, indices));
    }
  }
}
BENCHMARK(BM_WreathAtomAction);
