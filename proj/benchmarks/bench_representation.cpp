#include <benchmark/benchmark.h>

#include "mcl/representation.hpp"

using namespace mcl;

namespace {

std::vector<CMatrix> generation_family(int modulus, int indices) {
  const Modulus mod(modulus);
  const IndexSet idx(indices);
  const CMatrix UH = fourier_tensor(mod, idx);
  std::vector<CMatrix> gens;
  for (const auto& c : coatoms(mod, idx)) {
    gens.push_back(coatom_projection(c));
    gens.push_back(UH * coatom_projection(c) * UH.adjoint());
  }
  return gens;
}

}  // namespace

static void BM_SpanClosureFull(benchmark::State& state) {
  const auto gens = generation_family(5, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(span_closure(gens).dimension());
  }
}
BENCHMARK(BM_SpanClosureFull)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

static void BM_CommutantDimension(benchmark::State& state) {
  const Modulus modulus(5);
  const IndexSet indices(static_cast<int>(state.range(0)));
  std::vector<CMatrix> projs;
  for (const auto& c : coatoms(modulus, indices)) {
    projs.push_back(coatom_projection(c));
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(commutant_dimension(projs));
  }
}
BENCHMARK(BM_CommutantDimension)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

static void BM_KroneckerChain(benchmark::State& state) {
  const std::vector<CMatrix> factors(static_cast<std::size_t>(state.range(0)),
                                     fourier_matrix(4));
  for (auto _ : state) {
    benchmark::DoNotOptimize(kron(factors));
  }
}
BENCHMARK(BM_KroneckerChain)->Arg(2)->Arg(3)->Arg(4);

static void BM_WreathMatrix(benchmark::State& state) {
  const Modulus modulus(5);
  const IndexSet indices(2);
  const auto gens = aut_generators(modulus, indices);
  for (auto _ : state) {
    for (const auto& w : gens) {
      benchmark::DoNotOptimize(wreath_matrix(w, modulus, indices));
    }
  }
}
BENCHMARK(BM_WreathMatrix);
