#include <benchmark/benchmark.h>

#include "biqtor/biquotient.hpp"
#include "biqtor/int_matrix.hpp"
#include "biqtor/lattice.hpp"

using namespace biqtor;

namespace {

IntMatrix random_matrix(SplitMix64& rng, std::size_t n, long span) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = static_cast<long>(rng.next_in(-span, span));
  return m;
}

void BM_SmithNormalForm(benchmark::State& state) {
  SplitMix64 rng(1);
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<IntMatrix> inputs;
  for (int i = 0; i < 32; ++i) inputs.push_back(random_matrix(rng, n, 50));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(smith_normal_form(inputs[i++ % inputs.size()]));
  }
}
BENCHMARK(BM_SmithNormalForm)->Arg(3)->Arg(5)->Arg(8);

void BM_HermiteNormalForm(benchmark::State& state) {
  SplitMix64 rng(2);
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<IntMatrix> inputs;
  for (int i = 0; i < 32; ++i) inputs.push_back(random_matrix(rng, n, 50));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(hermite_normal_form(inputs[i++ % inputs.size()]));
  }
}
BENCHMARK(BM_HermiteNormalForm)->Arg(3)->Arg(5)->Arg(8);

void BM_LatticeIntersect(benchmark::State& state) {
  SplitMix64 rng(3);
  const std::size_t r = 6;
  Sublattice k1 = Sublattice::from_generators(r, random_matrix(rng, r, 9));
  Sublattice k2 = Sublattice::from_generators(r, random_matrix(rng, r, 9));
  for (auto _ : state) {
    benchmark::DoNotOptimize(lattice_intersect(k1, k2));
  }
}
BENCHMARK(BM_LatticeIntersect);

}  // namespace
