#include <benchmark/benchmark.h>

#include "biqtor/diag_tor.hpp"
#include "biqtor/groebner.hpp"
#include "biqtor/koszul.hpp"
#include "biqtor/root_datum.hpp"

using namespace biqtor;

namespace {

std::vector<Polynomial<RationalField>> diagonal_ideal(const AffineContext<RationalField>& ctx,
                                                      const GroupSpec& spec) {
  RootDatum d = build_root_datum(spec);
  TorusSubgroup t = TorusSubgroup::full_torus(d.rank);
  std::vector<Polynomial<RationalField>> out;
  for (const auto& z : diagonal_generators(d, t, t)) out.push_back(laurent_to_affine(ctx, z));
  return out;
}

void BM_GroebnerDiagonalSU3(benchmark::State& state) {
  AffineContext<RationalField> ctx(4, RationalField{});
  auto gens = diagonal_ideal(ctx, GroupSpec{{su(3)}});
  for (auto _ : state) {
    benchmark::DoNotOptimize(groebner_basis(ctx, gens));
  }
}
BENCHMARK(BM_GroebnerDiagonalSU3);

void BM_GroebnerDiagonalSp2(benchmark::State& state) {
  AffineContext<RationalField> ctx(4, RationalField{});
  auto gens = diagonal_ideal(ctx, GroupSpec{{sp(2)}});
  for (auto _ : state) {
    benchmark::DoNotOptimize(groebner_basis(ctx, gens));
  }
}
BENCHMARK(BM_GroebnerDiagonalSp2);

void BM_KoszulHomologySU3(benchmark::State& state) {
  AffineContext<RationalField> ctx(4, RationalField{});
  auto gens = diagonal_ideal(ctx, GroupSpec{{su(3)}});
  for (auto _ : state) {
    benchmark::DoNotOptimize(koszul_homology(ctx, gens, 2));
  }
}
BENCHMARK(BM_KoszulHomologySU3);

void BM_GroebnerPrimeField(benchmark::State& state) {
  AffineContext<PrimeField> ctx(4, PrimeField(32003));
  RootDatum d = build_root_datum(GroupSpec{{su(3)}});
  TorusSubgroup t = TorusSubgroup::full_torus(d.rank);
  std::vector<Polynomial<PrimeField>> gens;
  for (const auto& z : diagonal_generators(d, t, t)) gens.push_back(laurent_to_affine(ctx, z));
  for (auto _ : state) {
    benchmark::DoNotOptimize(groebner_basis(ctx, gens));
  }
}
BENCHMARK(BM_GroebnerPrimeField);

}  // namespace
