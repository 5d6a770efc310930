#include <benchmark/benchmark.h>

#include "biqtor/biquotient.hpp"
#include "biqtor/diag_tor.hpp"
#include "biqtor/toral_tor.hpp"

using namespace biqtor;

namespace {

void BM_WeylEnumerationSp3(benchmark::State& state) {
  RootDatum d = build_root_datum(GroupSpec{{sp(3)}});  // 48 elements
  for (auto _ : state) {
    std::size_t count = 0;
    for_each_weyl_element(d, [&](const WeylElement&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_WeylEnumerationSp3);

void BM_ClassifyPairSU3(benchmark::State& state) {
  RootDatum d = build_root_datum(GroupSpec{{su(3)}});
  TorusSubgroup s1{2, saturate(Sublattice::from_generators(2, IntMatrix{{1, 2}}))};
  TorusSubgroup s2{2, saturate(Sublattice::from_generators(2, IntMatrix{{1, 1}}))};
  for (auto _ : state) {
    benchmark::DoNotOptimize(classify_pair(d, s1, s2));
  }
}
BENCHMARK(BM_ClassifyPairSU3);

void BM_ToralTorRank3(benchmark::State& state) {
  TorusSubgroup s1{3, Sublattice::from_generators(3, IntMatrix{{1, 2, 0}, {0, 3, 1}})};
  TorusSubgroup s2{3, Sublattice::from_generators(3, IntMatrix{{2, 1, 1}})};
  for (auto _ : state) {
    benchmark::DoNotOptimize(toral_tor(3, s1, s2));
  }
}
BENCHMARK(BM_ToralTorRank3);

void BM_VerifyTheoremSU3(benchmark::State& state) {
  RootDatum d = build_root_datum(GroupSpec{{su(3)}});
  TorusSubgroup trivial = TorusSubgroup::trivial(2);
  TorusSubgroup circle = subgroup_from_cocharacters(2, IntMatrix{{1, -1}});
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_theorem(d, trivial, circle));
  }
}
BENCHMARK(BM_VerifyTheoremSU3);

void BM_EnlargeTorusSU3(benchmark::State& state) {
  RootDatum d = build_root_datum(GroupSpec{{su(3)}});
  TorusSubgroup trivial = TorusSubgroup::trivial(2);
  TorusSubgroup circle = subgroup_from_cocharacters(2, IntMatrix{{1, -1}});
  std::uint64_t seed = 0;
  for (auto _ : state) {
    EnlargeOptions opts;
    opts.seed = seed++;
    benchmark::DoNotOptimize(enlarge_torus(d, trivial, circle, opts));
  }
}
BENCHMARK(BM_EnlargeTorusSU3);

}  // namespace
