#include <benchmark/benchmark.h>

#include "latlab/heights.hpp"
#include "latlab/partitions.hpp"
#include "latlab/prospector.hpp"
#include "latlab/weyl_refuter.hpp"

namespace {

using namespace latlab;

void BM_EnumerateRoots(benchmark::State& state) {
  const int box = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto roots = enumerate_roots22(box);
    benchmark::DoNotOptimize(roots);
  }
}
BENCHMARK(BM_EnumerateRoots)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_OrthogonalRoot(benchmark::State& state) {
  const long long amp = state.range(0);
  long long tick = 0;
  for (auto _ : state) {
    const Vec22 rho(tick % amp + 1, (tick * 7) % amp - amp / 2,
                    (tick * 13) % amp, (tick * 31) % amp - amp / 3);
    auto cert = orthogonal_root(rho);
    benchmark::DoNotOptimize(cert);
    ++tick;
  }
}
BENCHMARK(BM_OrthogonalRoot)->Arg(10)->Arg(1000)->Arg(1000000);

void BM_Classify(benchmark::State& state) {
  const GramLattice L = GramLattice::gamma(17, 1);
  for (auto _ : state) {
    auto c = L.classify();
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_Classify);

void BM_E8Roots(benchmark::State& state) {
  const GramLattice e8 = GramLattice::standard(StandardLattice::E8);
  const int box = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto roots = e8.enumerate_norm(Int(2), box);
    benchmark::DoNotOptimize(roots);
  }
}
BENCHMARK(BM_E8Roots)->Arg(2)->Arg(4)->Arg(6);

void BM_SmallHeightRoot(benchmark::State& state) {
  const HeightFunctional h{CertifiedReal::rational(Rat(0)), CertifiedReal::sqrt_of(Int(2)),
                           CertifiedReal::rational(Rat(0)), CertifiedReal::rational(Rat(1))};
  Rat eps(1);
  for (int i = 0; i < state.range(0); ++i) eps /= 10;
  for (auto _ : state) {
    auto out = small_height_root(h, eps);
    benchmark::DoNotOptimize(out);
  }
}
BENCHMARK(BM_SmallHeightRoot)->Arg(2)->Arg(6);

void BM_RootMultiplicity(benchmark::State& state) {
  const long long depth = state.range(0);
  for (auto _ : state) {
    auto m = root_multiplicity(26, Int(-2 * depth));
    benchmark::DoNotOptimize(m);
  }
}
BENCHMARK(BM_RootMultiplicity)->Arg(16)->Arg(256)->Arg(2048);

void BM_GenerationCheck(benchmark::State& state) {
  const int box = static_cast<int>(state.range(0));
  const SplitRoots s = split_positive(enumerate_roots22(box), OrderingFunctional::lex());
  const CandidateBasis basis = indecomposables(s.positives, box);
  for (auto _ : state) {
    auto report = generation_check(basis, box);
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(BM_GenerationCheck)->Arg(2)->Arg(3);

}  // namespace

int main(int argc, char** argv) {
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  return 0;
}
