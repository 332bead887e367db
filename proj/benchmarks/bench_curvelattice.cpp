#include "curvelattice/cubic.hpp"
#include "curvelattice/k3.hpp"
#include "curvelattice/quartic.hpp"

#include <benchmark/benchmark.h>

#include <string>

namespace {

using namespace curvelattice;

// Cohomology of a class one peel away from the nef cone.
void BM_CohomologyNearNef(benchmark::State& state) {
  const K3Model& m = K3Model::q1();
  const DivClass2 c{8, 6};
  for (auto _ : state) {
    CohDims h = cohomology(m, c);
    benchmark::DoNotOptimize(h);
  }
}
BENCHMARK(BM_CohomologyNearNef);

// Deep peeling: (a, 2) needs ~a subtractions of the (-2)-curve before the
// remainder is nef, so the engine's per-step cost shows up directly.
void BM_CohomologyDeepPeel(benchmark::State& state) {
  const K3Model& m = K3Model::q1();
  const DivClass2 c{Int(state.range(0)), 2};
  for (auto _ : state) {
    CohDims h = cohomology(m, c);
    benchmark::DoNotOptimize(h);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CohomologyDeepPeel)->Range(64, 4096)->Complexity();

void BM_H1IdealQuartic(benchmark::State& state) {
  const K3Model& m = K3Model::q1();
  const DivClass2 c{15, 10};
  for (auto _ : state) {
    Int h1 = h1_ideal_quartic(m, c, 4);
    benchmark::DoNotOptimize(h1);
  }
}
BENCHMARK(BM_H1IdealQuartic);

void BM_ClassifyQuartic(benchmark::State& state) {
  const K3Model& m = K3Model::q1();
  const DivClass2 c{14, 10};
  for (auto _ : state) {
    QuarticVerdict v = classify_quartic(m, c);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_ClassifyQuartic);

// Band scan including the per-class classification cost.
void BM_EnumerateQ1Band(benchmark::State& state) {
  const Int b_max(state.range(0));
  for (auto _ : state) {
    auto classes = enumerate_families_q1(b_max);
    benchmark::DoNotOptimize(classes);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EnumerateQ1Band)->Range(25, 400)->Complexity();

void BM_MaxGenusScan(benchmark::State& state) {
  for (auto _ : state) {
    Int acc = 0;
    for (Int d = 21; d <= 2000; ++d) acc += max_genus(d, 5).g;
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_MaxGenusScan);

// Exact arithmetic far beyond 64 bits: d = 10^30.
void BM_MaxGenusBigInt(benchmark::State& state) {
  const Int d = parse_int("1" + std::string(30, '0'));
  for (auto _ : state) {
    MaxGenus g = max_genus(d, 5);
    benchmark::DoNotOptimize(g);
  }
}
BENCHMARK(BM_MaxGenusBigInt);

void BM_ClassifyCubic(benchmark::State& state) {
  const Septuple t(15, {Int(5), Int(4), Int(4), Int(4), Int(4), Int(2)});
  for (auto _ : state) {
    CubicVerdict v = classify_cubic(t);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_ClassifyCubic);

}  // namespace

BENCHMARK_MAIN();
