#include <benchmark/benchmark.h>

#include "crossbial/zoo.hpp"

using namespace crossbial;

static void BM_CyclotomicMultiply(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Scalar a = root_of_unity(n, 1) + Scalar(Rational(1, 3));
  const Scalar b = root_of_unity(n, n - 1) - Scalar(Rational(2, 5));
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_CyclotomicMultiply)->Arg(3)->Arg(8)->Arg(12);

static void BM_RadfordBuild(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    ZooEntry e = radford({n, 1, n, 1});
    benchmark::DoNotOptimize(e.H.m);
  }
}
BENCHMARK(BM_RadfordBuild)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_HopfAxioms(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ZooEntry e = radford({n, 1, n, 1});
  for (auto _ : state) benchmark::DoNotOptimize(check_axioms(e.H, StructureKind::Hopf).pass());
  state.SetLabel("dim " + std::to_string(e.H.dim()));
}
BENCHMARK(BM_HopfAxioms)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_PhiFixedPoint(benchmark::State& state) {
  const ZooEntry e = zoo_entry(state.range(0) == 0 ? "radford-2-1-2-1" : "double-cross-S4");
  const InducedStructures s = induced_structures(e.datum);
  const LinMap f1 = fixed_point_f1(e.datum, s);
  for (auto _ : state) benchmark::DoNotOptimize(phi_apply(e.datum, f1));
  state.SetLabel(e.name);
}
BENCHMARK(BM_PhiFixedPoint)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_RecursionOrder(benchmark::State& state) {
  const ZooEntry e = zoo_entry("radford-3-1-3-1");
  for (auto _ : state) benchmark::DoNotOptimize(recursion_order(e.datum).order);
}
BENCHMARK(BM_RecursionOrder)->Unit(benchmark::kMillisecond);

static void BM_DoubleBiproduct(benchmark::State& state) {
  DoubleBiproductInput in = sweedler_crossed_modules(static_cast<int>(state.range(0)));
  in.rho = LinMap::from_columns(SpaceList{in.B.space, in.C.space}, {}, [](std::uint64_t c) {
    std::vector<std::pair<std::uint64_t, Scalar>> t;
    if (c == 0 || c == 3) t.emplace_back(0, Scalar(1));
    return t;
  });
  for (auto _ : state) benchmark::DoNotOptimize(double_biproduct(in).Z_twisted.m);
}
BENCHMARK(BM_DoubleBiproduct)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
