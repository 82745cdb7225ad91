#include <benchmark/benchmark.h>

#include "mobius/adjoint.hpp"
#include "mobius/invariants.hpp"
#include "mobius/pair.hpp"

using namespace mobius;

static void BM_JetMultiply(benchmark::State& state) {
  const int K = static_cast<int>(state.range(0));
  const Jet2 a = exp(Jet2::coordinate_z(0.3, 0.7, K));
  const Jet2 b = sin(Jet2::coordinate_u(0.3, K)) + Complex(2.0);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_JetMultiply)->Arg(4)->Arg(6)->Arg(9);

static void BM_CanonicalLift(benchmark::State& state) {
  const SurfaceChart ch = catalog("veronese");
  for (auto _ : state)
    benchmark::DoNotOptimize(canonical_lift_at(ch, 0.8, 1.3, 6));
}
BENCHMARK(BM_CanonicalLift);

static void BM_FrameAt(benchmark::State& state) {
  const SurfaceChart ch = catalog("clifford");
  const JetVec Y = canonical_lift_at(ch, 0.8, 1.3, 6);
  for (auto _ : state) benchmark::DoNotOptimize(frame_at(Y));
}
BENCHMARK(BM_FrameAt);

static void BM_StructureResiduals(benchmark::State& state) {
  const FramePoint fp = frame_at_point(catalog("veronese"), 0.8, 1.3, 6);
  for (auto _ : state) benchmark::DoNotOptimize(structure_residuals(fp));
}
BENCHMARK(BM_StructureResiduals);

static void BM_PairInvariants(benchmark::State& state) {
  const FramePoint fp = frame_at_point(catalog("clifford"), 0.8, 1.3, 6);
  for (auto _ : state) benchmark::DoNotOptimize(pair_invariants(fp, fp.N));
}
BENCHMARK(BM_PairInvariants);

static void BM_AdjointPoint(benchmark::State& state) {
  const FramePoint fp = frame_at_point(catalog("veronese"), 0.8, 1.3, 9);
  const Jet2 mu = mu_swillmore(fp);
  for (auto _ : state) benchmark::DoNotOptimize(adjoint_point(fp, mu));
}
BENCHMARK(BM_AdjointPoint);

BENCHMARK_MAIN();
