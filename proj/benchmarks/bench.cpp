// Microbenchmarks for the hot paths: the visibility sweep, daisy
// scanning, and the small exact solvers.  Run manually; not wired into
// ctest.

#include <benchmark/benchmark.h>

#include "visicube/daisy.hpp"
#include "visicube/exact.hpp"
#include "visicube/mv_build.hpp"
#include "visicube/vertex.hpp"
#include "visicube/vertex_set.hpp"
#include "visicube/visibility.hpp"

namespace {

using namespace visicube;

VertexSet layer_union(int n, int r1, int r2) {
  std::vector<Vertex> verts = layer_members(n, r1);
  for (Vertex v : layer_members(n, r2)) verts.push_back(v);
  return VertexSet(n, std::move(verts));
}

void BM_VisibilityPair(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  VertexSet m = layer_union(n, 1, 4);
  const Vertex top = (Vertex{1} << n) - 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_visible(0, top, m));
  }
}
BENCHMARK(BM_VisibilityPair)->DenseRange(6, 12, 2);

void BM_MvSweep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  VertexSet m = layer_union(n, 1, 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mv_violation(m));
  }
}
BENCHMARK(BM_MvSweep)->DenseRange(6, 9, 1);

void BM_MvSweepThreaded(benchmark::State& state) {
  VertexSet m = layer_union(10, 1, 4);
  const int threads = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(mv_violation(m, threads));
  }
}
BENCHMARK(BM_MvSweepThreaded)->Arg(1)->Arg(2)->Arg(4);

void BM_DaisyScan(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  LayerFamily full = LayerFamily::full_layer(n, n / 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(find_daisy(full, 6, 3));
  }
}
BENCHMARK(BM_DaisyScan)->DenseRange(7, 10, 1);

void BM_GreedyFamily(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(greedy_daisy_free(n, n / 2, 6, 3));
  }
}
BENCHMARK(BM_GreedyFamily)->DenseRange(7, 9, 1);

void BM_LayeredBuild(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_layered_set(n, 3, 0, greedy_supplier()));
  }
}
BENCHMARK(BM_LayeredBuild)->DenseRange(7, 10, 1);

void BM_MaxTotalMv(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(max_total_mv(n));
  }
}
BENCHMARK(BM_MaxTotalMv)->DenseRange(4, 7, 1);

void BM_TuranExact(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(turan_exact(6, 3, 6, 3));
  }
}
BENCHMARK(BM_TuranExact);

}  // namespace

BENCHMARK_MAIN();
