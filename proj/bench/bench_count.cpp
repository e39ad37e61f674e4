// Serial reference vs slab-parallel lattice-point counting.
// Thread count follows OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include "ehrhart/generate.hpp"
#include "ehrhart/lattice_count.hpp"

namespace {

using ehrhart::Polytope;

const Polytope& cube3() {
  static const Polytope p = *ehrhart::catalog_lookup("cube3");
  return p;
}

const Polytope& octa3() {
  static const Polytope p = *ehrhart::catalog_lookup("octa3");
  return p;
}

void BM_ReferenceCube(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(ehrhart::count_points_reference(cube3(), state.range(0)));
  }
}

void BM_ParallelCube(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ehrhart::count_points(cube3(), state.range(0)));
}

void BM_ReferenceOcta(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(ehrhart::count_points_reference(octa3(), state.range(0)));
  }
}

void BM_ParallelOcta(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ehrhart::count_points(octa3(), state.range(0)));
}

}  // namespace

BENCHMARK(BM_ReferenceCube)->Arg(4)->Arg(8)->Arg(16);
BENCHMARK(BM_ParallelCube)->Arg(4)->Arg(8)->Arg(16)->Arg(64);
BENCHMARK(BM_ReferenceOcta)->Arg(4)->Arg(8)->Arg(16);
BENCHMARK(BM_ParallelOcta)->Arg(4)->Arg(8)->Arg(16)->Arg(64);

BENCHMARK_MAIN();
