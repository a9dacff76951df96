#include <benchmark/benchmark.h>

#include "cyclide/surface_io.hpp"

namespace {

using namespace cyclide;

void BM_MeshTorus(benchmark::State& state) {
  const CircleFamilyVector torus{1, {1, 0, -3, 0, Scalar(9, 2)}, {Scalar(-9, 2), 0, 0, 0}};
  const int res = static_cast<int>(state.range(0));
  const auto threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(mesh(torus, Box::cube(5), res, threads));
}
BENCHMARK(BM_MeshTorus)->Args({32, 1})->Args({64, 1})->Args({128, 1})->Args({128, 0})->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
