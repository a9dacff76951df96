#include <benchmark/benchmark.h>

#include "cyclide/blending.hpp"
#include "cyclide/circle_components.hpp"

namespace {

using namespace cyclide;

void BM_ConeSolve(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(cone_family_solve(1, -1, 1, -2, -5, 0));
}
BENCHMARK(BM_ConeSolve);

void BM_CylinderSolve(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(cylinder_family_solve(1, 1, 0, 0, -4));
}
BENCHMARK(BM_CylinderSolve);

void BM_PlaneSolve(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(plane_family_solve(1, 1, Scalar(9, 5), 1, 0));
}
BENCHMARK(BM_PlaneSolve);

void BM_VillarceauComplete(benchmark::State& state) {
  const std::array<Scalar, 5> u{1, 0, 1, 0, Scalar(12, 13)};
  for (auto _ : state) benchmark::DoNotOptimize(villarceau_complete(1, u));
}
BENCHMARK(BM_VillarceauComplete);

}  // namespace
