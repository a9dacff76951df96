#include <benchmark/benchmark.h>

#include "cyclide/blending.hpp"
#include "cyclide/circle_components.hpp"
#include "cyclide/dupin_conditions.hpp"
#include "cyclide/gallery.hpp"
#include "cyclide/invariants.hpp"

namespace {

using namespace cyclide;

void BM_ClassifyGallery(benchmark::State& state) {
  const auto panels = blend_gallery();
  for (auto _ : state) {
    for (const auto& p : panels) {
      benchmark::DoNotOptimize(classify(p.first));
      benchmark::DoNotOptimize(classify(p.second));
    }
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(2 * panels.size()));
}
BENCHMARK(BM_ClassifyGallery);

void BM_BlendCheckGallery(benchmark::State& state) {
  const auto panels = blend_gallery();
  for (auto _ : state) {
    for (const auto& p : panels) benchmark::DoNotOptimize(blend_check(p.first, p.second));
  }
}
BENCHMARK(BM_BlendCheckGallery);

void BM_QuarticConditions(benchmark::State& state) {
  const CircleFamilyVector torus{1, {1, 0, -3, 0, Scalar(9, 2)}, {Scalar(-9, 2), 0, 0, 0}};
  for (auto _ : state) benchmark::DoNotOptimize(quartic_dupin_conditions(to_intermediate(torus)));
}
BENCHMARK(BM_QuarticConditions);

void BM_J0(benchmark::State& state) {
  const auto panels = blend_gallery();
  for (auto _ : state) {
    for (const auto& p : panels) benchmark::DoNotOptimize(j0(p.first));
  }
}
BENCHMARK(BM_J0);

}  // namespace
