#include <benchmark/benchmark.h>

#include <numbers>

#include "arcinterp/arcinterp.hpp"

using namespace arcinterp;

namespace {

SceneSpec rotation_scene(int side) {
  SceneSpec spec;
  spec.extent = {side, side};
  spec.motion = Rotation{{side / 2.0, side / 2.0}, std::numbers::pi / 3};
  spec.object_radius = side * 0.45;
  return spec;
}

}  // namespace

static void BM_IntermediateFlow(benchmark::State& state) {
  const SceneSpec spec = rotation_scene(static_cast<int>(state.range(0)));
  const GroundTruthFields gt = ground_truth_fields(spec);
  for (auto _ : state) {
    benchmark::DoNotOptimize(intermediate_flow(gt.flow01, gt.sigma01, 0.5));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(spec.extent.pixels()));
}
BENCHMARK(BM_IntermediateFlow)->Arg(128)->Arg(512);

static void BM_IntermediateFlowLinear(benchmark::State& state) {
  const SceneSpec spec = rotation_scene(static_cast<int>(state.range(0)));
  const GroundTruthFields gt = ground_truth_fields(spec);
  ArcConfig cfg;
  cfg.force_linear = true;
  for (auto _ : state) {
    benchmark::DoNotOptimize(intermediate_flow(gt.flow01, gt.sigma01, 0.5, cfg));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(spec.extent.pixels()));
}
BENCHMARK(BM_IntermediateFlowLinear)->Arg(128)->Arg(512);

static void BM_SplatAverage(benchmark::State& state) {
  const SceneSpec spec = rotation_scene(static_cast<int>(state.range(0)));
  const GroundTruthFields gt = ground_truth_fields(spec);
  const Image frame = ground_truth_frame(spec, 0.0);
  const FlowField flow = intermediate_flow(gt.flow01, gt.sigma01, 0.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(splat_average(frame, flow));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(spec.extent.pixels()));
}
BENCHMARK(BM_SplatAverage)->Arg(128)->Arg(512);

static void BM_Interpolate(benchmark::State& state) {
  const SceneSpec spec = rotation_scene(static_cast<int>(state.range(0)));
  const GroundTruthFields gt = ground_truth_fields(spec);
  const Image f0 = ground_truth_frame(spec, 0.0);
  const Image f1 = ground_truth_frame(spec, 1.0);
  const FramePair pair{f0, f1, gt.flow01, gt.flow10, gt.sigma01, gt.sigma10};
  for (auto _ : state) {
    benchmark::DoNotOptimize(interpolate(pair, 0.5));
  }
}
BENCHMARK(BM_Interpolate)->Arg(128)->Arg(256);

static void BM_Ssim(benchmark::State& state) {
  const SceneSpec spec = rotation_scene(static_cast<int>(state.range(0)));
  const Image a = ground_truth_frame(spec, 0.0);
  const Image b = ground_truth_frame(spec, 0.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ssim(a, b));
  }
}
BENCHMARK(BM_Ssim)->Arg(128)->Arg(256);

BENCHMARK_MAIN();
