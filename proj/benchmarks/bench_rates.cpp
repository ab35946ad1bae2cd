#include <benchmark/benchmark.h>

#include "ratelab/ratelab.hpp"

using namespace ratelab;

namespace {

void BM_BesselI0(benchmark::State& state) {
  double x = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(bessel_i0(x));
    x = x < 49.0 ? x + 0.37 : 0.0;
  }
}
BENCHMARK(BM_BesselI0);

void BM_GainQber(benchmark::State& state) {
  const ChannelPair ch = channel_from_total_loss(
      static_cast<double>(state.range(0)), Scenario::Symmetric);
  const DvDeviceParams dev{};
  const Intensities mu{0.9, 0.9};
  for (auto _ : state) {
    benchmark::DoNotOptimize(gain_and_qber(ch, dev, mu));
  }
}
BENCHMARK(BM_GainQber)->Arg(0)->Arg(20)->Arg(40);

void BM_DvKeyRate(benchmark::State& state) {
  const ChannelPair ch = channel_from_total_loss(
      static_cast<double>(state.range(0)), Scenario::Symmetric);
  const DvDeviceParams dev{};
  const Intensities mu{0.9, 0.9};
  for (auto _ : state) {
    benchmark::DoNotOptimize(dv_key_rate(ch, dev, mu));
  }
}
BENCHMARK(BM_DvKeyRate)->Arg(4)->Arg(40);

void BM_CvKeyRate(benchmark::State& state) {
  const ChannelPair ch =
      channel_from_total_loss(2.5, Scenario::AsymmetricRelayAtAlice);
  const CvDeviceParams dev{};
  for (auto _ : state) {
    benchmark::DoNotOptimize(cv_key_rate(ch, dev));
  }
}
BENCHMARK(BM_CvKeyRate);

void BM_OptimizeIntensities(benchmark::State& state) {
  const ChannelPair ch = channel_from_total_loss(4.0, Scenario::Symmetric);
  const DvDeviceParams dev{};
  OptimizerConfig cfg;
  cfg.grid_points = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(optimize_intensities(ch, dev, cfg));
  }
}
BENCHMARK(BM_OptimizeIntensities)->Arg(10)->Arg(40);

void BM_CvSweep(benchmark::State& state) {
  SweepSpec spec;
  spec.model = SweepModel::Cv;
  spec.start = 0.0;
  spec.stop = 6.0;
  spec.points = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_sweep(spec));
  }
}
BENCHMARK(BM_CvSweep)->Arg(61)->Arg(241);

}  // namespace

BENCHMARK_MAIN();
