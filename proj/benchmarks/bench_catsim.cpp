#include <benchmark/benchmark.h>

#include <cmath>

#include "catsim/analytic.hpp"
#include "catsim/protocols.hpp"

namespace {

using namespace catsim;

void BM_SqueezedVacuum(benchmark::State& state) {
  const int cutoff = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(make_squeezed_vacuum(0.5, cutoff));
  }
}
BENCHMARK(BM_SqueezedVacuum)->Arg(60)->Arg(160);

void BM_BeamSplitter(benchmark::State& state) {
  const int cutoff = static_cast<int>(state.range(0));
  const TwoModePureState joint =
      tensor(make_squeezed_vacuum(0.5, cutoff), make_vacuum(cutoff));
  const BeamSplitterSpec spec = BeamSplitterSpec::from_transmission(0.9);
  for (auto _ : state) {
    benchmark::DoNotOptimize(beam_splitter(joint, spec));
  }
}
BENCHMARK(BM_BeamSplitter)->Arg(40)->Arg(60)->Arg(160);

void BM_HeraldProtocol(benchmark::State& state) {
  protocols::ProtocolConfig cfg;
  cfg.xi = 0.43;
  cfg.transmission = 0.99;
  cfg.alpha = 1.2;
  cfg.cutoff = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(protocols::run_cat_protocol(cfg));
  }
}
BENCHMARK(BM_HeraldProtocol)->Arg(60)->Arg(100);

void BM_Fig2Curve(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        protocols::sweep_fig2({1.2}, {0.01, 1.2, 200}, 60));
  }
}
BENCHMARK(BM_Fig2Curve);

void BM_ClosedFormContour(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        protocols::contour_fig3({0.0, 0.9, 181}, {0.1, 3.0, 146}));
  }
}
BENCHMARK(BM_ClosedFormContour);

void BM_EcsProtocol(benchmark::State& state) {
  protocols::ProtocolConfig cfg;
  cfg.xi = 0.5;
  cfg.transmission = 0.8;
  cfg.alpha = 1.2;
  cfg.cutoff = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(protocols::run_ecs_protocol(cfg));
  }
}
BENCHMARK(BM_EcsProtocol)->Arg(40)->Arg(56);

void BM_WignerGrid(benchmark::State& state) {
  const PureState cat = make_cat(Complex(0.0, 1.2), CatSign::Minus, 60);
  WignerWindow window;
  window.points = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(wigner(cat, window));
  }
}
BENCHMARK(BM_WignerGrid)->Arg(41)->Arg(101);

void BM_LossChannel(benchmark::State& state) {
  const PureState cat = make_cat(Complex(0.0, 1.2), CatSign::Minus,
                                 static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(loss_channel(cat, 0.8));
  }
}
BENCHMARK(BM_LossChannel)->Arg(30)->Arg(60);

void BM_TraceDistance(benchmark::State& state) {
  const int cutoff = static_cast<int>(state.range(0));
  protocols::ProtocolConfig cfg;
  cfg.xi = 0.5;
  cfg.transmission = 0.9;
  cfg.cutoff = cutoff;
  TwoModePureState noon(cutoff, cutoff);
  noon.at(2, 0) = 1.0 / std::sqrt(2.0);
  noon.at(0, 2) = 1.0 / std::sqrt(2.0);
  const MixedState a = loss_channel(noon, Mode::B, 0.8);
  const MixedState b =
      loss_channel(phase_rotate(noon, Mode::A, 0.3), Mode::B, 0.8);
  for (auto _ : state) {
    benchmark::DoNotOptimize(trace_distance(a, b));
  }
}
BENCHMARK(BM_TraceDistance)->Arg(8)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
