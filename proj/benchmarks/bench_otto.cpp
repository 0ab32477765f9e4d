#include <benchmark/benchmark.h>

#include "otto/config.hpp"
#include "otto/cycle.hpp"
#include "otto/specfun.hpp"
#include "otto/sweep.hpp"
#include "otto/wightman.hpp"
#include "otto/wightman_oracle.hpp"

namespace {

void BM_ErfComplexScaled(benchmark::State& state) {
    double x = 0.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(otto::specfun::erfc_complex_scaled(x, 1.6));
        x = x < 6.0 ? x + 0.37 : 0.1;
    }
}
BENCHMARK(BM_ErfComplexScaled);

void BM_FieldVariance(benchmark::State& state) {
    const double v = static_cast<double>(state.range(0)) / 100.0;
    const auto traj = otto::TrajectorySpec::from_speed(v);
    const auto smear = otto::SmearingSpec::with_radius(1.0);
    const auto bath = otto::BathSpec::thermal(0.01, v, 3.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(otto::field_variance(traj, smear, bath, {}));
    }
}
BENCHMARK(BM_FieldVariance)->Arg(0)->Arg(50)->Arg(99);

void BM_WightmanValues(benchmark::State& state) {
    const auto traj = otto::TrajectorySpec::from_speed(0.5);
    const auto smear = otto::SmearingSpec::with_radius(1.0);
    const auto bath = otto::BathSpec::thermal(1.0, 0.5, 3.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(otto::wightman_values(traj, smear, bath, 2.0, {}));
    }
}
BENCHMARK(BM_WightmanValues);

void BM_WightmanOracle(benchmark::State& state) {
    const auto traj = otto::TrajectorySpec::from_speed(0.5);
    const auto smear = otto::SmearingSpec::with_radius(1.0);
    const auto bath = otto::BathSpec::thermal(1.0, 0.5, 3.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(otto::wightman_oracle_2d(traj, smear, 2.0, bath));
    }
}
BENCHMARK(BM_WightmanOracle)->Unit(benchmark::kMillisecond);

void BM_RunCycle(benchmark::State& state) {
    otto::OttoConfig config;
    config.speed_cold = 0.7;
    for (auto _ : state) {
        benchmark::DoNotOptimize(otto::run_cycle(config));
    }
}
BENCHMARK(BM_RunCycle)->Unit(benchmark::kMicrosecond);

void BM_Sweep20x20(benchmark::State& state) {
    const auto spec = otto::parse_config_text("axis1 = v_h linspace 0 0.99 20\naxis2 = v_c linspace 0 0.99 20");
    for (auto _ : state) {
        benchmark::DoNotOptimize(otto::sweep(spec, static_cast<int>(state.range(0))));
    }
}
BENCHMARK(BM_Sweep20x20)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
