#include <benchmark/benchmark.h>

#include "chargeshare/availability.hpp"
#include "chargeshare/coverage.hpp"
#include "chargeshare/params.hpp"
#include "chargeshare/pointprocess.hpp"
#include "chargeshare/queueing.hpp"
#include "chargeshare/station_des.hpp"

using namespace chargeshare;

static void BM_FirstContactCdf(benchmark::State& state) {
  const auto g = default_params().geometry;
  double r = 100.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(first_contact_cdf(r, g.lambda_l, g.lambda_p_ev));
    r = r < 3000.0 ? r + 7.0 : 100.0;
  }
}
BENCHMARK(BM_FirstContactCdf);

static void BM_CoverageBreakdown(benchmark::State& state) {
  const ParamSet p = default_params();
  const auto path = state.range(0) ? CoveragePath::Exact : CoveragePath::Approx;
  for (auto _ : state) {
    const CoverageModel m(p, 0.6);
    benchmark::DoNotOptimize(m.breakdown(path).total);
  }
}
BENCHMARK(BM_CoverageBreakdown)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_Availability(benchmark::State& state) {
  const ParamSet p = default_params();
  const WaitTable waits(p);
  for (auto _ : state) benchmark::DoNotOptimize(availability_biased(1.0, p, waits).P_a);
}
BENCHMARK(BM_Availability)->Unit(benchmark::kMillisecond);

static void BM_StationDes(benchmark::State& state) {
  const ParamSet p = default_params();
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(simulate_station(make_des_config(p, StationKind::EV, N, 1, 30000.0)));
}
BENCHMARK(BM_StationDes)->Arg(4)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
