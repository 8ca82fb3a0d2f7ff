#include <cmath>

#include <gtest/gtest.h>

#include "chargeshare/params.hpp"
#include "chargeshare/queueing.hpp"
#include "chargeshare/station_des.hpp"
#include "oracle_values.hpp"

using namespace chargeshare;

namespace {
const ParamSet P = default_params();
}

TEST(Queueing, DedicatedWaitFixture) {
  QueueContext ctx = make_queue_context(P, StationKind::UAV, 14);
  ctx.T_ser = 60.03;
  ctx.T_ch = 5.0;
  EXPECT_NEAR(uav_wait_dedicated(ctx), 4.97, 1e-12);
  ctx.N = 5;
  EXPECT_EQ(uav_wait_dedicated(ctx), 0.0);
}

TEST(Queueing, LargeNWaitMatchesOracle) {
  const auto ctx = make_queue_context(P, StationKind::EV, 16);
  ASSERT_TRUE(is_large_n(ctx));
  EXPECT_NEAR(uav_wait_shared_large_n(ctx), oracle::LARGE_N_WAIT_N16, 1e-6);
}

TEST(Queueing, FifsEqualsEvFirstWhenLargeN) {
  for (int N = 12; N <= 40; N += 4) {
    const auto ctx = make_queue_context(P, StationKind::EV, N);
    if (!is_large_n(ctx)) continue;
    EXPECT_EQ(queue_report(ctx, ServingPolicy::FIFS).T_w_uav,
              queue_report(ctx, ServingPolicy::EVFirst).T_w_uav);
  }
}

TEST(Queueing, SmallNConverges) {
  const auto ctx = make_queue_context(P, StationKind::EV, 3);
  ASSERT_FALSE(is_large_n(ctx));
  const auto r = uav_wait_shared_small_n(ctx);
  EXPECT_TRUE(std::isfinite(r.wait));
  EXPECT_GE(r.wait, 0.0);
  EXPECT_LE(r.residual, 1e-6);
  SmallNOptions geo;
  geo.count_model = ArrivalCountModel::Geometric;
  EXPECT_TRUE(std::isfinite(uav_wait_shared_small_n(ctx, geo).wait));
}

TEST(Queueing, ResidualFactors) {
  EXPECT_NEAR(residual_integral_factor(2, 30.0, ResidualVariant::AsPrinted), 1.0, 1e-12);
  EXPECT_NEAR(residual_integral_factor(2, 30.0, ResidualVariant::ExpectedMinimum), 10.0, 1e-10);
}

TEST(Queueing, EvWaitOrdering) {
  const auto none = make_queue_context(P, StationKind::EV, 0);
  const auto some = make_queue_context(P, StationKind::EV, 8);
  EXPECT_GE(ev_wait(some, ServingPolicy::EVFirst), ev_wait(none, ServingPolicy::EVFirst));
  EXPECT_GE(ev_wait(some, ServingPolicy::FIFS), ev_wait(some, ServingPolicy::EVFirst));
  EXPECT_GE(ev_extra_wait(some, ServingPolicy::EVFirst), 0.0);
}

TEST(Queueing, WaitTableCachesAndAcceptsSource) {
  const WaitTable w(P);
  EXPECT_EQ(w.uav_wait(StationKind::EV, 20), w.uav_wait(StationKind::EV, 20));
  const WaitTable fixed(P, [](StationKind, int N) { return 2.0 * N; });
  EXPECT_EQ(fixed.uav_wait(StationKind::UAV, 7), 14.0);
}

TEST(StationDes, LittleLawAndDeterminism) {
  auto cfg = make_des_config(P, StationKind::EV, 6, 11, 20000.0);
  const auto a = simulate_station(cfg);
  const auto b = simulate_station(cfg);
  EXPECT_TRUE(a.little_ok);
  EXPECT_EQ(a.uav_wait.mean, b.uav_wait.mean);
  EXPECT_EQ(a.ev_count, b.ev_count);
  EXPECT_NEAR(a.ev_arrival_rate, P.station.mu_e, 0.1 * P.station.mu_e);
}

TEST(StationDes, DedicatedLargeNAgreesWithAnalysis) {
  const auto ctx = make_queue_context(P, StationKind::UAV, 20);
  const auto r = simulate_station(make_des_config(P, StationKind::UAV, 20, 5, 40000.0));
  EXPECT_NEAR(r.uav_wait.mean, uav_wait_dedicated(ctx), 0.05 * uav_wait_dedicated(ctx) + 0.5);
}
