#include <gtest/gtest.h>

#include "chargeshare/economics.hpp"
#include "chargeshare/params.hpp"
#include "oracle_values.hpp"

using namespace chargeshare;

namespace {
const ParamSet P = default_params();
}

TEST(Economics, FeeFixture) {
  const double floor = sharing_fee(0.0, 100.0, P);
  EXPECT_DOUBLE_EQ(floor, P.station.c_slots * P.economics.c_main);
  EXPECT_NEAR(sharing_fee(10.0, 100.0, P) - floor, oracle::FEE_ENERGY_TERM, 1e-6);
  EXPECT_THROW(sharing_fee(1.0, 0.0, P), std::domain_error);
}

TEST(Economics, MuPerHour) { EXPECT_DOUBLE_EQ(mu_e_per_hour(P), P.station.mu_e * 60.0); }

TEST(Economics, NoSharingObjective) {
  const WaitTable w(P);
  const auto r = ev_objective(IndependentThinning{0.0}, P, w);
  EXPECT_EQ(r.extra_wait_min, 0.0);
  EXPECT_DOUBLE_EQ(r.fee, sharing_fee(0.0, 1.0, P));
}

TEST(Economics, ExtraStationsScaleLines) {
  const double d = P.geometry.lambda_c_d;
  const ParamSet q = with_extra_stations(P, d);
  EXPECT_NEAR(q.geometry.lambda_c_d, 2 * d, 1e-18);
  EXPECT_NEAR(q.geometry.lambda_p_d, 2 * P.geometry.lambda_p_d, 1e-15);
  EXPECT_EQ(q.geometry.lambda_c_ev, P.geometry.lambda_c_ev);
}

TEST(Economics, SweepPicksGridMaxima) {
  SweepGrid grid;
  grid.betas = {0.0, 0.2, 0.4};
  grid.delta_lambdas = {0.0, P.geometry.lambda_c_d};
  const auto r = decision_sweep(P, grid);
  ASSERT_EQ(r.ev_side.size(), 3u);
  ASSERT_EQ(r.uav_side.size(), 2u);
  double best = -1e300;
  for (const auto& o : r.ev_side) best = std::max(best, o.C_e);
  double chosen_beta = std::get<BiasedDistance>(r.chosen.decision.association).beta_d;
  bool found = false;
  for (std::size_t i = 0; i < grid.betas.size(); ++i)
    if (r.ev_side[i].C_e == best) found = found || grid.betas[i] == chosen_beta;
  EXPECT_TRUE(found);
  for (const auto& o : r.uav_side) EXPECT_LE(o.C_u_net, r.chosen.C_u_net);
}
