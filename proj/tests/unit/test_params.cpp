#include <gtest/gtest.h>

#include "chargeshare/params.hpp"
#include "chargeshare/units.hpp"

using namespace chargeshare;

TEST(Params, DefaultsAreValidAndStable) {
  const ParamSet p = default_params();
  EXPECT_NO_THROW(validate(p));
  EXPECT_TRUE(stability_report(p).ev_queue_stable);
  EXPECT_EQ(p.station.c_slots, 2);
  EXPECT_EQ(p.station.m_per_slot, 2);
  EXPECT_EQ(p.station.serving_policy, ServingPolicy::EVFirst);
}

TEST(Params, StationDensityFollowsLines) {
  const auto g = default_params().geometry;
  EXPECT_NEAR(g.lambda_c_ev, 3.14159265358979 * g.lambda_l * g.lambda_p_ev, 1e-15);
  EXPECT_NEAR(g.lambda_c_ev * 1e6, 0.504, 1e-9);
  EXPECT_NEAR(g.lambda_c_d * 1e6, 0.252, 1e-9);
}

TEST(Params, EmitLoadRoundTrip) {
  const ParamSet p = default_params();
  const auto r = load_params(emit_params(p));
  EXPECT_EQ(r.params, p);
}

TEST(Params, OverridesApply) {
  const auto r = load_params("", {"station.c_slots=3", "station.ev_interarrival_min=25"});
  EXPECT_EQ(r.params.station.c_slots, 3);
  EXPECT_DOUBLE_EQ(r.params.station.mu_e, 0.04);
}

TEST(Params, RejectsBadValues) {
  EXPECT_THROW(load_params("", {"station.c_slots=0"}), ParamError);
  EXPECT_THROW(load_params("", {"nope.key=1"}), ParamError);
}

TEST(Params, UnstableQueueFlagged) {
  ParamSet p = default_params();
  p.station.c_slots = 1;
  EXPECT_FALSE(stability_report(p).ev_queue_stable);
  EXPECT_FALSE(stability_check(p));
}

TEST(Units, DbRoundTrip) {
  EXPECT_NEAR(units::from_db(10.0), 10.0, 1e-12);
  EXPECT_NEAR(units::to_db(units::from_db(-3.0)), -3.0, 1e-12);
  EXPECT_DOUBLE_EQ(units::min_per_year, 525600.0);
  EXPECT_DOUBLE_EQ(units::charge_minutes(60000.0, 120000.0), 30.0);
}
