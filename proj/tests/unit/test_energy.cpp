#include <cmath>

#include <gtest/gtest.h>

#include "chargeshare/energy.hpp"
#include "chargeshare/params.hpp"
#include "oracle_values.hpp"

using namespace chargeshare;

TEST(Energy, ChargeTimeMoments) {
  const auto e = default_params().energy;
  const auto m = charge_time_moments(e);
  EXPECT_NEAR(m.mean, oracle::EV_T_MEAN, 1e-7);
  EXPECT_NEAR(m.second_moment, oracle::EV_T_SECOND, 1e-5);
  EXPECT_DOUBLE_EQ(ev_full_charge_time(e), 30.0);
}

TEST(Energy, SocDensity) {
  const auto e = default_params().energy;
  EXPECT_NEAR(soc_pdf(std::exp(3.0), e), oracle::SOC_PDF_AT_E3, 1e-10);
  SocDistribution d(e.mu_soc, e.sigma_soc);
  EXPECT_NEAR(d.cdf(100.0), 1.0, 1e-12);
  EXPECT_NEAR(d.cdf(0.0), 0.0, 1e-12);
}

TEST(Energy, TravelPowerAndSpeed) {
  const auto e = default_params().energy;
  EXPECT_NEAR(travel_power(18.46, e), oracle::TRAVEL_POWER_18_46, 1e-9);
  EXPECT_NEAR(optimal_velocity(e), oracle::OPTIMAL_VELOCITY_GRID, 0.01);
}

TEST(Energy, ServiceTimes) {
  const auto e = default_params().energy;
  EXPECT_NEAR(base_service_time(e), oracle::T_SER_BASE, 1e-9);
  EXPECT_GT(service_time(0.0, e), service_time(2000.0, e));
  EXPECT_NEAR(travel_time(0.0, e), 0.0, 1e-12);
  EXPECT_GT(reachable_radius(e), 0.0);
}
