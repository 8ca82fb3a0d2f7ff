#include <cmath>

#include <gtest/gtest.h>

#include "chargeshare/availability.hpp"
#include "chargeshare/energy.hpp"
#include "chargeshare/params.hpp"

using namespace chargeshare;

namespace {
const ParamSet P = default_params();
}

TEST(Availability, HoverFractionArithmetic) {
  const auto& e = P.energy;
  const double Ts = service_time(500.0, e);
  const double g = g_fraction(500.0, 10.0, 4.0, e);
  const double trip = 2 * travel_time(500.0, e);
  EXPECT_NEAR(g, Ts / (Ts + trip + 10.0 + 4.0), 1e-12);
}

TEST(Availability, BoundedOverGrid) {
  for (double mu : {0.02, 0.05, 0.08}) {
    ParamSet q = P;
    q.station.mu_e = mu;
    const WaitTable w(q);
    for (double b : {0.1, 0.5, 1.0, 3.0}) {
      const double pa = availability_biased(b, q, w).P_a;
      EXPECT_GE(pa, 0.0);
      EXPECT_LE(pa, 1.0);
    }
    for (double b : {0.0, 0.5, 1.0}) {
      const double pa = availability_thinning(b, q, w).P_a;
      EXPECT_GE(pa, 0.0);
      EXPECT_LE(pa, 1.0);
    }
  }
}

TEST(Availability, TermsAddUp) {
  const WaitTable w(P);
  const auto r = availability_biased(1.0, P, w);
  EXPECT_NEAR(r.P_a, r.ev_term + r.d_term, 1e-12);
  EXPECT_NEAR(r.split.A_ev + r.split.A_d, 1.0, 1e-6);
}

TEST(Availability, NoWaitsRaiseAvailability) {
  const WaitTable w(P);
  const WaitTable zero(P, [](StationKind, int) { return 0.0; });
  EXPECT_GT(availability_biased(1.0, P, zero).P_a, availability_biased(1.0, P, w).P_a);
}

TEST(Availability, MeanWaitWeighting) {
  const WaitTable w(P);
  const auto s = mean_uav_wait(BiasedDistance{1.0}, P, w);
  EXPECT_NEAR(s.overall, s.split.A_ev * s.at_ev + s.split.A_d * s.at_d, 1e-9);
}

TEST(Availability, GoldenSectionFindsPeak) {
  const auto r = optimize_beta(PolicyKind::Thinning, [](double b) { return -(b - 0.3) * (b - 0.3); }, 11);
  EXPECT_NEAR(r.beta, 0.3, 1e-3);
  const auto q = optimize_beta(PolicyKind::Biased, [](double b) { return -(std::log(b) - 0.5) * (std::log(b) - 0.5); }, 21);
  EXPECT_NEAR(q.beta, std::exp(0.5), 1e-2);
}
