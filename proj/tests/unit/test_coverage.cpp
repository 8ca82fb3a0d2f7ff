#include <cmath>

#include <gtest/gtest.h>

#include "chargeshare/availability.hpp"
#include "chargeshare/coverage.hpp"
#include "chargeshare/params.hpp"
#include "oracle_values.hpp"

using namespace chargeshare;

namespace {
const ParamSet P = default_params();
}

TEST(Coverage, LosProbabilityOverhead) {
  EXPECT_NEAR(los_probability(P.geometry.h, P.channel, P.geometry.h), oracle::LOS_OVERHEAD, 1e-12);
  EXPECT_LT(los_probability(5000.0, P.channel, P.geometry.h), 0.1);
}

TEST(Coverage, AlzerConstant) { EXPECT_NEAR(alzer_beta2(3), oracle::ALZER_BETA2_M3, 1e-14); }

TEST(Coverage, LaplaceAtZeroIsOne) {
  const CoverageModel m(P, 0.6);
  for (auto link : {LinkClass::ClusterLoS, LinkClass::ClusterNLoS, LinkClass::NearbyLoS,
                    LinkClass::NearbyNLoS, LinkClass::TBS})
    EXPECT_EQ(m.laplace_interference(0.0, 300.0, link), 1.0);
}

TEST(Coverage, LaplaceTbsOnlyClosedForm) {
  const CoverageModel m(P, 0.0);
  EXPECT_NEAR(m.laplace_interference(2.0e8, 400.0, LinkClass::TBS), oracle::LAPLACE_TBS_ONLY, 1e-9);
}

TEST(Coverage, LaplaceClusterMatchesQuadrature) {
  const CoverageModel m(P, 0.6);
  EXPECT_NEAR(m.laplace_interference(1.0e4, 50.0, LinkClass::ClusterLoS), oracle::LAPLACE_CLUSTER_PA06, 1e-7);
}

TEST(Coverage, ApproxAndExactAgree) {
  const CoverageModel m(P, 0.6);
  const auto a = m.breakdown(CoveragePath::Approx);
  const auto e = m.breakdown(CoveragePath::Exact);
  EXPECT_NEAR(a.total, e.total, 0.02);
  EXPECT_NEAR(a.total, 0.6 * a.cluster() + 0.4 * a.fallback(), 1e-12);
}

TEST(Coverage, FallbackMassIsOne) {
  EXPECT_NEAR(CoverageModel(P, 0.4).fallback_association_mass(), 1.0, 1e-6);
}

TEST(Coverage, MonotoneInAvailabilityAndBounded) {
  double prev = 0.0;
  for (double pa : {0.0, 0.25, 0.5, 0.75, 1.0}) {
    const double c = CoverageModel(P, pa).breakdown().total;
    EXPECT_GE(c, prev - 1e-9);
    prev = c;
  }
  EXPECT_NEAR(prev, upper_bound_coverage(P).total, 1e-12);
  const WaitTable w(P);
  EXPECT_LE(total_coverage(P, BiasedDistance{1.0}, w).total, prev);
}
