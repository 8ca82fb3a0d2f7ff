#include <numeric>

#include <gtest/gtest.h>

#include "chargeshare/association.hpp"
#include "chargeshare/params.hpp"
#include "oracle_values.hpp"

using namespace chargeshare;

namespace {
const ParamSet P = default_params();
}

TEST(Association, SplitMatchesOracle) {
  EXPECT_NEAR(assoc_prob(0.5, P.geometry).A_ev, oracle::A_EV_BETA_0_5, 1e-7);
  EXPECT_NEAR(assoc_prob(1.0, P.geometry).A_ev, oracle::A_EV_BETA_1_0, 1e-7);
  EXPECT_NEAR(assoc_prob(2.0, P.geometry).A_ev, oracle::A_EV_BETA_2_0, 1e-7);
}

TEST(Association, PartitionAndLimits) {
  for (double b : {0.25, 0.5, 1.0, 2.0, 4.0}) {
    const auto s = assoc_prob(b, P.geometry);
    EXPECT_NEAR(s.A_ev + s.A_d, 1.0, 1e-6) << b;
  }
  EXPECT_EQ(assoc_prob(0.0, P.geometry).A_ev, 0.0);
  GeometryParams sym = P.geometry;
  sym.lambda_p_d = sym.lambda_p_ev;
  EXPECT_NEAR(assoc_prob(1.0, sym).A_ev, 0.5, 1e-9);
}

TEST(Association, CellLoadPmfMatchesNegativeBinomial) {
  const GammaFit fit{P.channel.a_fit, P.channel.b_fit};
  const auto u = uav_count_pmf(P.geometry.lambda_c_ev, 0.5, P.geometry.lambda_u, fit);
  const auto s = station_load_pmf(P.geometry.lambda_c_ev, 0.5, P.geometry.lambda_u, fit);
  const double uw[] = {oracle::UAV_PMF_HALF_0, oracle::UAV_PMF_HALF_1, oracle::UAV_PMF_HALF_2,
                       oracle::UAV_PMF_HALF_3};
  const double sw[] = {oracle::STATION_PMF_HALF_0, oracle::STATION_PMF_HALF_1,
                       oracle::STATION_PMF_HALF_2, oracle::STATION_PMF_HALF_3};
  for (int n = 0; n < 4; ++n) {
    EXPECT_NEAR(u[n], uw[n], 1e-10) << n;
    EXPECT_NEAR(s[n], sw[n], 1e-10) << n;
  }
  EXPECT_NEAR(std::accumulate(u.p.begin(), u.p.end(), 0.0) + u.tail_mass, 1.0, 1e-9);
  EXPECT_NEAR(u.mean(), oracle::UAV_PMF_HALF_MEAN, 1e-8 * oracle::UAV_PMF_HALF_MEAN);
}

TEST(Association, BiasedCellPdfNormalised) {
  const GammaFit fit{};
  double s = 0.0;
  const double step = 1e3;
  for (double a = step / 2; a < 5e7; a += step) s += biased_cell_pdf(a, P.geometry.lambda_c_ev, 1.0, fit) * step;
  EXPECT_NEAR(s, 1.0, 1e-4);
}

TEST(Association, ConditionalDistancePdfNormalised) {
  const auto split = assoc_prob(1.0, P.geometry);
  for (auto kind : {StationKind::EV, StationKind::UAV}) {
    double s = 0.0;
    const double step = 2.0;
    for (double y = step / 2; y < 8000.0; y += step)
      s += conditional_distance_pdf(y, 1.0, kind, P.geometry, split) * step;
    EXPECT_NEAR(s, 1.0, 1e-4);
  }
}

TEST(Association, Thinning) {
  const auto [a, b] = thinning_split(0.3, 4e-6);
  EXPECT_DOUBLE_EQ(a, 0.3 * 4e-6);
  EXPECT_DOUBLE_EQ(b, 0.7 * 4e-6);
}
