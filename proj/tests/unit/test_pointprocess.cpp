#include <cmath>

#include <gtest/gtest.h>

#include "chargeshare/params.hpp"
#include "chargeshare/pointprocess.hpp"
#include "oracle_values.hpp"

using namespace chargeshare;

namespace {
const GeometryParams g = default_params().geometry;
}

TEST(FirstContact, CdfMatchesOracle) {
  const std::pair<double, std::pair<double, double>> cases[] = {
      {100.0, {oracle::FC_CDF_EV_100, oracle::FC_CDF_D_100}},
      {300.0, {oracle::FC_CDF_EV_300, oracle::FC_CDF_D_300}},
      {500.0, {oracle::FC_CDF_EV_500, oracle::FC_CDF_D_500}},
      {1000.0, {oracle::FC_CDF_EV_1000, oracle::FC_CDF_D_1000}},
  };
  for (const auto& [r, want] : cases) {
    EXPECT_NEAR(first_contact_cdf(r, g.lambda_l, g.lambda_p_ev), want.first, 1e-9) << r;
    EXPECT_NEAR(first_contact_cdf(r, g.lambda_l, g.lambda_p_d), want.second, 1e-9) << r;
  }
}

TEST(FirstContact, PdfMatchesOracle) {
  EXPECT_NEAR(first_contact_pdf(300.0, g.lambda_l, g.lambda_p_ev), oracle::FC_PDF_EV_300, 1e-9);
}

TEST(FirstContact, TailAndMean) {
  const double r = first_contact_quantile_tail(1e-8, g.lambda_l, g.lambda_p_d);
  EXPECT_LE(first_contact_ccdf(r, g.lambda_l, g.lambda_p_d), 1.01e-8);
  EXPECT_GT(first_contact_mean(g.lambda_l, g.lambda_p_d), first_contact_mean(g.lambda_l, g.lambda_p_ev));
}

TEST(Sampling, PlcpIsSeededAndDense) {
  const Window w{5000.0, 0.0};
  const auto a = sample_plcp(g.lambda_l, g.lambda_p_ev, w, 42);
  const auto b = sample_plcp(g.lambda_l, g.lambda_p_ev, w, 42);
  ASSERT_EQ(a.station_count(), b.station_count());
  const auto pa = a.station_points(), pb = b.station_points();
  for (std::size_t i = 0; i < pa.size(); ++i) EXPECT_EQ(pa[i].x, pb[i].x);
  for (const auto& q : pa) EXPECT_TRUE(w.contains(q.x, q.y));
}

TEST(Sampling, PppCountMatchesDensity) {
  const Window w{20000.0, 0.0};
  const auto s = sample_ppp(1e-6, w, 3);
  const double expected = 1e-6 * 4 * 20000.0 * 20000.0;
  EXPECT_NEAR(static_cast<double>(s.points.size()), expected, 5 * std::sqrt(expected));
}
