#include <cmath>

#include <gtest/gtest.h>

#include "chargeshare/numerics.hpp"

using namespace chargeshare;

TEST(Numerics, Quadrature) {
  EXPECT_NEAR(integrate([](double x) { return std::sin(x); }, 0.0, M_PI), 2.0, 1e-12);
  EXPECT_NEAR(integrate_to_infinity([](double x) { return std::exp(-x); }, 0.0, 1.0), 1.0, 1e-10);
  EXPECT_NEAR(integrate_pieces([](double x) { return std::abs(x); }, {-1.0, 0.0, 1.0}), 1.0, 1e-12);
  EXPECT_NEAR(gauss_legendre_panels(0.0, 2.0, 3).apply([](double x) { return x * x; }), 8.0 / 3.0, 1e-12);
}

TEST(Numerics, GoldenSectionAndDerivative) {
  const auto e = golden_section_max([](double x) { return -(x - 1.5) * (x - 1.5); }, 0.0, 4.0);
  EXPECT_NEAR(e.x, 1.5, 1e-5);
  const auto d = richardson_derivative([](double x) { return std::exp(x); }, 0.0, 0.1, 2);
  EXPECT_NEAR(d.value, 1.0, 1e-8);
  EXPECT_NEAR(log_gamma(5.0), std::log(24.0), 1e-12);
}

TEST(Numerics, SeedsAndParallelMap) {
  EXPECT_NE(child_seed(1, 0), child_seed(1, 1));
  EXPECT_EQ(child_seed(7, 3), child_seed(7, 3));
  const auto a = parallel_map<int>(10, 1, [](std::size_t i) { return static_cast<int>(i * i); });
  const auto b = parallel_map<int>(10, 3, [](std::size_t i) { return static_cast<int>(i * i); });
  EXPECT_EQ(a, b);
}

TEST(Numerics, BatchMeans) {
  const auto ci = batch_mean_ci({1.0, 2.0, 3.0, 4.0});
  EXPECT_DOUBLE_EQ(ci.mean, 2.5);
  EXPECT_GT(ci.half_width, 0.0);
  EXPECT_EQ(ci.batches, 4);
}
