#include <gtest/gtest.h>

#include "chargeshare/experiments.hpp"
#include "chargeshare/validation.hpp"

using namespace chargeshare;

TEST(Experiments, NamesAndPolicyParsing) {
  EXPECT_EQ(experiment_names().size(), 5u);
  EXPECT_EQ(parse_policy_kind("thinning"), PolicyKind::Thinning);
  EXPECT_EQ(to_string(PolicyKind::Biased), "biased");
  EXPECT_THROW(parse_policy_kind("nearest"), std::invalid_argument);
  EXPECT_THROW(run_experiment("fig-nope", {}), UnknownExperiment);
}

TEST(Experiments, GridsRespectStability) {
  const ParamSet p = default_params();
  for (double ia : interarrival_grid(p, false)) EXPECT_GT(ia, 11.45);
  for (const auto& [c, m] : stable_station_configs(p)) EXPECT_GE(c, 2);
  EXPECT_EQ(weight_presets(p).size(), 2u);
}

TEST(Experiments, InvariantsHoldAtDefaults) {
  for (const auto& c : run_invariants(default_params())) EXPECT_TRUE(c.pass) << c.name << ": " << c.detail;
}
