#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chargeshare/availability.hpp"
#include "chargeshare/csv.hpp"
#include "chargeshare/economics.hpp"
#include "chargeshare/params.hpp"

namespace chargeshare {

struct ExperimentOptions {
  ParamSet params = default_params();
  std::uint64_t seed = 1;
  unsigned jobs = 1;
  bool quick = false;
  std::optional<PolicyKind> policy;  // empty: both association policies
};

class UnknownExperiment : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

const std::vector<std::string>& experiment_names();

/// fig-wait-uav | fig-wait-ev | fig-coverage | fig-beta | fig-economics
Table run_experiment(std::string_view name, const ExperimentOptions& opt);

std::string_view to_string(PolicyKind kind);
PolicyKind parse_policy_kind(std::string_view s);

/// Coverage-maximising sharing level.
BetaOptimum coverage_optimal_beta(const ParamSet& p, PolicyKind kind, int grid_points = 21,
                                  double tolerance = 1e-4);

/// EV interarrival sweep (min), stable points only.
std::vector<double> interarrival_grid(const ParamSet& p, bool quick);

/// (c, m) pairs whose EV queue is stable at p's arrival rate.
std::vector<std::pair<int, int>> stable_station_configs(const ParamSet& p);

struct WeightPreset {
  std::string name;  // "profit" or "performance"
  EconomicParams weights;
};
/// The two weight pairs: sharing-profit first, then service-performance.
std::vector<WeightPreset> weight_presets(const ParamSet& p);

struct EconomicsDecision {
  int c = 0;
  int m = 0;
  std::string weights;
  double beta_cap = 0.0;  // coverage-optimal beta, upper end of the EV grid
  SweepResult sweep;
};

/// Sequential decisions for every stable (c, m) and both weight presets.
std::vector<EconomicsDecision> economics_decisions(const ParamSet& p, PolicyKind kind, bool quick,
                                                   unsigned jobs = 1);

}  // namespace chargeshare
