#pragma once

#include <functional>
#include <vector>

#include "chargeshare/association.hpp"
#include "chargeshare/params.hpp"
#include "chargeshare/queueing.hpp"

namespace chargeshare {

struct AvailabilityResult {
  double P_a;
  double ev_term;  // contribution of UAVs charging at EV stations
  double d_term;   // contribution of UAVs charging at dedicated stations
  int n_truncation;
  AssociationSplit split;
};

/// Fraction of a duty cycle spent hovering for a UAV whose station is y
/// metres away, with charge and wait times in minutes.
double g_fraction(double y, double T_ch, double T_w, const EnergyParams& p);

/// Biased-distance association. Waits for a cell of n other UAVs are taken
/// from `waits` at N = n + 1.
AvailabilityResult availability_biased(double beta_d, const ParamSet& p, const WaitTable& waits);
AvailabilityResult availability_thinning(double beta_o, const ParamSet& p, const WaitTable& waits);
AvailabilityResult availability(const AssociationPolicy& policy, const ParamSet& p,
                                const WaitTable& waits);

/// Mean UAV waits (min): over every UAV, and split by the station kind the
/// UAV charges at.
struct UavWaitSummary {
  double overall = 0.0;
  double at_ev = 0.0;
  double at_d = 0.0;
  AssociationSplit split{};
};
UavWaitSummary mean_uav_wait(const AssociationPolicy& policy, const ParamSet& p,
                             const WaitTable& waits);

enum class PolicyKind { Biased, Thinning };

struct BetaOptimum {
  double beta;
  double value;
  bool plateau;
  std::vector<std::pair<double, double>> grid;  // (beta, value)
};

/// Grid search (log grid on [0.1, 10] for beta_d, linear on [0, 1] for
/// beta_o) refined by golden section.
BetaOptimum optimize_beta(PolicyKind kind, const std::function<double(double)>& evaluator,
                          int grid_points = 41, double tolerance = 1e-4);

AssociationPolicy make_policy(PolicyKind kind, double beta);
AssociationPolicy no_sharing_policy();

}  // namespace chargeshare
