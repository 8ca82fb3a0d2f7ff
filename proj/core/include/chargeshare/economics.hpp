#pragma once

#include <vector>

#include "chargeshare/availability.hpp"
#include "chargeshare/coverage.hpp"
#include "chargeshare/params.hpp"
#include "chargeshare/queueing.hpp"

namespace chargeshare {

/// What one EV station sees from the sharing policy.
struct SharingLoad {
  double mean_uavs = 0.0;      // E[N_d,ev], UAVs per EV station
  double cycle = 0.0;          // min, E[T_ser(Y)] + T_ch + E[T_tra(Y)] + E[T_w]
  double mean_uav_wait = 0.0;  // min, over UAVs served at EV stations
  double ev_extra_wait = 0.0;  // min, station-averaged, vs no UAVs
};

SharingLoad sharing_load(const AssociationPolicy& policy, const ParamSet& p, const WaitTable& waits,
                         const EvWaitOptions& opt = {});

/// USD/year per EV station: energy resold to UAVs plus c chargers' upkeep.
/// mean_uavs = 0 gives the maintenance floor.
double sharing_fee(double mean_uavs, double cycle_min, const ParamSet& p);

/// mu_e as EVs per hour.
double mu_e_per_hour(const ParamSet& p);

struct ObjectiveResult {
  PolicyDecision decision;
  double extra_wait_min = 0.0;    // per EV
  double extra_wait_hours = 0.0;  // EV-hours per year per station
  double fee = 0.0;               // USD/year
  double coverage = 0.0;          // with sharing and the extra stations
  double coverage_ratio = 0.0;    // vs the no-sharing baseline
  double build_ratio = 0.0;       // delta lambda_c,d / lambda_c,d
  double C_e = 0.0;
  double C_u = 0.0;      // weighted sum with the configured signs
  double C_u_net = 0.0;  // coverage benefit minus build and fee costs
};

/// C_e for one sharing policy; fee and wait fields filled.
ObjectiveResult ev_objective(const AssociationPolicy& policy, const ParamSet& p,
                             const WaitTable& waits, const EvWaitOptions& opt = {});

/// C_u for one decision given the baseline coverage and the fee already
/// fixed by the EV side.
ObjectiveResult uav_objective(const PolicyDecision& decision, const ParamSet& p, double P_cov_in,
                              double fee, CoveragePath path = CoveragePath::Approx);

/// Dedicated stations added to the geometry (line density follows).
ParamSet with_extra_stations(const ParamSet& p, double delta_lambda_c_d);

enum class SweepOrder { EvFirst, UavFirst };

struct SweepGrid {
  std::vector<double> betas;          // sharing levels, 0 = none
  std::vector<double> delta_lambdas;  // per m^2
  PolicyKind kind = PolicyKind::Biased;
};

struct SweepResult {
  std::vector<ObjectiveResult> ev_side;   // one per beta, at delta 0
  std::vector<ObjectiveResult> uav_side;  // one per delta, at the chosen beta
  ObjectiveResult chosen;
  double P_cov_in = 0.0;
};

/// EV operator maximises C_e over the betas, then the UAV operator maximises
/// C_u_net over the deltas at that beta. UavFirst swaps the two steps (the
/// UAV side then decides without sharing).
SweepResult decision_sweep(const ParamSet& p, const SweepGrid& grid,
                           SweepOrder order = SweepOrder::EvFirst, unsigned jobs = 1);

}  // namespace chargeshare
