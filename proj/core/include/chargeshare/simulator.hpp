#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "chargeshare/numerics.hpp"
#include "chargeshare/params.hpp"
#include "chargeshare/pointprocess.hpp"
#include "chargeshare/station_des.hpp"

namespace chargeshare {

struct SimConfig {
  ParamSet params;
  Window window{15000.0, 3000.0};
  int realizations = 8;
  double des_horizon = 30000.0;  // min per station run
  std::uint64_t seed = 1;
  unsigned jobs = 1;
};

/// Nearest-station distances from the origin, one independent PLCP per
/// sample (square window of the given half width).
std::vector<double> first_contact_samples(double lambda_l, double lambda_p, std::size_t n,
                                          std::uint64_t seed, double half_width, unsigned jobs = 1);

/// sup |F_n - F| for the empirical law of `samples`.
double ks_distance(std::vector<double> samples, const std::function<double(double)>& cdf);
/// 0.5 * sum |p - q| over the union of supports.
double tv_distance(const std::vector<double>& p, const std::vector<double>& q);

struct GeometryStats {
  MeanCI A_ev;                             // across realizations
  std::vector<double> other_uavs_ev;       // P(n other UAVs share my cell), EV cells
  std::vector<double> other_uavs_d;        // same for dedicated cells
  std::vector<double> station_load_ev;     // P(n UAVs at a station)
  std::vector<double> station_load_d;
  std::vector<double> distance_ev;         // serving distances, UAVs at EV stations
  std::vector<double> distance_d;
  long uavs = 0;
  int resampled = 0;
};

/// Biased (min(R_ev, beta_d R_d)) or thinned association of a UAV PPP to
/// the two PLCPs; statistics over UAVs inside the guarded window.
GeometryStats simulate_geometry(const SimConfig& cfg, const AssociationPolicy& policy);

struct AvailabilitySim {
  MeanCI P_a;           // hover time fraction, across realizations
  MeanCI uav_wait;      // over all UAVs (min)
  MeanCI uav_wait_ev;   // mean UAV wait at EV stations (min)
  MeanCI uav_wait_d;    // at dedicated stations
  MeanCI ev_wait;       // mean EV wait over EV stations (min)
  long stations = 0;
};

/// Every station of the window runs its own DES with the actual serving
/// distances of its UAVs.
AvailabilitySim simulate_availability(const SimConfig& cfg, const AssociationPolicy& policy);

struct CoverageSim {
  double p_cov = 0.0;
  double half_width = 0.0;  // 95% binomial
  long draws = 0;
};

/// SINR Monte Carlo around a typical user. Available UAVs within `radius`
/// are simulated explicitly; the mean far-field interference beyond it is
/// added as a constant.
CoverageSim simulate_coverage(const ParamSet& p, double P_a, long draws, std::uint64_t seed,
                              double radius = 15000.0, unsigned jobs = 1);

/// One station with N UAVs at zero distance (the analytic setting).
DesResult simulate_queues(const ParamSet& p, StationKind kind, int N, std::uint64_t seed,
                          double horizon = 0.0);

}  // namespace chargeshare
