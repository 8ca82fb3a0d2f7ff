#pragma once

#include <cstdint>
#include <vector>

#include "chargeshare/numerics.hpp"
#include "chargeshare/params.hpp"

namespace chargeshare {

/// One charging station with c slots. A slot holds one EV or up to m UAVs.
/// UAVs cycle: hover, fly to the station, wait, charge, fly back.
struct DesConfig {
  int c_slots = 1;
  int m_per_slot = 1;
  double mu_e = 0.0;  // EV arrivals per min (0 at dedicated stations)
  ServingPolicy policy = ServingPolicy::EVFirst;
  double T_ch = 5.0;                 // min, UAV charge
  std::vector<double> uav_service;   // min, hover time per UAV
  std::vector<double> uav_travel;    // min, one way; empty means 0
  EnergyParams energy{};             // EV charge-time draws
  double horizon = 0.0;              // min; 0 picks 400 nominal UAV cycles
  double warmup_fraction = 0.2;
  int batches = 20;
  std::size_t max_ev_queue = 20000;  // beyond this the run is declared unstable
  std::uint64_t seed = 1;
};

struct DesResult {
  MeanCI uav_wait;      // min
  MeanCI ev_wait;       // min
  MeanCI availability;  // hover time fraction of the UAVs
  double ev_queue_time_avg = 0.0;  // time-average number of waiting EVs
  double ev_arrival_rate = 0.0;    // observed, per min
  bool little_ok = true;           // L = lambda W within tolerance
  long ev_count = 0;
  long uav_charges = 0;
  double horizon = 0.0;
};

DesResult simulate_station(const DesConfig& cfg);

/// N identical UAVs with the travel-free hover time, as in the analysis.
/// Dedicated stations charge one UAV at a time and see no EVs.
DesConfig make_des_config(const ParamSet& p, StationKind kind, int N, std::uint64_t seed,
                          double horizon = 0.0);

}  // namespace chargeshare
