#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

#include "chargeshare/energy.hpp"
#include "chargeshare/params.hpp"

namespace chargeshare {

class QueueError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Station seen by the queueing formulas. N counts every UAV of the cell,
/// including the tagged one. Times in minutes.
struct QueueContext {
  int N;
  StationKind station_kind;
  int c_slots;
  int m_per_slot;
  double mu_e;
  ChargeTimeMoments moments;
  double T_ser;
  double T_ch;
};

QueueContext make_queue_context(const ParamSet& p, StationKind kind, int N);
QueueContext make_queue_context(const ParamSet& p, const ChargeTimeMoments& moments,
                                StationKind kind, int N);

/// N at and above which the large-N formula applies: mc(1 + T_ser/T_ch).
double large_n_threshold(const QueueContext& ctx);
bool is_large_n(const QueueContext& ctx);

double uav_wait_dedicated(const QueueContext& ctx);
double uav_wait_shared_large_n(const QueueContext& ctx);

enum class ArrivalCountModel { Poisson, Geometric };

struct SmallNOptions {
  ArrivalCountModel count_model = ArrivalCountModel::Poisson;
  double tolerance = 1e-6;  // min
  int max_iterations = 1000;
  double damping = 0.5;
};

struct SmallNResult {
  double wait;
  int iterations;
  double residual;
};

SmallNResult uav_wait_shared_small_n(const QueueContext& ctx, const SmallNOptions& opt = {});

/// Expected wait of a tagged UAV given the number n of EV arrivals and x EV
/// arrivals inside the gap (exact for x <= 3, lower bound beyond).
double small_n_gap_wait(const QueueContext& ctx, int n, int x);
double small_n_gap(const QueueContext& ctx, int n);
double small_n_count_threshold(const QueueContext& ctx);

/// Dispatches on station kind and regime.
double uav_wait(const QueueContext& ctx, const SmallNOptions& opt = {});

enum class ResidualVariant {
  AsPrinted,        // occupancy * int_0^T (c/T)(1 - x/T)^(c-1) dx
  ExpectedMinimum,  // occupancy * int_0^T x (c/T)(1 - x/T)^(c-1) dx = T/(c+1)
};
enum class NoDroneVariant {
  AsPrinted,            // mu_e E[T]^2 / (1 - mu_e E[T]^2) * E[T]^2 / (2 E[T^2]) in minutes
  PollaczekKhinchine,   // M/G/c via the Lee-Longton scaling of Erlang C
};

struct EvWaitOptions {
  NoDroneVariant no_drone = NoDroneVariant::PollaczekKhinchine;
  ResidualVariant residual = ResidualVariant::AsPrinted;
  SmallNOptions small_n;
};

double residual_drone_delay(const QueueContext& ctx,
                            ResidualVariant variant = ResidualVariant::AsPrinted);
double residual_integral_factor(int c, double T_ch, ResidualVariant variant);

double ev_wait_no_drone(const QueueContext& ctx, NoDroneVariant variant);
double ev_wait(const QueueContext& ctx, ServingPolicy policy, const EvWaitOptions& opt = {});
/// EV wait minus the N = 0 baseline under EV first.
double ev_extra_wait(const QueueContext& ctx, ServingPolicy policy, const EvWaitOptions& opt = {});

struct QueueReport {
  double T_w_uav;
  double T_w_ev;
  bool large_n;
  ServingPolicy policy;
};

QueueReport queue_report(const QueueContext& ctx, ServingPolicy policy,
                         const EvWaitOptions& opt = {});

/// Memoised UAV waits per (kind, N) for one parameter set. Safe for
/// concurrent readers.
class WaitTable {
 public:
  using Source = std::function<double(StationKind, int)>;
  explicit WaitTable(const ParamSet& p, SmallNOptions opt = {});
  /// Waits from an external source (e.g. a simulator), cached the same way.
  WaitTable(const ParamSet& p, Source source);
  double uav_wait(StationKind kind, int N) const;
  const ParamSet& params() const { return params_; }
  const ChargeTimeMoments& moments() const { return moments_; }

 private:
  ParamSet params_;
  ChargeTimeMoments moments_;
  SmallNOptions opt_;
  Source source_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<int, int>, double> cache_;
};

}  // namespace chargeshare
