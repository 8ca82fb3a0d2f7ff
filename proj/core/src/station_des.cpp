#include "chargeshare/station_des.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <queue>
#include <random>

#include "chargeshare/energy.hpp"
#include "chargeshare/queueing.hpp"

namespace chargeshare {

namespace {

enum class Ev { EvArrival, EvDone, UavArrive, UavDone };

struct Event {
  double t;
  std::uint64_t seq;
  Ev type;
  int id;    // UAV index
  int slot;  // slot index for completions
  bool operator>(const Event& o) const { return t != o.t ? t > o.t : seq > o.seq; }
};

struct Request {
  int id;          // UAV index, or -1 for an EV
  double arrival;  // min
  double service;  // EV charge time (min)
};

struct Slot {
  bool ev = false;
  int uavs = 0;
  bool idle() const { return !ev && uavs == 0; }
};

// Per-batch accumulators over the post-warm-up window.
class Batches {
 public:
  Batches(double start, double end, int n) : start_(start), len_((end - start) / n), sum_(n), cnt_(n) {}

  void sample(double t, double v) {
    const int b = index(t);
    if (b < 0) return;
    sum_[b] += v;
    cnt_[b] += 1.0;
  }
  // Adds the overlap of [a, b) with each batch window to that batch.
  void interval(double a, double b) {
    a = std::max(a, start_);
    b = std::min(b, start_ + len_ * sum_.size());
    const int last = static_cast<int>(sum_.size()) - 1;
    int k = std::min(static_cast<int>((a - start_) / len_), last);
    while (a < b) {
      while (k < last && start_ + (k + 1) * len_ <= a) ++k;
      const double edge = k == last ? b : std::min(b, start_ + (k + 1) * len_);
      sum_[k] += edge - a;
      a = edge;
    }
  }
  MeanCI means() const {
    std::vector<double> v;
    for (std::size_t i = 0; i < sum_.size(); ++i) {
      if (cnt_[i] > 0.0) v.push_back(sum_[i] / cnt_[i]);
    }
    return batch_mean_ci(v);
  }
  MeanCI fractions(double per_batch_capacity) const {
    std::vector<double> v;
    for (double s : sum_) v.push_back(s / (len_ * per_batch_capacity));
    return batch_mean_ci(v);
  }

 private:
  int index(double t) const {
    if (t < start_) return -1;
    const int b = static_cast<int>((t - start_) / len_);
    return b < static_cast<int>(sum_.size()) ? b : -1;
  }
  double start_;
  double len_;
  std::vector<double> sum_;
  std::vector<double> cnt_;
};

}  // namespace

DesResult simulate_station(const DesConfig& cfg) {
  if (cfg.c_slots < 1 || cfg.m_per_slot < 1) throw std::invalid_argument("c and m must be >= 1");
  if (cfg.batches < 2) throw std::invalid_argument("need at least two batches");
  const int N = static_cast<int>(cfg.uav_service.size());
  std::vector<double> travel = cfg.uav_travel;
  travel.resize(N, 0.0);

  double horizon = cfg.horizon;
  if (horizon <= 0.0) {
    double cycle = cfg.T_ch;
    for (int i = 0; i < N; ++i) cycle += (cfg.uav_service[i] + 2.0 * travel[i]) / std::max(N, 1);
    horizon = 400.0 * std::max(cycle, 1.0);
    if (cfg.mu_e > 0.0) horizon = std::max(horizon, 20000.0 / cfg.mu_e);
  }
  const double warm = cfg.warmup_fraction * horizon;

  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::exponential_distribution<double> inter(cfg.mu_e > 0.0 ? cfg.mu_e : 1.0);
  const SocDistribution soc(cfg.energy.mu_soc, cfg.energy.sigma_soc);

  std::priority_queue<Event, std::vector<Event>, std::greater<>> events;
  std::uint64_t seq = 0;
  auto schedule = [&](double t, Ev type, int id = -1, int slot = -1) {
    events.push(Event{t, seq++, type, id, slot});
  };

  Batches uav_w(warm, horizon, cfg.batches), ev_w(warm, horizon, cfg.batches),
      hover(warm, horizon, cfg.batches);

  // Random initial phases over one nominal cycle.
  for (int i = 0; i < N; ++i) {
    const double cycle = cfg.uav_service[i] + 2.0 * travel[i] + cfg.T_ch;
    const double first = unif(rng) * cycle;
    hover.interval(std::max(0.0, first - travel[i] - cfg.uav_service[i]), std::max(0.0, first - travel[i]));
    schedule(first, Ev::UavArrive, i);
  }
  if (cfg.mu_e > 0.0) schedule(inter(rng), Ev::EvArrival);

  std::vector<Slot> slots(cfg.c_slots);
  std::deque<Request> ev_q, uav_q;
  DesResult res;
  res.horizon = horizon;
  double q_area = 0.0;
  double last_t = 0.0;
  long ev_arrivals_post = 0;

  auto start_ev = [&](double t, int s) {
    const Request r = ev_q.front();
    ev_q.pop_front();
    slots[s].ev = true;
    ev_w.sample(r.arrival, t - r.arrival);
    schedule(t + r.service, Ev::EvDone, -1, s);
  };
  auto start_uav = [&](double t, int s) {
    const Request r = uav_q.front();
    uav_q.pop_front();
    slots[s].uavs += 1;
    uav_w.sample(r.arrival, t - r.arrival);
    ++res.uav_charges;
    schedule(t + cfg.T_ch, Ev::UavDone, r.id, s);
  };
  auto idle_slot = [&]() {
    for (int s = 0; s < cfg.c_slots; ++s) {
      if (slots[s].idle()) return s;
    }
    return -1;
  };
  // Partially filled UAV slots first, then idle ones.
  auto uav_slot = [&]() {
    for (int s = 0; s < cfg.c_slots; ++s) {
      if (!slots[s].ev && slots[s].uavs > 0 && slots[s].uavs < cfg.m_per_slot) return s;
    }
    return idle_slot();
  };
  auto dispatch = [&](double t) {
    if (cfg.policy == ServingPolicy::EVFirst) {
      for (int s; !ev_q.empty() && (s = idle_slot()) >= 0;) start_ev(t, s);
      if (!ev_q.empty()) return;
      for (int s; !uav_q.empty() && (s = uav_slot()) >= 0;) start_uav(t, s);
      return;
    }
    // FIFS: strict head-of-line order across both queues.
    while (!ev_q.empty() || !uav_q.empty()) {
      const bool ev_head =
          !ev_q.empty() && (uav_q.empty() || ev_q.front().arrival <= uav_q.front().arrival);
      const int s = ev_head ? idle_slot() : uav_slot();
      if (s < 0) return;
      ev_head ? start_ev(t, s) : start_uav(t, s);
    }
  };

  while (!events.empty()) {
    const Event e = events.top();
    if (e.t > horizon) break;
    events.pop();
    if (e.t > warm) q_area += ev_q.size() * (e.t - std::max(last_t, warm));
    last_t = e.t;
    switch (e.type) {
      case Ev::EvArrival: {
        const double service = ev_charge_time(soc.sample(rng), cfg.energy);
        ev_q.push_back({-1, e.t, service});
        ++res.ev_count;
        if (e.t >= warm) ++ev_arrivals_post;
        if (ev_q.size() > cfg.max_ev_queue) throw QueueError("EV queue unstable");
        schedule(e.t + inter(rng), Ev::EvArrival);
        break;
      }
      case Ev::EvDone:
        slots[e.slot].ev = false;
        break;
      case Ev::UavArrive:
        uav_q.push_back({e.id, e.t, 0.0});
        break;
      case Ev::UavDone: {
        slots[e.slot].uavs -= 1;
        const double out = e.t + travel[e.id];
        hover.interval(out, out + cfg.uav_service[e.id]);
        schedule(out + cfg.uav_service[e.id] + travel[e.id], Ev::UavArrive, e.id);
        break;
      }
    }
    dispatch(e.t);
  }
  q_area += ev_q.size() * (horizon - std::max(last_t, warm));

  res.uav_wait = uav_w.means();
  res.ev_wait = ev_w.means();
  res.availability = hover.fractions(std::max(N, 1));
  const double window = horizon - warm;
  res.ev_queue_time_avg = q_area / window;
  res.ev_arrival_rate = ev_arrivals_post / window;
  const double lw = res.ev_arrival_rate * res.ev_wait.mean;
  res.little_ok = std::abs(res.ev_queue_time_avg - lw) <=
                  0.05 * std::max(res.ev_queue_time_avg, lw) + 0.02 + 2.0 * res.ev_arrival_rate * res.ev_wait.half_width;
  return res;
}

DesConfig make_des_config(const ParamSet& p, StationKind kind, int N, std::uint64_t seed,
                          double horizon) {
  DesConfig cfg;
  const double ts = base_service_time(p.energy);
  cfg.uav_service.assign(std::max(N, 0), ts);
  cfg.energy = p.energy;
  cfg.seed = seed;
  cfg.horizon = horizon;
  if (kind == StationKind::EV) {
    cfg.c_slots = p.station.c_slots;
    cfg.m_per_slot = p.station.m_per_slot;
    cfg.mu_e = p.station.mu_e;
    cfg.policy = p.station.serving_policy;
    cfg.T_ch = p.energy.T_ch_d_ev;
  } else {
    cfg.c_slots = 1;
    cfg.m_per_slot = 1;
    cfg.mu_e = 0.0;
    cfg.T_ch = p.energy.T_ch_d_d;
  }
  return cfg;
}

}  // namespace chargeshare
