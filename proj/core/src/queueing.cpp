#include "chargeshare/queueing.hpp"

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include <fmt/format.h>

#include "chargeshare/numerics.hpp"

namespace chargeshare {

QueueContext make_queue_context(const ParamSet& p, const ChargeTimeMoments& moments,
                                StationKind kind, int N) {
  QueueContext ctx;
  ctx.N = N;
  ctx.station_kind = kind;
  ctx.c_slots = p.station.c_slots;
  ctx.m_per_slot = p.station.m_per_slot;
  ctx.mu_e = p.station.mu_e;
  ctx.moments = moments;
  ctx.T_ser = base_service_time(p.energy);
  ctx.T_ch = kind == StationKind::EV ? p.energy.T_ch_d_ev : p.energy.T_ch_d_d;
  return ctx;
}

QueueContext make_queue_context(const ParamSet& p, StationKind kind, int N) {
  return make_queue_context(p, charge_time_moments(p.energy), kind, N);
}

double large_n_threshold(const QueueContext& ctx) {
  return ctx.m_per_slot * ctx.c_slots * (1.0 + ctx.T_ser / ctx.T_ch);
}

bool is_large_n(const QueueContext& ctx) { return ctx.N >= large_n_threshold(ctx); }

double uav_wait_dedicated(const QueueContext& ctx) {
  return std::max(0.0, ctx.T_ch * (ctx.N - ctx.T_ser / ctx.T_ch - 1.0));
}

namespace {
void require_stable(const QueueContext& ctx) {
  if (ctx.mu_e * ctx.moments.mean >= ctx.c_slots) throw QueueError("EV queue unstable");
}

// int_a^b max(0, t + k) dt
double ramp(double a, double b, double k) {
  if (b <= a) return 0.0;
  const double lo = std::max(a, -k);
  if (b <= lo) return 0.0;
  return 0.5 * ((b + k) * (b + k) - (lo + k) * (lo + k));
}

std::vector<double> clipped(std::initializer_list<double> cuts, double lo, double hi) {
  std::vector<double> out{lo, hi};
  for (double c : cuts) {
    if (c > lo && c < hi) out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}
}  // namespace

double uav_wait_shared_large_n(const QueueContext& ctx) {
  require_stable(ctx);
  const double mc = ctx.m_per_slot * ctx.c_slots;
  const double rho = ctx.mu_e * ctx.moments.mean / ctx.c_slots;
  const double num = ctx.T_ch * (ctx.N / mc - 1.0) +
                     (ctx.T_ch + ctx.T_ser) / ctx.c_slots * ctx.mu_e * ctx.moments.mean - ctx.T_ser;
  return std::max(0.0, num / (1.0 - rho));
}

double small_n_count_threshold(const QueueContext& ctx) {
  const double c = ctx.c_slots;
  return (c * (ctx.T_ser - ctx.T_ch) - ctx.T_ch * ctx.N / ctx.m_per_slot) / ctx.moments.mean;
}

double small_n_gap(const QueueContext& ctx, int n) {
  const double mc = ctx.m_per_slot * ctx.c_slots;
  return ctx.T_ser - (ctx.N / mc - 1.0) * ctx.T_ch - n * ctx.moments.mean / ctx.c_slots;
}

double small_n_gap_wait(const QueueContext& ctx, int n, int x) {
  const double G = small_n_gap(ctx, n);
  if (x <= 0 || G <= 0.0) return 0.0;
  const double c = ctx.c_slots;
  const double E = ctx.moments.mean;
  const double T = n * ctx.mu_e * E * E / (c * c);
  auto shifted = [T](double t1) { return t1 < T ? T + t1 : t1; };

  if (x == 1) {
    const double k = std::min(T, G);
    return (ramp(0.0, k, T + E - G) + ramp(k, G, E - G)) / (c * G);
  }
  if (x == 2) {
    auto inner = [&](double t1) {
      const double A = shifted(t1) + E;
      double v = std::max(0.0, std::min(A, G) - t1) * std::max(A + E - G, 0.0);
      if (A < G) v += ramp(A, G, E - G);
      return v;
    };
    const auto cuts = clipped({T, G - E, G - 2 * E, G - E - T, G - 2 * E - T}, 0.0, G);
    return 2.0 / (c * G * G) * integrate_pieces(inner, cuts, 1e-11, 1e-14);
  }
  if (x == 3) {
    auto middle = [&](double t1) {
      const double A = shifted(t1) + E;
      auto innermost = [&](double t2) {
        const double B = std::max(A, t2) + E;
        double v = std::max(0.0, std::min(B, G) - t2) * std::max(B + E - G, 0.0);
        if (B < G) v += ramp(B, G, E - G);
        return v;
      };
      const auto cuts = clipped({A, G - 2 * E, G - E}, t1, G);
      return integrate_pieces(innermost, cuts, 1e-11, 1e-14);
    };
    const auto cuts = clipped({T, G - E, G - 2 * E, G - 3 * E, G - E - T, G - 2 * E - T,
                               G - 3 * E - T},
                              0.0, G);
    return 6.0 / (c * G * G * G) * integrate_pieces(middle, cuts, 1e-10, 1e-14);
  }
  // Lower-bound approximation for more than three arrivals.
  const double shift = x / c * E;
  auto f = [&](double t1) {
    return x / G / c * std::pow(1.0 - t1 / G, x - 1) * std::max(0.0, shifted(t1) + shift - G);
  };
  const auto cuts = clipped({T, G - shift, G - shift - T}, 0.0, G);
  return integrate_pieces(f, cuts, 1e-11, 1e-14);
}

SmallNResult uav_wait_shared_small_n(const QueueContext& ctx, const SmallNOptions& opt) {
  require_stable(ctx);
  if (ctx.N <= 0) return {0.0, 0, 0.0};
  const double c = ctx.c_slots;
  const double E = ctx.moments.mean;
  const double mu = ctx.mu_e;
  const double mc = ctx.m_per_slot * c;
  const double n_thr = small_n_count_threshold(ctx);

  std::vector<double> value;  // V(n), extended on demand
  auto V = [&](int n) {
    while (static_cast<int>(value.size()) <= n) {
      const int k = static_cast<int>(value.size());
      double v;
      if (k >= n_thr) {
        v = std::max(0.0, k * E / c + (E * mu / c - 1.0) * (ctx.T_ser - (ctx.N / mc - 1.0) * ctx.T_ch));
      } else {
        // Poisson number of EV arrivals inside the gap.
        const double lam = small_n_gap(ctx, k) * mu;
        double pmf = std::exp(-lam);
        double mass = pmf;
        v = 0.0;
        for (int x = 1; x < 2000; ++x) {
          pmf *= lam / x;
          mass += pmf;
          if (pmf > 0.0) v += pmf * small_n_gap_wait(ctx, k, x);
          if (1.0 - mass < 1e-13 && x > lam) break;
        }
      }
      value.push_back(v);
    }
    return value[n];
  };

  auto mixture = [&](double tw) {
    const double mean = mu * (std::max(tw, 0.0) + ctx.T_ch * ctx.N / c);
    double total = 0.0;
    double mass = 0.0;
    if (opt.count_model == ArrivalCountModel::Poisson) {
      double pmf = std::exp(-mean);
      for (int n = 0; n < 100000; ++n) {
        if (n > 0) pmf *= mean / n;
        total += pmf * V(n);
        mass += pmf;
        if (1.0 - mass < 1e-13 && n > mean) break;
      }
    } else {
      const double q = mean / (1.0 + mean);
      double pmf = 1.0 / (1.0 + mean);
      for (int n = 0; n < 100000; ++n) {
        if (n > 0) pmf *= q;
        total += pmf * V(n);
        mass += pmf;
        if (1.0 - mass < 1e-13) break;
      }
    }
    return total;
  };

  double tw = 0.0;
  double residual = 0.0;
  for (int it = 1; it <= opt.max_iterations; ++it) {
    const double next = mixture(tw);
    residual = std::abs(next - tw);
    if (residual < opt.tolerance) return {next, it, residual};
    tw = (1.0 - opt.damping) * tw + opt.damping * next;
  }
  throw QueueError(fmt::format("small-N fixed point did not converge (residual {:.3g} min)", residual));
}

double uav_wait(const QueueContext& ctx, const SmallNOptions& opt) {
  if (ctx.station_kind == StationKind::UAV) return uav_wait_dedicated(ctx);
  if (ctx.N <= 0) return 0.0;
  if (is_large_n(ctx)) return uav_wait_shared_large_n(ctx);
  return uav_wait_shared_small_n(ctx, opt).wait;
}

double residual_integral_factor(int c, double T_ch, ResidualVariant variant) {
  // int_0^T (c/T)(1 - x/T)^(c-1) dx = 1 and int_0^T x (c/T)(1 - x/T)^(c-1) dx = T/(c+1).
  return variant == ResidualVariant::AsPrinted ? 1.0 : T_ch / (c + 1.0);
}

double residual_drone_delay(const QueueContext& ctx, ResidualVariant variant) {
  if (ctx.N <= 0) return 0.0;
  const double mc = ctx.m_per_slot * ctx.c_slots;
  const double occupancy = std::min(1.0, ctx.N * ctx.T_ch / (mc * (ctx.T_ch + ctx.T_ser)));
  return occupancy * residual_integral_factor(ctx.c_slots, ctx.T_ch, variant);
}

double ev_wait_no_drone(const QueueContext& ctx, NoDroneVariant variant) {
  const double E = ctx.moments.mean;
  const double E2 = ctx.moments.second_moment;
  if (ctx.mu_e == 0.0) return 0.0;
  if (variant == NoDroneVariant::AsPrinted) {
    const double q = ctx.mu_e * E * E;
    if (q >= 1.0) throw QueueError("formula domain violated");
    return q / (1.0 - q) * E * E / (2.0 * E2);
  }
  require_stable(ctx);
  const int c = ctx.c_slots;
  const double a = ctx.mu_e * E;
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < c; ++k) {
    term *= a / k;
    sum += term;
  }
  const double last = term * a / c * (c / (c - a));
  const double erlang_c = last / (sum + last);
  return E2 / (2.0 * E * E) * erlang_c * E / (c - a);
}

double ev_wait(const QueueContext& ctx, ServingPolicy policy, const EvWaitOptions& opt) {
  const double base = ev_wait_no_drone(ctx, opt.no_drone) + residual_drone_delay(ctx, opt.residual);
  if (policy == ServingPolicy::EVFirst) return base;
  return base + uav_wait(ctx, opt.small_n);
}

double ev_extra_wait(const QueueContext& ctx, ServingPolicy policy, const EvWaitOptions& opt) {
  // The no-drone term is common to both sides and cancels.
  double extra = residual_drone_delay(ctx, opt.residual);
  if (policy == ServingPolicy::FIFS) extra += uav_wait(ctx, opt.small_n);
  return extra;
}

QueueReport queue_report(const QueueContext& ctx, ServingPolicy policy, const EvWaitOptions& opt) {
  QueueReport r;
  r.T_w_uav = uav_wait(ctx, opt.small_n);
  r.T_w_ev = ctx.station_kind == StationKind::EV ? ev_wait(ctx, policy, opt) : 0.0;
  r.large_n = is_large_n(ctx);
  r.policy = policy;
  return r;
}

WaitTable::WaitTable(const ParamSet& p, SmallNOptions opt)
    : params_(p), moments_(charge_time_moments(p.energy)), opt_(opt) {}

WaitTable::WaitTable(const ParamSet& p, Source source)
    : params_(p), moments_(charge_time_moments(p.energy)), source_(std::move(source)) {}

double WaitTable::uav_wait(StationKind kind, int N) const {
  const auto key = std::make_pair(static_cast<int>(kind), N);
  {
    std::lock_guard lock(mu_);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  }
  const double w = source_ ? source_(kind, N)
                           : chargeshare::uav_wait(make_queue_context(params_, moments_, kind, N), opt_);
  std::lock_guard lock(mu_);
  cache_.emplace(key, w);
  return w;
}

}  // namespace chargeshare
