#include "chargeshare/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

#include "chargeshare/coverage.hpp"
#include "chargeshare/energy.hpp"

namespace chargeshare {

std::vector<double> first_contact_samples(double lambda_l, double lambda_p, std::size_t n,
                                          std::uint64_t seed, double half_width, unsigned jobs) {
  const Window w{half_width, 0.0};
  return parallel_map<double>(n, jobs, [&](std::size_t i) {
    const auto plcp = sample_plcp(lambda_l, lambda_p, w, child_seed(seed, i));
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < plcp.lines.size(); ++k) {
      const double rho2 = plcp.lines[k].rho * plcp.lines[k].rho;
      for (double s : plcp.stations[k]) best = std::min(best, rho2 + s * s);
    }
    return std::sqrt(best);
  });
}

double ks_distance(std::vector<double> samples, const std::function<double(double)>& cdf) {
  if (samples.empty()) throw std::invalid_argument("no samples");
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double F = std::isfinite(samples[i]) ? cdf(samples[i]) : 1.0;
    d = std::max({d, (i + 1) / n - F, F - i / n});
  }
  return d;
}

double tv_distance(const std::vector<double>& p, const std::vector<double>& q) {
  const std::size_t n = std::max(p.size(), q.size());
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    s += std::abs((i < p.size() ? p[i] : 0.0) - (i < q.size() ? q[i] : 0.0));
  }
  return 0.5 * s;
}

namespace {

struct Member {
  double x, y;
  double distance;  // to the serving station
};

struct Assignment {
  std::vector<Point> ev, d;                    // station positions
  std::vector<std::vector<Member>> at_ev, at_d;  // UAVs per station
  int resampled = 0;
};

std::pair<int, double> nearest(const std::vector<Point>& pts, double x, double y) {
  int best = -1;
  double b2 = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const double dx = pts[i].x - x, dy = pts[i].y - y;
    const double d2 = dx * dx + dy * dy;
    if (d2 < b2) {
      b2 = d2;
      best = static_cast<int>(i);
    }
  }
  return {best, std::sqrt(b2)};
}

Assignment assign(const SimConfig& cfg, const AssociationPolicy& policy, std::uint64_t seed) {
  const auto& g = cfg.params.geometry;
  Assignment a;
  for (int attempt = 0;; ++attempt) {
    const std::uint64_t s = child_seed(seed, attempt);
    a.ev = sample_plcp(g.lambda_l, g.lambda_p_ev, cfg.window, child_seed(s, 0), StationKind::EV).station_points();
    a.d = sample_plcp(g.lambda_l, g.lambda_p_d, cfg.window, child_seed(s, 1), StationKind::UAV).station_points();
    if (!a.ev.empty() && !a.d.empty()) {
      const auto uavs = sample_ppp(g.lambda_u, cfg.window, child_seed(s, 2));
      std::mt19937_64 coin(child_seed(s, 3));
      std::uniform_real_distribution<double> u01(0.0, 1.0);
      a.at_ev.assign(a.ev.size(), {});
      a.at_d.assign(a.d.size(), {});
      for (const auto& pt : uavs.points) {
        const auto [ie, re] = nearest(a.ev, pt.x, pt.y);
        const auto [id, rd] = nearest(a.d, pt.x, pt.y);
        bool to_ev;
        if (const auto* b = std::get_if<BiasedDistance>(&policy)) {
          to_ev = re < b->beta_d * rd;
        } else {
          to_ev = u01(coin) < std::get<IndependentThinning>(policy).beta_o;
        }
        if (to_ev) {
          a.at_ev[ie].push_back({pt.x, pt.y, re});
        } else {
          a.at_d[id].push_back({pt.x, pt.y, rd});
        }
      }
      return a;
    }
    ++a.resampled;
    if (attempt > 100) throw std::runtime_error("no stations in window after 100 attempts");
  }
}

void bump(std::vector<double>& hist, std::size_t n, double w = 1.0) {
  if (hist.size() <= n) hist.resize(n + 1, 0.0);
  hist[n] += w;
}

void normalise(std::vector<double>& h) {
  double s = 0.0;
  for (double v : h) s += v;
  if (s > 0.0) {
    for (double& v : h) v /= s;
  }
}

struct GeometryPart {
  double ev = 0.0, total = 0.0;
  std::vector<double> other_ev, other_d, load_ev, load_d, dist_ev, dist_d;
  int resampled = 0;
};

}  // namespace

GeometryStats simulate_geometry(const SimConfig& cfg, const AssociationPolicy& policy) {
  const auto parts = parallel_map<GeometryPart>(cfg.realizations, cfg.jobs, [&](std::size_t k) {
    const auto a = assign(cfg, policy, child_seed(cfg.seed, k));
    GeometryPart part;
    part.resampled = a.resampled;
    auto collect = [&](const std::vector<Point>& st, const std::vector<std::vector<Member>>& cells,
                       std::vector<double>& other, std::vector<double>& load, std::vector<double>& dist,
                       bool is_ev) {
      for (std::size_t i = 0; i < st.size(); ++i) {
        if (cfg.window.interior(st[i].x, st[i].y)) bump(load, cells[i].size());
        for (const auto& m : cells[i]) {
          if (!cfg.window.interior(m.x, m.y)) continue;
          part.total += 1.0;
          if (is_ev) part.ev += 1.0;
          bump(other, cells[i].size() - 1);
          dist.push_back(m.distance);
        }
      }
    };
    collect(a.ev, a.at_ev, part.other_ev, part.load_ev, part.dist_ev, true);
    collect(a.d, a.at_d, part.other_d, part.load_d, part.dist_d, false);
    return part;
  });

  GeometryStats out;
  std::vector<double> fractions;
  for (const auto& part : parts) {
    fractions.push_back(part.total > 0.0 ? part.ev / part.total : 0.0);
    out.uavs += static_cast<long>(part.total);
    out.resampled += part.resampled;
    for (std::size_t n = 0; n < part.other_ev.size(); ++n) bump(out.other_uavs_ev, n, part.other_ev[n]);
    for (std::size_t n = 0; n < part.other_d.size(); ++n) bump(out.other_uavs_d, n, part.other_d[n]);
    for (std::size_t n = 0; n < part.load_ev.size(); ++n) bump(out.station_load_ev, n, part.load_ev[n]);
    for (std::size_t n = 0; n < part.load_d.size(); ++n) bump(out.station_load_d, n, part.load_d[n]);
    out.distance_ev.insert(out.distance_ev.end(), part.dist_ev.begin(), part.dist_ev.end());
    out.distance_d.insert(out.distance_d.end(), part.dist_d.begin(), part.dist_d.end());
  }
  normalise(out.other_uavs_ev);
  normalise(out.other_uavs_d);
  normalise(out.station_load_ev);
  normalise(out.station_load_d);
  out.A_ev = batch_mean_ci(fractions);
  return out;
}

namespace {
struct AvailabilityPart {
  double hover = 0.0, uavs = 0.0;
  double wait_ev = 0.0, n_ev = 0.0, wait_d = 0.0, n_d = 0.0;
  double ev_wait = 0.0, ev_stations = 0.0;
  long stations = 0;
};
}  // namespace

AvailabilitySim simulate_availability(const SimConfig& cfg, const AssociationPolicy& policy) {
  const auto& p = cfg.params;
  const double reach = reachable_radius(p.energy);
  const auto parts = parallel_map<AvailabilityPart>(cfg.realizations, cfg.jobs, [&](std::size_t k) {
    const auto a = assign(cfg, policy, child_seed(cfg.seed, k));
    AvailabilityPart part;
    std::uint64_t station_seed = child_seed(cfg.seed ^ 0x5eedULL, k);
    auto run = [&](const std::vector<Point>& st, const std::vector<std::vector<Member>>& cells,
                   StationKind kind) {
      for (std::size_t i = 0; i < st.size(); ++i) {
        if (!cfg.window.interior(st[i].x, st[i].y)) continue;
        // Empty EV stations still count towards the EV wait.
        if (cells[i].empty() && (kind != StationKind::EV || p.station.mu_e <= 0.0)) continue;
        auto dc = make_des_config(p, kind, 0, splitmix64(station_seed), cfg.des_horizon);
        for (const auto& m : cells[i]) {
          const double y = std::min(m.distance, reach);
          dc.uav_service.push_back(service_time(y, p.energy));
          dc.uav_travel.push_back(travel_time(y, p.energy));
        }
        const auto r = simulate_station(dc);
        const double n = static_cast<double>(cells[i].size());
        part.hover += n > 0.0 ? r.availability.mean * n : 0.0;
        part.uavs += n;
        ++part.stations;
        if (kind == StationKind::EV) {
          part.wait_ev += n > 0.0 ? r.uav_wait.mean * n : 0.0;
          part.n_ev += n;
          part.ev_wait += r.ev_wait.mean;
          part.ev_stations += 1.0;
        } else {
          part.wait_d += r.uav_wait.mean * n;
          part.n_d += n;
        }
      }
    };
    run(a.ev, a.at_ev, StationKind::EV);
    run(a.d, a.at_d, StationKind::UAV);
    return part;
  });

  AvailabilitySim out;
  std::vector<double> pa, wa, we, wd, ev;
  for (const auto& part : parts) {
    if (part.uavs > 0.0) pa.push_back(part.hover / part.uavs);
    if (part.uavs > 0.0) wa.push_back((part.wait_ev + part.wait_d) / part.uavs);
    if (part.n_ev > 0.0) we.push_back(part.wait_ev / part.n_ev);
    if (part.n_d > 0.0) wd.push_back(part.wait_d / part.n_d);
    if (part.ev_stations > 0.0) ev.push_back(part.ev_wait / part.ev_stations);
    out.stations += part.stations;
  }
  out.P_a = batch_mean_ci(pa);
  out.uav_wait = batch_mean_ci(wa);
  out.uav_wait_ev = batch_mean_ci(we);
  out.uav_wait_d = batch_mean_ci(wd);
  out.ev_wait = batch_mean_ci(ev);
  return out;
}

CoverageSim simulate_coverage(const ParamSet& p, double P_a, long draws, std::uint64_t seed,
                              double radius, unsigned jobs) {
  if (P_a < 0.0 || P_a > 1.0) throw std::domain_error("P_a must lie in [0,1]");
  const auto& g = p.geometry;
  const auto& ch = p.channel;
  constexpr double pi = std::numbers::pi;
  const double lam = P_a * g.lambda_u;
  const double h = g.h;
  // Mean interference from beyond `radius`, fading mean 1, horizontal ~ 3-D distance.
  const double p_inf = 1.0 / (1.0 + ch.c1 * std::exp(ch.c2 * ch.c1));
  const double far =
      2.0 * pi * lam * ch.rho_u *
          (p_inf * ch.eta_l * std::pow(radius, 2.0 - ch.alpha_l) / (ch.alpha_l - 2.0) +
           (1.0 - p_inf) * ch.eta_n * std::pow(radius, 2.0 - ch.alpha_n) / (ch.alpha_n - 2.0)) +
      2.0 * pi * g.lambda_t * ch.rho_t * std::pow(radius, 2.0 - ch.alpha_t) / (ch.alpha_t - 2.0);

  constexpr std::size_t chunks = 64;
  const auto hits = parallel_map<long>(chunks, jobs, [&](std::size_t c) {
    const long n = draws / static_cast<long>(chunks) + (static_cast<long>(c) < draws % static_cast<long>(chunks) ? 1 : 0);
    std::mt19937_64 rng(child_seed(seed, c));
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    std::poisson_distribution<long> n_uav(lam * pi * radius * radius);
    std::poisson_distribution<long> n_tbs(g.lambda_t * pi * radius * radius);
    std::gamma_distribution<double> fade_l(ch.m_l, 1.0 / ch.m_l), fade_n(ch.m_n, 1.0 / ch.m_n);
    std::exponential_distribution<double> fade_t(1.0);

    struct Tx {
      double mean;   // average received power
      double power;  // faded
    };
    std::vector<Tx> tx;
    long covered = 0;
    for (long i = 0; i < n; ++i) {
      tx.clear();
      auto uav = [&](double d3) {
        const bool los = u01(rng) < los_probability(d3, ch, h);
        const double mean = los ? ch.eta_l * ch.rho_u * std::pow(d3, -ch.alpha_l)
                                : ch.eta_n * ch.rho_u * std::pow(d3, -ch.alpha_n);
        return Tx{mean, mean * (los ? fade_l(rng) : fade_n(rng))};
      };
      const long nu = lam > 0.0 ? n_uav(rng) : 0;
      for (long j = 0; j < nu; ++j) {
        const double z = radius * std::sqrt(u01(rng));
        tx.push_back(uav(std::sqrt(z * z + h * h)));
      }
      const long nt = g.lambda_t > 0.0 ? n_tbs(rng) : 0;
      for (long j = 0; j < nt; ++j) {
        const double z = std::max(radius * std::sqrt(u01(rng)), 1e-9);
        const double mean = ch.rho_t * std::pow(z, -ch.alpha_t);
        tx.push_back({mean, mean * fade_t(rng)});
      }
      double total = far + ch.sigma_n2;
      for (const auto& t : tx) total += t.power;

      const double ru = g.r_c * std::sqrt(u01(rng));
      double signal;
      if (u01(rng) < P_a) {
        signal = uav(std::sqrt(ru * ru + h * h)).power;
      } else {
        if (tx.empty()) continue;
        const auto best = std::max_element(tx.begin(), tx.end(),
                                           [](const Tx& a, const Tx& b) { return a.mean < b.mean; });
        signal = best->power;
        total -= signal;
      }
      if (signal >= ch.gamma * total) ++covered;
    }
    return covered;
  });
  CoverageSim out;
  out.draws = draws;
  long c = 0;
  for (long v : hits) c += v;
  out.p_cov = draws > 0 ? static_cast<double>(c) / draws : 0.0;
  out.half_width = draws > 0 ? 1.96 * std::sqrt(out.p_cov * (1.0 - out.p_cov) / draws) : 0.0;
  return out;
}

DesResult simulate_queues(const ParamSet& p, StationKind kind, int N, std::uint64_t seed,
                          double horizon) {
  return simulate_station(make_des_config(p, kind, N, seed, horizon));
}

}  // namespace chargeshare
