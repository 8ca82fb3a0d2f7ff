#include "chargeshare/validation.hpp"

#include <cmath>
#include <functional>

#include <fmt/format.h>

#include "chargeshare/association.hpp"
#include "chargeshare/availability.hpp"
#include "chargeshare/coverage.hpp"
#include "chargeshare/economics.hpp"
#include "chargeshare/energy.hpp"
#include "chargeshare/numerics.hpp"
#include "chargeshare/pointprocess.hpp"
#include "chargeshare/queueing.hpp"
#include "chargeshare/simulator.hpp"
#include "chargeshare/station_des.hpp"

namespace chargeshare {

namespace {

class Suite {
 public:
  void add(std::string name, const std::function<std::pair<bool, std::string>()>& body) {
    try {
      auto [ok, detail] = body();
      checks_.push_back({std::move(name), ok, std::move(detail)});
    } catch (const std::exception& e) {
      checks_.push_back({std::move(name), false, std::string("threw: ") + e.what()});
    }
  }
  std::vector<Check> take() { return std::move(checks_); }

 private:
  std::vector<Check> checks_;
};

std::pair<bool, std::string> within(double got, double want, double tol) {
  return {std::abs(got - want) <= tol, fmt::format("{:.10g} vs {:.10g} (tol {:.1e})", got, want, tol)};
}

}  // namespace

std::vector<Check> run_invariants(const ParamSet& p, std::uint64_t seed) {
  Suite s;
  const auto& g = p.geometry;
  const GammaFit fit{p.channel.a_fit, p.channel.b_fit};

  s.add("params valid", [&] {
    validate(p);
    return std::pair{true, std::string("ok")};
  });
  s.add("params round trip", [&] {
    return std::pair{load_params(emit_params(p)).params == p, std::string("emit -> load")};
  });
  s.add("ev queue stable", [&] {
    const auto r = stability_report(p);
    return std::pair{r.ev_queue_stable, fmt::format("mu_e E[T] = {:.4f}, c = {}", r.offered_load, p.station.c_slots)};
  });

  s.add("first contact cdf is a cdf", [&] {
    double prev = 0.0;
    bool ok = first_contact_cdf(0.0, g.lambda_l, g.lambda_p_ev) == 0.0;
    for (double r = 1.0; r < 2e4; r *= 1.3) {
      const double c = first_contact_cdf(r, g.lambda_l, g.lambda_p_ev);
      ok = ok && c >= prev - 1e-15 && c <= 1.0;
      prev = c;
    }
    return std::pair{ok && prev > 1.0 - 1e-9, fmt::format("F(2e4) = {:.12f}", prev)};
  });
  s.add("first contact pdf integrates to cdf", [&] {
    const double r = 800.0;
    const double I = integrate([&](double x) { return first_contact_pdf(x, g.lambda_l, g.lambda_p_d); }, 0.0, r);
    return within(I, first_contact_cdf(r, g.lambda_l, g.lambda_p_d), 1e-8);
  });

  s.add("association partition", [&] {
    double worst = 0.0;
    for (double b : {0.25, 0.5, 1.0, 2.0, 4.0}) {
      const auto a = assoc_prob(b, g);
      worst = std::max(worst, std::abs(a.A_ev + a.A_d - 1.0));
    }
    return std::pair{worst <= 1e-6, fmt::format("max |A_ev + A_d - 1| = {:.2e}", worst)};
  });
  s.add("association symmetry", [&] {
    GeometryParams q = g;
    q.lambda_p_d = q.lambda_p_ev;
    return within(assoc_prob(1.0, q).A_ev, 0.5, 1e-9);
  });
  s.add("association monotone in beta", [&] {
    double prev = 0.0;
    bool ok = true;
    for (double b = 0.1; b < 10.0; b *= 1.25) {
      const double a = assoc_prob(b, g).A_ev;
      ok = ok && a >= prev - 1e-12;
      prev = a;
    }
    return std::pair{ok, std::string("A_ev nondecreasing on [0.1, 10]")};
  });
  s.add("cell load pmf normalised", [&] {
    const auto pmf = uav_count_pmf(g.lambda_c_ev, 0.5, g.lambda_u, fit);
    double sum = pmf.tail_mass;
    for (double v : pmf.p) sum += v;
    return within(sum, 1.0, 1e-9);
  });
  s.add("cell load pmf mean", [&] {
    const double A = 0.5;
    const auto pmf = uav_count_pmf(g.lambda_c_ev, A, g.lambda_u, fit);
    return within(pmf.mean(), (fit.a + 1.0) / fit.b * g.lambda_u * A / g.lambda_c_ev, 1e-8 * pmf.mean() + 1e-6);
  });

  s.add("dedicated wait fixture", [&] {
    QueueContext ctx = make_queue_context(p, StationKind::UAV, 14);
    ctx.T_ser = 60.03;
    ctx.T_ch = 5.0;
    return within(uav_wait_dedicated(ctx), 5.0 * (14 - 60.03 / 5.0 - 1.0), 1e-12);
  });
  s.add("FIFS equals EV first (large N)", [&] {
    const auto ctx = make_queue_context(p, StationKind::EV, static_cast<int>(std::ceil(large_n_threshold(make_queue_context(p, StationKind::EV, 1)))) + 4);
    const double a = queue_report(ctx, ServingPolicy::FIFS).T_w_uav;
    const double b = queue_report(ctx, ServingPolicy::EVFirst).T_w_uav;
    return std::pair{a == b, fmt::format("{:.6f} vs {:.6f} min", a, b)};
  });
  s.add("UAV waits nonnegative and finite", [&] {
    const WaitTable w(p);
    bool ok = true;
    for (int N = 0; N <= 60; ++N) {
      for (StationKind k : {StationKind::EV, StationKind::UAV}) {
        const double v = w.uav_wait(k, N);
        ok = ok && std::isfinite(v) && v >= 0.0;
      }
    }
    return std::pair{ok, std::string("N = 0..60, both kinds")};
  });
  s.add("EV first orders EV waits", [&] {
    const auto ctx = make_queue_context(p, StationKind::EV, 10);
    const double ev_first = ev_wait(ctx, ServingPolicy::EVFirst);
    const double fifs = ev_wait(ctx, ServingPolicy::FIFS);
    return std::pair{ev_first <= fifs, fmt::format("EV first {:.3f} <= FIFS {:.3f} min", ev_first, fifs)};
  });

  s.add("availability in [0,1] over beta and mu_e", [&] {
    bool ok = true;
    double lo = 1.0, hi = 0.0;
    for (double ia : {15.0, 20.0, 40.0, 80.0}) {
      ParamSet q = p;
      q.station.mu_e = 1.0 / ia;
      if (!stability_report(q).ev_queue_stable) continue;
      const WaitTable w(q);
      for (double b : {0.0, 0.25, 0.5, 1.0, 2.0, 4.0}) {
        const double a = availability(BiasedDistance{b}, q, w).P_a;
        lo = std::min(lo, a);
        hi = std::max(hi, a);
        ok = ok && a >= 0.0 && a <= 1.0;
      }
      for (double b : {0.0, 0.5, 1.0}) {
        const double a = availability(IndependentThinning{b}, q, w).P_a;
        ok = ok && a >= 0.0 && a <= 1.0;
      }
    }
    return std::pair{ok, fmt::format("biased range [{:.4f}, {:.4f}]", lo, hi)};
  });

  const CoverageModel model(p, 0.6);
  s.add("Laplace transform at zero", [&] {
    bool ok = true;
    for (auto link : {LinkClass::ClusterLoS, LinkClass::ClusterNLoS, LinkClass::NearbyLoS,
                      LinkClass::NearbyNLoS, LinkClass::TBS}) {
      ok = ok && model.laplace_interference(0.0, 300.0, link) == 1.0;
    }
    return std::pair{ok, std::string("L_I(0) = 1 for every link class")};
  });
  s.add("fallback association mass", [&] { return within(model.fallback_association_mass(), 1.0, 1e-6); });
  s.add("coverage below upper bound", [&] {
    const double c = model.breakdown().total;
    const double u = upper_bound_coverage(p).total;
    return std::pair{c >= 0.0 && c <= u + 1e-12 && u <= 1.0, fmt::format("{:.5f} <= {:.5f}", c, u)};
  });

  s.add("sharing fee fixture", [&] {
    ParamSet q = p;
    q.energy.B_max = 177.6;
    q.economics.c_vol = 0.2;
    return within(sharing_fee(10.0, 100.0, q) - q.station.c_slots * q.economics.c_main, 1866.9, 1.0);
  });
  s.add("sharing fee floor", [&] {
    ParamSet q = p;
    q.station.c_slots = 1;
    return within(sharing_fee(0.0, 100.0, q), q.economics.c_main, 0.0);
  });
  s.add("sharing fee monotone", [&] {
    ParamSet q = p;
    bool ok = sharing_fee(2.0, 100.0, q) <= sharing_fee(3.0, 100.0, q);
    const double f2 = sharing_fee(2.0, 100.0, q);
    q.station.c_slots += 1;
    ok = ok && f2 <= sharing_fee(2.0, 100.0, q);
    return std::pair{ok, std::string("in E[N] and in c")};
  });
  s.add("no sharing objective", [&] {
    const WaitTable w(p);
    const auto r = ev_objective(no_sharing_policy(), p, w);
    return within(r.C_e, p.economics.w_inf_ev * p.station.c_slots * p.economics.c_main, 1e-9);
  });

  s.add("Little's law in the station simulation", [&] {
    auto cfg = make_des_config(p, StationKind::EV, 6, seed, 40000.0);
    const auto r = simulate_station(cfg);
    return std::pair{r.little_ok, fmt::format("L = {:.4f}, lambda W = {:.4f}", r.ev_queue_time_avg,
                                              r.ev_arrival_rate * r.ev_wait.mean)};
  });
  return s.take();
}

std::vector<std::pair<std::string, Table>> oracle_tables(const ParamSet& p, std::uint64_t seed,
                                                          bool quick, unsigned jobs) {
  std::vector<std::pair<std::string, Table>> out;

  Table q{{"c", "m", "interarrival_min", "N", "regime", "analytic_min", "sim_min", "sim_ci_min", "rel_dev"}, {}};
  std::uint64_t row = 0;
  const std::vector<double> ias = quick ? std::vector<double>{20, 60} : std::vector<double>{10, 15, 20, 30, 60};
  for (int c : {1, 2, 3}) {
    for (int m : {1, 2}) {
      for (double ia : ias) {
        ParamSet r = p;
        r.station.c_slots = c;
        r.station.m_per_slot = m;
        r.station.mu_e = 1.0 / ia;
        if (!stability_report(r).ev_queue_stable) continue;
        const auto ctx1 = make_queue_context(r, StationKind::EV, 1);
        const int N0 = static_cast<int>(std::ceil(large_n_threshold(ctx1)));
        for (int N : {N0 / 4 + 1, N0 + 2}) {
          const auto ctx = make_queue_context(r, StationKind::EV, N);
          const double an = uav_wait(ctx);
          const auto sim = simulate_queues(r, StationKind::EV, N, child_seed(seed, row++), quick ? 40000.0 : 0.0);
          q.add({long{c}, long{m}, ia, long{N}, std::string(is_large_n(ctx) ? "large" : "small"), an,
                 sim.uav_wait.mean, sim.uav_wait.half_width,
                 sim.uav_wait.mean > 0.0 ? (an - sim.uav_wait.mean) / sim.uav_wait.mean : 0.0});
        }
      }
    }
  }
  out.emplace_back("queue", std::move(q));

  SimConfig cfg;
  cfg.params = p;
  cfg.realizations = quick ? 4 : 16;
  cfg.seed = seed;
  cfg.jobs = jobs;
  const WaitTable waits(p);
  Table a{{"policy", "beta", "P_a_analytic", "P_a_sim", "P_a_sim_ci", "coverage_analytic", "coverage_sim",
           "coverage_sim_ci"},
          {}};
  for (double b : {0.25, 1.0}) {
    const double an = availability(BiasedDistance{b}, p, waits).P_a;
    const auto sim = simulate_availability(cfg, BiasedDistance{b});
    const double cov = CoverageModel(p, an).breakdown().total;
    const auto cs = simulate_coverage(p, an, quick ? 5000 : 20000, child_seed(seed, 100 + row++), 15000.0, jobs);
    a.add({std::string("biased"), b, an, sim.P_a.mean, sim.P_a.half_width, cov, cs.p_cov, cs.half_width});
  }
  out.emplace_back("availability", std::move(a));

  Table f{{"kind", "samples", "ks"}, {}};
  const std::size_t n = quick ? 5000 : 20000;
  for (StationKind k : {StationKind::EV, StationKind::UAV}) {
    const double lp = k == StationKind::EV ? p.geometry.lambda_p_ev : p.geometry.lambda_p_d;
    const auto samples = first_contact_samples(p.geometry.lambda_l, lp, n, child_seed(seed, 200 + row++), 6000.0, jobs);
    const double ks = ks_distance(samples, [&](double r) { return first_contact_cdf(r, p.geometry.lambda_l, lp); });
    f.add({std::string(to_string(k)), static_cast<long>(n), ks});
  }
  out.emplace_back("first-contact", std::move(f));
  return out;
}

}  // namespace chargeshare
