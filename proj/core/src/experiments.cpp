#include "chargeshare/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "chargeshare/coverage.hpp"
#include "chargeshare/energy.hpp"
#include "chargeshare/numerics.hpp"
#include "chargeshare/queueing.hpp"
#include "chargeshare/simulator.hpp"
#include "chargeshare/units.hpp"
#include "chargeshare/version.hpp"

#ifndef CHARGESHARE_VERSION_STRING
#define CHARGESHARE_VERSION_STRING "unknown"
#endif

namespace chargeshare {

std::string_view version_string() { return CHARGESHARE_VERSION_STRING; }

const std::vector<std::string>& experiment_names() {
  static const std::vector<std::string> names{"fig-wait-uav", "fig-wait-ev", "fig-coverage",
                                              "fig-beta", "fig-economics"};
  return names;
}

std::string_view to_string(PolicyKind kind) {
  return kind == PolicyKind::Biased ? "biased" : "thinning";
}

PolicyKind parse_policy_kind(std::string_view s) {
  if (s == "biased") return PolicyKind::Biased;
  if (s == "thinning") return PolicyKind::Thinning;
  throw std::invalid_argument("unknown association policy: " + std::string(s));
}

BetaOptimum coverage_optimal_beta(const ParamSet& p, PolicyKind kind, int grid_points,
                                  double tolerance) {
  const WaitTable waits(p);
  return optimize_beta(
      kind, [&](double b) { return total_coverage(p, make_policy(kind, b), waits).total; },
      grid_points, tolerance);
}

std::vector<double> interarrival_grid(const ParamSet& p, bool quick) {
  const std::vector<double> all = quick ? std::vector<double>{15, 30, 60}
                                        : std::vector<double>{12, 15, 20, 30, 45, 60};
  const double mean = charge_time_moments(p.energy).mean;
  std::vector<double> out;
  for (double ia : all) {
    if (mean / ia < p.station.c_slots) out.push_back(ia);
  }
  return out;
}

std::vector<std::pair<int, int>> stable_station_configs(const ParamSet& p) {
  std::vector<std::pair<int, int>> out;
  for (int c = 1; c <= 3; ++c) {
    for (int m = 1; m <= 2; ++m) {
      ParamSet q = p;
      q.station.c_slots = c;
      q.station.m_per_slot = m;
      if (stability_report(q).ev_queue_stable) out.emplace_back(c, m);
    }
  }
  return out;
}

std::vector<WeightPreset> weight_presets(const ParamSet& p) {
  EconomicParams profit = p.economics, perf = p.economics;
  profit.w_wait = -1.0 / 3.0;
  profit.w_inf_ev = 2.0 / 3.0;
  profit.w_cov = 6.0;
  profit.w_c = 1.0;
  perf.w_wait = -2.0 / 3.0;
  perf.w_inf_ev = 1.0 / 3.0;
  perf.w_cov = 8.0;
  perf.w_c = 1.0;
  return {{"profit", profit}, {"performance", perf}};
}

std::vector<EconomicsDecision> economics_decisions(const ParamSet& p, PolicyKind kind, bool quick,
                                                   unsigned jobs) {
  std::vector<EconomicsDecision> out;
  for (const auto& [c, m] : stable_station_configs(p)) {
    ParamSet q = p;
    q.station.c_slots = c;
    q.station.m_per_slot = m;
    const double cap = coverage_optimal_beta(q, kind, quick ? 9 : 21, quick ? 1e-2 : 1e-4).beta;
    SweepGrid grid;
    grid.kind = kind;
    const int nb = quick ? 6 : 21;
    for (int i = 0; i < nb; ++i) grid.betas.push_back(cap * i / (nb - 1));
    const double step = quick ? 0.5 : 0.125;
    for (double k = 0.0; k <= 2.0 + 1e-9; k += step) grid.delta_lambdas.push_back(k * q.geometry.lambda_c_d);
    for (const auto& w : weight_presets(q)) {
      ParamSet r = q;
      r.economics = w.weights;
      out.push_back({c, m, w.name, cap, decision_sweep(r, grid, SweepOrder::EvFirst, jobs)});
    }
  }
  return out;
}

namespace {

struct Candidate {
  std::string label;
  AssociationPolicy policy;
  double beta;
};

std::vector<Candidate> candidates(const ParamSet& p, const ExperimentOptions& opt) {
  std::vector<Candidate> out{{"none", no_sharing_policy(), 0.0}};
  for (PolicyKind k : {PolicyKind::Biased, PolicyKind::Thinning}) {
    if (opt.policy && *opt.policy != k) continue;
    const double b = coverage_optimal_beta(p, k, opt.quick ? 9 : 21, opt.quick ? 1e-2 : 1e-4).beta;
    out.push_back({std::string(to_string(k)), make_policy(k, b), b});
  }
  return out;
}

SimConfig sim_config(const ParamSet& p, const ExperimentOptions& opt, std::uint64_t seed) {
  SimConfig cfg;
  cfg.params = p;
  cfg.realizations = opt.quick ? 3 : 12;
  cfg.des_horizon = opt.quick ? 10000.0 : 30000.0;
  cfg.seed = seed;
  cfg.jobs = opt.jobs;
  return cfg;
}

long coverage_draws(const ExperimentOptions& opt) { return opt.quick ? 4000 : 20000; }

ParamSet at_interarrival(const ParamSet& p, double ia) {
  ParamSet q = p;
  q.station.mu_e = 1.0 / ia;
  return q;
}

Table fig_wait_uav(const ExperimentOptions& opt) {
  Table t{{"policy", "c", "m", "interarrival_min", "beta", "uav_wait_analytic_min",
           "uav_wait_at_ev_analytic_min", "uav_wait_at_d_analytic_min", "uav_wait_sim_min",
           "uav_wait_sim_ci_min"},
          {}};
  const auto& p = opt.params;
  std::uint64_t row = 0;
  for (double ia : interarrival_grid(p, opt.quick)) {
    const ParamSet q = at_interarrival(p, ia);
    const WaitTable waits(q);
    for (const auto& c : candidates(q, opt)) {
      const auto an = mean_uav_wait(c.policy, q, waits);
      const auto sim = simulate_availability(sim_config(q, opt, child_seed(opt.seed, row++)), c.policy);
      t.add({c.label, long{q.station.c_slots}, long{q.station.m_per_slot}, ia, c.beta, an.overall,
             an.at_ev, an.at_d, sim.uav_wait.mean, sim.uav_wait.half_width});
    }
  }
  return t;
}

Table fig_wait_ev(const ExperimentOptions& opt) {
  Table t{{"policy", "c", "m", "interarrival_min", "beta", "ev_wait_analytic_min",
           "ev_extra_wait_analytic_min", "ev_wait_sim_min", "ev_wait_sim_ci_min"},
          {}};
  const auto& p = opt.params;
  std::uint64_t row = 0;
  for (double ia : interarrival_grid(p, opt.quick)) {
    const ParamSet q = at_interarrival(p, ia);
    const WaitTable waits(q);
    const auto ctx0 = make_queue_context(q, waits.moments(), StationKind::EV, 0);
    const double base = ev_wait(ctx0, q.station.serving_policy);
    for (const auto& c : candidates(q, opt)) {
      const double extra = sharing_load(c.policy, q, waits).ev_extra_wait;
      const auto sim = simulate_availability(sim_config(q, opt, child_seed(opt.seed, row++)), c.policy);
      t.add({c.label, long{q.station.c_slots}, long{q.station.m_per_slot}, ia, c.beta, base + extra,
             extra, sim.ev_wait.mean, sim.ev_wait.half_width});
    }
  }
  return t;
}

Table fig_coverage(const ExperimentOptions& opt) {
  Table t{{"policy", "c", "m", "interarrival_min", "beta", "P_a_analytic", "coverage_analytic",
           "coverage_upper_bound", "P_a_sim", "P_a_sim_ci", "coverage_sim", "coverage_sim_ci"},
          {}};
  const auto& p = opt.params;
  const double upper = upper_bound_coverage(p).total;
  std::uint64_t row = 0;
  for (double ia : interarrival_grid(p, opt.quick)) {
    const ParamSet q = at_interarrival(p, ia);
    const WaitTable waits(q);
    for (const auto& c : candidates(q, opt)) {
      const double pa = availability(c.policy, q, waits).P_a;
      const double cov = CoverageModel(q, pa).breakdown().total;
      const std::uint64_t seed = child_seed(opt.seed, row++);
      const auto sim = simulate_availability(sim_config(q, opt, seed), c.policy);
      const double pa_sim = std::clamp(sim.P_a.mean, 0.0, 1.0);
      const auto cs = simulate_coverage(q, pa_sim, coverage_draws(opt), child_seed(seed, 1), 15000.0, opt.jobs);
      t.add({c.label, long{q.station.c_slots}, long{q.station.m_per_slot}, ia, c.beta, pa, cov, upper,
             sim.P_a.mean, sim.P_a.half_width, cs.p_cov, cs.half_width});
    }
  }
  return t;
}

std::vector<double> beta_grid(PolicyKind kind, bool quick) {
  std::vector<double> out{0.0};
  if (kind == PolicyKind::Biased) {
    const int n = quick ? 7 : 13;
    for (int i = 0; i < n; ++i) out.push_back(0.1 * std::pow(100.0, static_cast<double>(i) / (n - 1)));
  } else {
    const int n = quick ? 5 : 10;
    for (int i = 1; i <= n; ++i) out.push_back(static_cast<double>(i) / n);
  }
  return out;
}

Table fig_beta(const ExperimentOptions& opt) {
  Table t{{"policy", "c", "m", "beta", "P_a_analytic", "coverage_analytic", "P_a_sim", "P_a_sim_ci",
           "coverage_sim", "coverage_sim_ci"},
          {}};
  const auto& p = opt.params;
  std::vector<std::pair<int, int>> configs;
  if (opt.quick) {
    configs.emplace_back(p.station.c_slots, p.station.m_per_slot);
  } else {
    configs = stable_station_configs(p);
  }
  std::uint64_t row = 0;
  for (const auto& [c, m] : configs) {
    ParamSet q = p;
    q.station.c_slots = c;
    q.station.m_per_slot = m;
    const WaitTable waits(q);
    for (PolicyKind k : {PolicyKind::Biased, PolicyKind::Thinning}) {
      if (opt.policy && *opt.policy != k) continue;
      for (double b : beta_grid(k, opt.quick)) {
        const auto policy = make_policy(k, b);
        const double pa = availability(policy, q, waits).P_a;
        const double cov = CoverageModel(q, pa).breakdown().total;
        const std::uint64_t seed = child_seed(opt.seed, row++);
        auto cfg = sim_config(q, opt, seed);
        cfg.realizations = opt.quick ? 2 : 4;
        const auto sim = simulate_availability(cfg, policy);
        const auto cs = simulate_coverage(q, std::clamp(sim.P_a.mean, 0.0, 1.0), coverage_draws(opt) / 2,
                                          child_seed(seed, 1), 15000.0, opt.jobs);
        t.add({std::string(to_string(k)), long{c}, long{m}, b, pa, cov, sim.P_a.mean, sim.P_a.half_width,
               cs.p_cov, cs.half_width});
      }
    }
  }
  return t;
}

Table fig_economics(const ExperimentOptions& opt) {
  Table t{{"row", "weights", "c", "m", "beta", "delta_lambda_c_d_per_km2", "extra_wait_min",
           "extra_wait_ev_hours", "fee_usd", "coverage", "coverage_ratio", "build_ratio", "C_e", "C_u",
           "C_u_net"},
          {}};
  const PolicyKind kind = opt.policy.value_or(PolicyKind::Biased);
  auto beta_of = [](const AssociationPolicy& a) {
    if (const auto* b = std::get_if<BiasedDistance>(&a)) return b->beta_d;
    return std::get<IndependentThinning>(a).beta_o;
  };
  for (const auto& d : economics_decisions(opt.params, kind, opt.quick, opt.jobs)) {
    // Columns a step does not compute are left as nan.
    auto emit = [&](const std::string& what, const ObjectiveResult& r) {
      constexpr double na = std::numeric_limits<double>::quiet_NaN();
      const bool ev = what != "uav";
      const bool uav = what != "ev";
      t.add({what, d.weights, long{d.c}, long{d.m}, beta_of(r.decision.association),
             r.decision.delta_lambda_c_d / units::per_km2_to_per_m2, ev ? r.extra_wait_min : na,
             ev ? r.extra_wait_hours : na, r.fee, uav ? r.coverage : na, uav ? r.coverage_ratio : na,
             uav ? r.build_ratio : na, ev ? r.C_e : na, uav ? r.C_u : na, uav ? r.C_u_net : na});
    };
    for (const auto& r : d.sweep.ev_side) emit("ev", r);
    for (const auto& r : d.sweep.uav_side) emit("uav", r);
    emit("chosen", d.sweep.chosen);
  }
  return t;
}

}  // namespace

Table run_experiment(std::string_view name, const ExperimentOptions& opt) {
  validate(opt.params);
  if (name == "fig-wait-uav") return fig_wait_uav(opt);
  if (name == "fig-wait-ev") return fig_wait_ev(opt);
  if (name == "fig-coverage") return fig_coverage(opt);
  if (name == "fig-beta") return fig_beta(opt);
  if (name == "fig-economics") return fig_economics(opt);
  throw UnknownExperiment("unknown experiment: " + std::string(name));
}

}  // namespace chargeshare
