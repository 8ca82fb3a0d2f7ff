#include "chargeshare/economics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "chargeshare/association.hpp"
#include "chargeshare/availability.hpp"
#include "chargeshare/energy.hpp"
#include "chargeshare/numerics.hpp"
#include "chargeshare/pointprocess.hpp"
#include "chargeshare/units.hpp"

namespace chargeshare {

namespace {

struct EvShare {
  double A = 0.0;          // fraction of lambda_u offloaded (as an area factor)
  double lambda_u = 0.0;   // density feeding the EV cells
  double beta_d = -1.0;    // < 0 for thinning
};

EvShare ev_share(const AssociationPolicy& policy, const GeometryParams& g) {
  if (const auto* b = std::get_if<BiasedDistance>(&policy)) {
    return {assoc_prob(b->beta_d, g).A_ev, g.lambda_u, b->beta_d};
  }
  const double bo = std::get<IndependentThinning>(policy).beta_o;
  if (bo < 0.0 || bo > 1.0) throw std::domain_error("beta_o must lie in [0,1]");
  return {1.0, bo * g.lambda_u, -1.0};
}

}  // namespace

double mu_e_per_hour(const ParamSet& p) { return p.station.mu_e * units::min_per_h; }

SharingLoad sharing_load(const AssociationPolicy& policy, const ParamSet& p, const WaitTable& waits,
                         const EvWaitOptions& opt) {
  const auto& g = p.geometry;
  const auto& e = p.energy;
  const GammaFit fit{p.channel.a_fit, p.channel.b_fit};
  const EvShare s = ev_share(policy, g);

  SharingLoad out;
  out.mean_uavs = s.lambda_u * s.A / g.lambda_c_ev;
  if (out.mean_uavs <= 0.0) {
    out.cycle = base_service_time(e) + e.T_ch_d_ev;
    return out;
  }

  // Serving distance of a UAV charging at an EV station.
  const double y_max = std::min(reachable_radius(e), association_truncation(g, 1e-12));
  const auto rule = gauss_legendre_panels(0.0, y_max, 16);
  double mass = 0.0, ser = 0.0, tra = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double y = rule.nodes[i];
    double k = first_contact_pdf(y, g.lambda_l, g.lambda_p_ev);
    if (s.beta_d >= 0.0) k *= first_contact_ccdf(y / s.beta_d, g.lambda_l, g.lambda_p_d);
    const double w = rule.weights[i] * k;
    mass += w;
    ser += w * service_time(y, e);
    tra += w * travel_time(y, e);
  }
  if (!(mass > 0.0)) throw std::domain_error("no serving-distance mass at EV stations");

  const auto uavs = uav_count_pmf(g.lambda_c_ev, s.A, s.lambda_u, fit);
  for (std::size_t n = 0; n < uavs.p.size(); ++n) {
    if (uavs.p[n] > 0.0) out.mean_uav_wait += uavs.p[n] * waits.uav_wait(StationKind::EV, static_cast<int>(n) + 1);
  }
  out.cycle = ser / mass + e.T_ch_d_ev + tra / mass + out.mean_uav_wait;

  const auto stations = station_load_pmf(g.lambda_c_ev, s.A, s.lambda_u, fit);
  const auto moments = waits.moments();
  for (std::size_t N = 1; N < stations.p.size(); ++N) {
    if (stations.p[N] == 0.0) continue;
    const auto ctx = make_queue_context(p, moments, StationKind::EV, static_cast<int>(N));
    out.ev_extra_wait += stations.p[N] * ev_extra_wait(ctx, p.station.serving_policy, opt);
  }
  return out;
}

double sharing_fee(double mean_uavs, double cycle_min, const ParamSet& p) {
  if (mean_uavs < 0.0) throw std::domain_error("mean UAV count must be >= 0");
  const double floor = p.station.c_slots * p.economics.c_main;
  if (mean_uavs == 0.0) return floor;
  if (!(cycle_min > 0.0)) throw std::domain_error("cycle time must be positive");
  const double kWh = p.energy.B_max / units::Wh_per_kWh;
  return units::min_per_year * mean_uavs / cycle_min * kWh * p.economics.c_vol + floor;
}

ObjectiveResult ev_objective(const AssociationPolicy& policy, const ParamSet& p,
                             const WaitTable& waits, const EvWaitOptions& opt) {
  const auto load = sharing_load(policy, p, waits, opt);
  ObjectiveResult r;
  r.decision = {policy, 0.0};
  r.extra_wait_min = load.ev_extra_wait;
  r.extra_wait_hours = load.ev_extra_wait / units::min_per_h * units::h_per_year * mu_e_per_hour(p);
  r.fee = sharing_fee(load.mean_uavs, load.cycle, p);
  r.C_e = p.economics.w_wait * r.extra_wait_hours + p.economics.w_inf_ev * r.fee;
  return r;
}

ParamSet with_extra_stations(const ParamSet& p, double delta_lambda_c_d) {
  if (delta_lambda_c_d < 0.0) throw std::domain_error("delta lambda must be >= 0");
  ParamSet q = p;
  q.geometry.lambda_c_d += delta_lambda_c_d;
  q.geometry.lambda_p_d += delta_lambda_c_d / (std::numbers::pi * q.geometry.lambda_l);
  q.decision.delta_lambda_c_d = delta_lambda_c_d;
  return q;
}

ObjectiveResult uav_objective(const PolicyDecision& decision, const ParamSet& p, double P_cov_in,
                              double fee, CoveragePath path) {
  if (!(P_cov_in > 0.0)) throw std::domain_error("baseline coverage must be positive");
  const ParamSet q = with_extra_stations(p, decision.delta_lambda_c_d);
  const WaitTable waits(q);
  ObjectiveResult r;
  r.decision = decision;
  r.fee = fee;
  r.coverage = total_coverage(q, decision.association, waits, path).total;
  r.coverage_ratio = r.coverage / P_cov_in;
  r.build_ratio = decision.delta_lambda_c_d / p.geometry.lambda_c_d;
  const auto& w = p.economics;
  r.C_u = w.w_cov * r.coverage_ratio + w.w_c * r.build_ratio + w.w_inf_d * fee;
  r.C_u_net = w.w_cov * r.coverage_ratio - w.w_c * r.build_ratio - w.w_inf_d * fee;
  return r;
}

namespace {

template <class Member>
std::size_t argmax(const std::vector<ObjectiveResult>& v, Member m) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i].*m > v[best].*m) best = i;
  }
  return best;
}

}  // namespace

SweepResult decision_sweep(const ParamSet& p, const SweepGrid& grid, SweepOrder order, unsigned jobs) {
  if (grid.betas.empty() || grid.delta_lambdas.empty()) throw std::invalid_argument("empty sweep grid");
  SweepResult out;
  {
    const WaitTable waits(p);
    out.P_cov_in = total_coverage(p, no_sharing_policy(), waits).total;
  }

  auto ev_step = [&](const ParamSet& base) {
    const WaitTable waits(base);
    auto rows = parallel_map<ObjectiveResult>(grid.betas.size(), jobs, [&](std::size_t i) {
      return ev_objective(make_policy(grid.kind, grid.betas[i]), base, waits);
    });
    for (auto& r : rows) r.decision.delta_lambda_c_d = base.decision.delta_lambda_c_d;
    return rows;
  };
  auto uav_step = [&](const AssociationPolicy& policy, double fee) {
    return parallel_map<ObjectiveResult>(grid.delta_lambdas.size(), jobs, [&](std::size_t i) {
      return uav_objective({policy, grid.delta_lambdas[i]}, p, out.P_cov_in, fee);
    });
  };

  if (order == SweepOrder::EvFirst) {
    out.ev_side = ev_step(p);
    const auto& ev = out.ev_side[argmax(out.ev_side, &ObjectiveResult::C_e)];
    out.uav_side = uav_step(ev.decision.association, ev.fee);
    out.chosen = out.uav_side[argmax(out.uav_side, &ObjectiveResult::C_u_net)];
    out.chosen.extra_wait_min = ev.extra_wait_min;
    out.chosen.extra_wait_hours = ev.extra_wait_hours;
    out.chosen.C_e = ev.C_e;
    return out;
  }

  // UAV side first, without sharing; the EV side then faces the new geometry.
  const double floor = sharing_fee(0.0, 1.0, p);
  out.uav_side = uav_step(make_policy(grid.kind, 0.0), floor);
  const double delta = out.uav_side[argmax(out.uav_side, &ObjectiveResult::C_u_net)].decision.delta_lambda_c_d;
  out.ev_side = ev_step(with_extra_stations(p, delta));
  const auto& ev = out.ev_side[argmax(out.ev_side, &ObjectiveResult::C_e)];
  out.chosen = uav_objective({ev.decision.association, delta}, p, out.P_cov_in, ev.fee);
  out.chosen.extra_wait_min = ev.extra_wait_min;
  out.chosen.extra_wait_hours = ev.extra_wait_hours;
  out.chosen.C_e = ev.C_e;
  return out;
}

}  // namespace chargeshare
