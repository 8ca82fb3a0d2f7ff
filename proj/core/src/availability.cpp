#include "chargeshare/availability.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <tuple>

#include "chargeshare/energy.hpp"
#include "chargeshare/numerics.hpp"
#include "chargeshare/pointprocess.hpp"
#include "chargeshare/units.hpp"

namespace chargeshare {

double g_fraction(double y, double T_ch, double T_w, const EnergyParams& p) {
  if (y < 0.0 || y > reachable_radius(p) * (1.0 + 1e-12)) {
    throw std::domain_error("distance outside the reachable radius");
  }
  if (T_ch < 0.0 || T_w < 0.0) throw std::domain_error("times must be >= 0");
  const double vB = p.v * p.B_max * units::J_per_Wh;  // m * J
  const double busy = (T_ch + T_w) * units::s_per_min;
  return std::max(0.0, vB - 2.0 * y * p.p_m) /
         (vB - 2.0 * y * (p.p_m - p.p_s) + p.v * p.p_s * busy);
}

namespace {
constexpr int kPanels = 16;

struct Branch {
  double value = 0.0;
  int n_max = 0;
};

// sum_n pmf[n] * sum_i w_i k_i g(y_i | N = n + 1)
Branch mix(const CellLoadPmf& pmf, const QuadratureRule& rule, const std::vector<double>& kernel,
           StationKind kind, double T_ch, const ParamSet& p, const WaitTable& waits) {
  Branch b;
  b.n_max = static_cast<int>(pmf.p.size()) - 1;
  for (std::size_t n = 0; n < pmf.p.size(); ++n) {
    if (pmf.p[n] == 0.0) continue;
    const double tw = waits.uav_wait(kind, static_cast<int>(n) + 1);
    double inner = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      inner += rule.weights[i] * kernel[i] * g_fraction(rule.nodes[i], T_ch, tw, p.energy);
    }
    b.value += pmf.p[n] * inner;
  }
  return b;
}

double y_limit(const ParamSet& p) {
  const auto& g = p.geometry;
  return std::min(reachable_radius(p.energy), association_truncation(g, 1e-12));
}
}  // namespace

AvailabilityResult availability_biased(double beta_d, const ParamSet& p, const WaitTable& waits) {
  if (beta_d < 0.0) throw std::domain_error("beta_d must be >= 0");
  const auto& g = p.geometry;
  const GammaFit fit{p.channel.a_fit, p.channel.b_fit};
  const auto split = assoc_prob(beta_d, g);
  const auto rule = gauss_legendre_panels(0.0, y_limit(p), kPanels);
  std::vector<double> k_ev(rule.nodes.size(), 0.0), k_d(rule.nodes.size());
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double y = rule.nodes[i];
    if (beta_d > 0.0) {
      k_ev[i] = first_contact_ccdf(y / beta_d, g.lambda_l, g.lambda_p_d) *
                first_contact_pdf(y, g.lambda_l, g.lambda_p_ev);
    }
    k_d[i] = first_contact_ccdf(y * beta_d, g.lambda_l, g.lambda_p_ev) *
             first_contact_pdf(y, g.lambda_l, g.lambda_p_d);
  }
  AvailabilityResult r{};
  r.split = split;
  Branch ev, d;
  if (split.A_ev > 0.0) {
    ev = mix(uav_count_pmf(g.lambda_c_ev, split.A_ev, g.lambda_u, fit), rule, k_ev, StationKind::EV,
             p.energy.T_ch_d_ev, p, waits);
  }
  if (split.A_d > 0.0) {
    d = mix(uav_count_pmf(g.lambda_c_d, split.A_d, g.lambda_u, fit), rule, k_d, StationKind::UAV,
            p.energy.T_ch_d_d, p, waits);
  }
  r.ev_term = ev.value;
  r.d_term = d.value;
  r.P_a = std::clamp(r.ev_term + r.d_term, 0.0, 1.0);
  r.n_truncation = std::max(ev.n_max, d.n_max);
  return r;
}

AvailabilityResult availability_thinning(double beta_o, const ParamSet& p, const WaitTable& waits) {
  if (beta_o < 0.0 || beta_o > 1.0) throw std::domain_error("beta_o must lie in [0,1]");
  const auto& g = p.geometry;
  const GammaFit fit{p.channel.a_fit, p.channel.b_fit};
  const auto [lu_ev, lu_d] = thinning_split(beta_o, g.lambda_u);
  const auto rule = gauss_legendre_panels(0.0, y_limit(p), kPanels);
  std::vector<double> f_ev(rule.nodes.size()), f_d(rule.nodes.size());
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    f_ev[i] = first_contact_pdf(rule.nodes[i], g.lambda_l, g.lambda_p_ev);
    f_d[i] = first_contact_pdf(rule.nodes[i], g.lambda_l, g.lambda_p_d);
  }
  AvailabilityResult r{};
  r.split = {beta_o, 1.0 - beta_o};
  Branch ev, d;
  if (beta_o > 0.0) {
    ev = mix(uav_count_pmf(g.lambda_c_ev, 1.0, lu_ev, fit), rule, f_ev, StationKind::EV,
             p.energy.T_ch_d_ev, p, waits);
  }
  if (beta_o < 1.0) {
    d = mix(uav_count_pmf(g.lambda_c_d, 1.0, lu_d, fit), rule, f_d, StationKind::UAV,
            p.energy.T_ch_d_d, p, waits);
  }
  r.ev_term = beta_o * ev.value;
  r.d_term = (1.0 - beta_o) * d.value;
  r.P_a = std::clamp(r.ev_term + r.d_term, 0.0, 1.0);
  r.n_truncation = std::max(ev.n_max, d.n_max);
  return r;
}

AvailabilityResult availability(const AssociationPolicy& policy, const ParamSet& p,
                                const WaitTable& waits) {
  if (const auto* b = std::get_if<BiasedDistance>(&policy)) return availability_biased(b->beta_d, p, waits);
  return availability_thinning(std::get<IndependentThinning>(policy).beta_o, p, waits);
}

UavWaitSummary mean_uav_wait(const AssociationPolicy& policy, const ParamSet& p,
                             const WaitTable& waits) {
  const auto& g = p.geometry;
  const GammaFit fit{p.channel.a_fit, p.channel.b_fit};
  UavWaitSummary out;
  double A_ev, A_d, lu_ev = g.lambda_u, lu_d = g.lambda_u;
  if (const auto* b = std::get_if<BiasedDistance>(&policy)) {
    out.split = assoc_prob(b->beta_d, g);
    A_ev = out.split.A_ev;
    A_d = out.split.A_d;
  } else {
    const double bo = std::get<IndependentThinning>(policy).beta_o;
    std::tie(lu_ev, lu_d) = thinning_split(bo, g.lambda_u);
    out.split = {bo, 1.0 - bo};
    A_ev = A_d = 1.0;
  }
  auto avg = [&](double lambda_c, double A, double lu, StationKind kind) {
    if (A * lu <= 0.0) return 0.0;
    const auto pmf = uav_count_pmf(lambda_c, A, lu, fit);
    double w = 0.0;
    for (std::size_t n = 0; n < pmf.p.size(); ++n) {
      if (pmf.p[n] > 0.0) w += pmf.p[n] * waits.uav_wait(kind, static_cast<int>(n) + 1);
    }
    return w;
  };
  out.at_ev = avg(g.lambda_c_ev, A_ev, lu_ev, StationKind::EV);
  out.at_d = avg(g.lambda_c_d, A_d, lu_d, StationKind::UAV);
  out.overall = out.split.A_ev * out.at_ev + out.split.A_d * out.at_d;
  return out;
}

AssociationPolicy make_policy(PolicyKind kind, double beta) {
  if (kind == PolicyKind::Biased) return BiasedDistance{beta};
  return IndependentThinning{beta};
}

AssociationPolicy no_sharing_policy() { return IndependentThinning{0.0}; }

BetaOptimum optimize_beta(PolicyKind kind, const std::function<double(double)>& evaluator,
                          int grid_points, double tolerance) {
  const bool log_grid = kind == PolicyKind::Biased;
  const double lo = log_grid ? std::log(0.1) : 0.0;
  const double hi = log_grid ? std::log(10.0) : 1.0;
  auto beta_of = [&](double t) { return log_grid ? std::exp(t) : t; };

  BetaOptimum out{};
  std::vector<double> ts(grid_points), vals(grid_points);
  for (int i = 0; i < grid_points; ++i) {
    ts[i] = lo + (hi - lo) * i / (grid_points - 1);
    vals[i] = evaluator(beta_of(ts[i]));
    out.grid.emplace_back(beta_of(ts[i]), vals[i]);
  }
  const auto best = static_cast<int>(std::max_element(vals.begin(), vals.end()) - vals.begin());
  const auto [mn, mx] = std::minmax_element(vals.begin(), vals.end());
  out.plateau = (*mx - *mn) <= 1e-9 * std::max(1.0, std::abs(*mx));
  out.beta = beta_of(ts[best]);
  out.value = vals[best];
  if (out.plateau) return out;

  const double a = ts[std::max(0, best - 1)];
  const double b = ts[std::min(grid_points - 1, best + 1)];
  const auto refined = golden_section_max([&](double t) { return evaluator(beta_of(t)); }, a, b,
                                          tolerance);
  if (refined.value > out.value) {
    out.beta = beta_of(refined.x);
    out.value = refined.value;
  }
  return out;
}

}  // namespace chargeshare
