#include "chargeshare/energy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "chargeshare/numerics.hpp"
#include "chargeshare/units.hpp"

namespace chargeshare {

namespace {
double lognormal_cdf(double e, double mu, double sigma) {
  if (e <= 0.0) return 0.0;
  return 0.5 * std::erfc(-(std::log(e) - mu) / (sigma * std::numbers::sqrt2));
}
}  // namespace

SocDistribution::SocDistribution(double mu, double sigma)
    : mu_(mu), sigma_(sigma), z_(lognormal_cdf(100.0, mu, sigma)) {
  if (!(sigma > 0.0)) throw std::invalid_argument("sigma_soc must be > 0");
}

double SocDistribution::pdf(double e) const {
  if (!(e > 0.0) || e > 100.0) throw std::domain_error("soc must lie in (0, 100]");
  const double t = (std::log(e) - mu_) / sigma_;
  return std::exp(-0.5 * t * t) / (e * sigma_ * std::sqrt(2.0 * std::numbers::pi)) / z_;
}

double SocDistribution::cdf(double e) const {
  if (e <= 0.0) return 0.0;
  if (e >= 100.0) return 1.0;
  return lognormal_cdf(e, mu_, sigma_) / z_;
}

double SocDistribution::sample(std::mt19937_64& rng) const {
  std::lognormal_distribution<double> d(mu_, sigma_);
  for (;;) {
    const double e = d(rng);
    if (e <= 100.0) return e;
  }
}

double soc_pdf(double e, const EnergyParams& p) {
  return SocDistribution(p.mu_soc, p.sigma_soc).pdf(e);
}

double ev_full_charge_time(const EnergyParams& p) {
  return units::charge_minutes(p.B_max_ev, p.P_cha);
}

double ev_charge_time(double soc, const EnergyParams& p) {
  return ev_full_charge_time(p) * (1.0 - soc / 100.0);
}

ChargeTimeMoments charge_time_moments(const EnergyParams& p) {
  // In u = ln e the SOC density is Gaussian; integrate up to ln 100.
  const double mu = p.mu_soc;
  const double s = p.sigma_soc;
  const double z = lognormal_cdf(100.0, mu, s);
  const double full = ev_full_charge_time(p);
  const double hi = std::log(100.0);
  const double lo = std::min(mu - 14.0 * s, hi - 1.0);
  auto weight = [&](double u) {
    const double t = (u - mu) / s;
    return std::exp(-0.5 * t * t) / (s * std::sqrt(2.0 * std::numbers::pi)) / z;
  };
  auto t_of = [&](double u) { return full * (1.0 - std::exp(u) / 100.0); };
  std::vector<double> cuts{lo, hi};
  if (mu > lo && mu < hi) cuts.push_back(mu);
  const double m1 = integrate_pieces([&](double u) { return t_of(u) * weight(u); }, cuts, 1e-13);
  const double m2 = integrate_pieces(
      [&](double u) {
        const double t = t_of(u);
        return t * t * weight(u);
      },
      cuts, 1e-13);
  return {m1, m2};
}

double travel_power(double v, const EnergyParams& p) {
  if (!(v > 0.0)) throw std::domain_error("velocity must be > 0");
  return p.P_0 * (1.0 + 3.0 * v * v / (p.U_tip * p.U_tip)) + p.P_i * p.v_0 / v +
         0.5 * p.d_0 * p.rho_air * p.s_rotor * p.A_disc * v * v * v;
}

double optimal_velocity(const EnergyParams& p) {
  auto score = [&](double v) { return -travel_power(v, p) / v; };
  // Bracket on a coarse grid, then refine.
  constexpr double lo = 0.5, step = 0.25;
  constexpr int n = 400;
  std::vector<double> vals(n);
  for (int i = 0; i < n; ++i) vals[i] = score(lo + i * step);
  int peaks = 0;
  int best = 0;
  for (int i = 1; i + 1 < n; ++i) {
    if (vals[i] >= vals[i - 1] && vals[i] > vals[i + 1]) ++peaks;
    if (vals[i] > vals[best]) best = i;
  }
  if (peaks != 1) throw std::runtime_error("energy per metre is not unimodal in v");
  return golden_section_max(score, lo + (best - 1) * step, lo + (best + 1) * step, 1e-7).x;
}

double reachable_radius(const EnergyParams& p) {
  return p.v * p.B_max * units::J_per_Wh / (2.0 * p.p_m);
}

double travel_time(double y, const EnergyParams& p) {
  if (y < 0.0) throw std::domain_error("distance must be >= 0");
  if (y > reachable_radius(p) * (1.0 + 1e-12)) {
    throw std::domain_error("battery cannot complete round trip");
  }
  return units::travel_minutes(y, p.v);
}

double service_time(double y, const EnergyParams& p) {
  const double t_tra = travel_time(y, p);
  const double energy_left = p.B_max - 2.0 * p.p_m * t_tra / units::min_per_h;  // Wh
  return std::max(0.0, energy_left / p.p_s * units::min_per_h);
}

double base_service_time(const EnergyParams& p) { return p.B_max / p.p_s * units::min_per_h; }

}  // namespace chargeshare
