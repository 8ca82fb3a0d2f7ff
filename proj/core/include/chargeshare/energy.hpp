#pragma once

#include <random>

#include "chargeshare/params.hpp"

namespace chargeshare {

/// Truncated lognormal state of charge on (0, 100].
class SocDistribution {
 public:
  SocDistribution(double mu, double sigma);

  double pdf(double e) const;
  double cdf(double e) const;  // of the truncated law
  double normalization() const { return z_; }
  /// Rejection sampling from the untruncated lognormal.
  double sample(std::mt19937_64& rng) const;

  double mu() const { return mu_; }
  double sigma() const { return sigma_; }

 private:
  double mu_;
  double sigma_;
  double z_;  // F(100) - F(0)
};

double soc_pdf(double e, const EnergyParams& p);

struct ChargeTimeMoments {
  double mean;           // min
  double second_moment;  // min^2
};

/// EV charging time in minutes for an arrival with `soc` percent left.
double ev_charge_time(double soc, const EnergyParams& p);
/// Full-battery charging time (soc -> 0).
double ev_full_charge_time(const EnergyParams& p);

ChargeTimeMoments charge_time_moments(const EnergyParams& p);

/// Rotary-wing propulsion power at forward speed v (m/s).
double travel_power(double v, const EnergyParams& p);
/// Speed minimising energy per metre, travel_power(v) / v.
double optimal_velocity(const EnergyParams& p);

/// Largest horizontal distance (m) for which a round trip is possible.
double reachable_radius(const EnergyParams& p);
/// One-way travel time (min) over y metres.
double travel_time(double y, const EnergyParams& p);
/// Hover time (min) left after a round trip of 2y metres.
double service_time(double y, const EnergyParams& p);
/// service_time(0): the value used by the waiting-time formulas.
double base_service_time(const EnergyParams& p);

}  // namespace chargeshare
