#pragma once

// Canonical internal units: metres, minutes, watts, watt-hours.
// Every conversion between user-facing and canonical values goes through
// this table; nothing else in the library multiplies by a unit factor.

#include <numbers>

namespace chargeshare::units {

inline constexpr double m_per_km = 1000.0;
inline constexpr double per_km_to_per_m = 1.0 / m_per_km;
inline constexpr double per_km2_to_per_m2 = 1.0 / (m_per_km * m_per_km);

inline constexpr double s_per_min = 60.0;
inline constexpr double min_per_h = 60.0;
inline constexpr double h_per_year = 365.0 * 24.0;
inline constexpr double min_per_year = h_per_year * min_per_h;  // 525600

inline constexpr double Wh_per_kWh = 1000.0;
inline constexpr double W_per_kW = 1000.0;
inline constexpr double J_per_Wh = 3600.0;

double from_db(double db);
double to_db(double linear);

/// Duration in minutes of a charge delivering `energy_Wh` at `power_W`.
constexpr double charge_minutes(double energy_Wh, double power_W) {
  return energy_Wh / power_W * min_per_h;
}

/// Travel time in minutes over `distance_m` at `speed_mps`.
constexpr double travel_minutes(double distance_m, double speed_mps) {
  return distance_m / speed_mps / s_per_min;
}

}  // namespace chargeshare::units
