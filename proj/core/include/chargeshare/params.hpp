#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace chargeshare {

enum class StationKind { EV, UAV };
enum class ServingPolicy { FIFS, EVFirst };

std::string_view to_string(StationKind kind);
std::string_view to_string(ServingPolicy policy);

/// Densities of the road-side charging stations, base stations and UAVs.
/// Lines are parameterised by (angle, signed offset); lambda_l is the offset
/// intensity per metre per radian, so the road length per unit area is
/// pi * lambda_l and the planar station density is pi * lambda_l * lambda_p.
struct GeometryParams {
  double lambda_l;     // per m
  double lambda_p_ev;  // per m of road
  double lambda_p_d;   // per m of road
  double lambda_c_ev;  // per m^2
  double lambda_c_d;   // per m^2
  double lambda_t;     // per m^2
  double lambda_u;     // per m^2
  double r_c;          // m
  double h;            // m

  friend bool operator==(const GeometryParams&, const GeometryParams&) = default;
};

/// UAV battery and rotor constants plus the EV state-of-charge model.
struct EnergyParams {
  double B_max;     // Wh (UAV)
  double B_max_ev;  // Wh (EV)
  double P_cha;     // W (EV charging rate)
  double p_s;       // W
  double p_m;       // W
  double v;         // m/s
  // Rotary-wing power model constants.
  double P_0;       // W, blade profile power
  double P_i;       // W, induced power in hover
  double U_tip;     // m/s
  double v_0;       // m/s, mean rotor induced velocity in hover
  double d_0;       // fuselage drag ratio
  double rho_air;   // kg/m^3
  double s_rotor;   // rotor solidity
  double A_disc;    // m^2
  double mu_soc;
  double sigma_soc;
  double T_ch_d_ev;  // min, UAV charge at an EV station
  double T_ch_d_d;   // min, UAV charge at a dedicated station

  friend bool operator==(const EnergyParams&, const EnergyParams&) = default;
};

struct StationParams {
  int c_slots;
  int m_per_slot;
  double mu_e;  // EV arrivals per min
  ServingPolicy serving_policy;

  friend bool operator==(const StationParams&, const StationParams&) = default;
};

struct ChannelParams {
  double rho_u;  // W
  double rho_t;  // W
  double alpha_l;
  double alpha_n;
  double alpha_t;
  int m_l;
  int m_n;
  double eta_l;  // linear
  double eta_n;  // linear
  double c1;
  double c2;
  double gamma;     // linear SINR threshold
  double sigma_n2;  // W
  double a_fit;
  double b_fit;

  friend bool operator==(const ChannelParams&, const ChannelParams&) = default;
};

struct EconomicParams {
  double c_vol;   // USD per kWh
  double c_main;  // USD per year per charger
  double w_wait;
  double w_inf_ev;
  double w_cov;
  double w_c;
  double w_inf_d;

  friend bool operator==(const EconomicParams&, const EconomicParams&) = default;
};

struct BiasedDistance {
  double beta_d;
  friend bool operator==(const BiasedDistance&, const BiasedDistance&) = default;
};
struct IndependentThinning {
  double beta_o;
  friend bool operator==(const IndependentThinning&, const IndependentThinning&) = default;
};
using AssociationPolicy = std::variant<BiasedDistance, IndependentThinning>;

struct PolicyDecision {
  AssociationPolicy association = BiasedDistance{1.0};
  double delta_lambda_c_d = 0.0;  // per m^2

  friend bool operator==(const PolicyDecision&, const PolicyDecision&) = default;
};

struct ParamSet {
  GeometryParams geometry;
  EnergyParams energy;
  StationParams station;
  ChannelParams channel;
  EconomicParams economics;
  PolicyDecision decision;

  friend bool operator==(const ParamSet&, const ParamSet&) = default;
};

class ParamError : public std::runtime_error {
 public:
  ParamError(std::string field, const std::string& message)
      : std::runtime_error(field + ": " + message), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// Reference parameter set (road, station, channel and cost constants).
/// The planar station densities are derived from the line and point
/// densities.
ParamSet default_params();

struct LoadResult {
  ParamSet params;
  std::vector<std::string> warnings;
};

/// Parses a YAML document (sections geometry/energy/station/channel/
/// economics/policy). Keys carry their unit as a suffix, e.g.
/// `lambda_u_per_km2` or `lambda_u_per_m2`. Absent keys keep their defaults.
/// `overrides` are dotted `section.key=value` assignments applied on top.
LoadResult load_params(std::string_view source,
                       const std::vector<std::string>& overrides = {});
LoadResult load_params_file(const std::string& path,
                            const std::vector<std::string>& overrides = {});

/// Emits canonical-unit keys; load_params(emit_params(p)) == p.
std::string emit_params(const ParamSet& p);

/// Throws ParamError naming the first violated invariant.
void validate(const ParamSet& p);

/// Unit table used by the loader, one row per accepted key suffix.
struct UnitConversion {
  std::string_view suffix;
  double to_canonical;
};
std::vector<UnitConversion> unit_table();

/// Queue stability conditions at an EV station. `ev_queue_stable` is the
/// capacity condition mu_e E[T_ch,ev] < c; `ev_wait_formula_domain` is the
/// positivity of the closed-form EV waiting-time denominator
/// 1 - mu_e E[T_ch,ev]^2 (minutes).
struct StabilityReport {
  double offered_load;      // mu_e * E[T_ch,ev]
  double printed_ev_term;   // mu_e * E[T_ch,ev]^2
  bool ev_queue_stable;
  bool ev_wait_formula_domain;
  bool stable() const { return ev_queue_stable && ev_wait_formula_domain; }
};

StabilityReport stability_report(const ParamSet& p);
bool stability_check(const ParamSet& p);

}  // namespace chargeshare
