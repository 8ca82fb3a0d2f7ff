#include "chargeshare/params.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <optional>
#include <set>
#include <sstream>

#include <fmt/format.h>
#include <yaml-cpp/yaml.h>

#include "chargeshare/energy.hpp"
#include "chargeshare/units.hpp"

namespace chargeshare {

namespace units {
double from_db(double db) { return std::pow(10.0, db / 10.0); }
double to_db(double linear) { return 10.0 * std::log10(linear); }
}  // namespace units

std::string_view to_string(StationKind kind) {
  return kind == StationKind::EV ? "ev" : "uav";
}

std::string_view to_string(ServingPolicy policy) {
  return policy == ServingPolicy::FIFS ? "fifs" : "ev_first";
}

ParamSet default_params() {
  ParamSet p;
  auto& g = p.geometry;
  g.lambda_l = 24.0 / std::numbers::pi * 1e-3;
  g.lambda_p_ev = 2.1e-5;
  g.lambda_p_d = 1.05e-5;
  g.lambda_c_ev = std::numbers::pi * g.lambda_l * g.lambda_p_ev;
  g.lambda_c_d = std::numbers::pi * g.lambda_l * g.lambda_p_d;
  g.lambda_t = 1.0 * units::per_km2_to_per_m2;
  g.lambda_u = 4.0 * units::per_km2_to_per_m2;
  g.r_c = 100.0;
  g.h = 100.0;

  auto& e = p.energy;
  e.B_max = 177.6;
  e.B_max_ev = 60.0 * units::Wh_per_kWh;
  e.P_cha = 120.0 * units::W_per_kW;
  e.p_s = 177.5;
  e.p_m = 161.8;
  e.v = 18.46;
  e.P_0 = 79.8563;
  e.P_i = 88.6279;
  e.U_tip = 120.0;
  e.v_0 = 4.03;
  e.d_0 = 0.6;
  e.rho_air = 1.225;
  e.s_rotor = 0.05;
  e.A_disc = 0.503;
  e.mu_soc = 3.0;
  e.sigma_soc = 0.6;
  e.T_ch_d_ev = 30.0;
  e.T_ch_d_d = 5.0;

  p.station = {2, 2, 1.0 / 20.0, ServingPolicy::EVFirst};

  auto& ch = p.channel;
  ch.rho_u = 0.2;
  ch.rho_t = 10.0;
  ch.alpha_l = 2.1;
  ch.alpha_n = 4.0;
  ch.alpha_t = 4.0;
  ch.m_l = 3;
  ch.m_n = 1;
  ch.eta_l = units::from_db(0.0);
  ch.eta_n = units::from_db(-20.0);
  ch.c1 = 25.27;
  ch.c2 = 0.2;
  ch.gamma = units::from_db(0.0);
  ch.sigma_n2 = 1e-9;
  ch.a_fit = 3.5;
  ch.b_fit = 3.5;

  p.economics = {0.2, 1131.0, -1.0 / 3.0, 2.0 / 3.0, 6.0, 1.0, 1e-3};
  p.decision = PolicyDecision{BiasedDistance{1.0}, 0.0};
  return p;
}

namespace {

enum class Dim {
  LinearDensity,
  ArealDensity,
  Length,
  Area,
  Duration,
  Rate,
  Power,
  Energy,
  Speed,
  AirDensity,
  Ratio,  // linear, or `_dB`
  Plain,
  Price,
  Annual,
};

struct Unit {
  std::string_view suffix;
  double factor;
};

std::vector<Unit> units_for(Dim dim) {
  switch (dim) {
    case Dim::LinearDensity: return {{"per_m", 1.0}, {"per_km", units::per_km_to_per_m}};
    case Dim::ArealDensity: return {{"per_m2", 1.0}, {"per_km2", units::per_km2_to_per_m2}};
    case Dim::Length: return {{"m", 1.0}, {"km", units::m_per_km}};
    case Dim::Area: return {{"m2", 1.0}};
    case Dim::Duration:
      return {{"min", 1.0}, {"h", units::min_per_h}, {"s", 1.0 / units::s_per_min}};
    case Dim::Rate: return {{"per_min", 1.0}, {"per_h", 1.0 / units::min_per_h}};
    case Dim::Power: return {{"W", 1.0}, {"kW", units::W_per_kW}};
    case Dim::Energy: return {{"Wh", 1.0}, {"kWh", units::Wh_per_kWh}};
    case Dim::Speed: return {{"mps", 1.0}};
    case Dim::AirDensity: return {{"kg_per_m3", 1.0}};
    case Dim::Ratio: return {{"", 1.0}, {"dB", std::nan("")}};
    case Dim::Plain: return {{"", 1.0}};
    case Dim::Price: return {{"usd_per_kWh", 1.0}};
    case Dim::Annual: return {{"usd_per_year", 1.0}};
  }
  return {};
}

struct Field {
  std::string section;
  std::string base;
  Dim dim;
  std::function<double&(ParamSet&)> ref;
};

struct IntField {
  std::string section;
  std::string key;
  std::function<int&(ParamSet&)> ref;
};

std::string key_for(std::string_view base, std::string_view suffix) {
  return suffix.empty() ? std::string(base) : fmt::format("{}_{}", base, suffix);
}

const std::vector<Field>& fields() {
  static const std::vector<Field> table = [] {
    std::vector<Field> t;
    auto add = [&t](std::string s, std::string b, Dim d, std::function<double&(ParamSet&)> r) {
      t.push_back({std::move(s), std::move(b), d, std::move(r)});
    };
    add("geometry", "lambda_l", Dim::LinearDensity, [](ParamSet& p) -> double& { return p.geometry.lambda_l; });
    add("geometry", "lambda_p_ev", Dim::LinearDensity, [](ParamSet& p) -> double& { return p.geometry.lambda_p_ev; });
    add("geometry", "lambda_p_d", Dim::LinearDensity, [](ParamSet& p) -> double& { return p.geometry.lambda_p_d; });
    add("geometry", "lambda_c_ev", Dim::ArealDensity, [](ParamSet& p) -> double& { return p.geometry.lambda_c_ev; });
    add("geometry", "lambda_c_d", Dim::ArealDensity, [](ParamSet& p) -> double& { return p.geometry.lambda_c_d; });
    add("geometry", "lambda_t", Dim::ArealDensity, [](ParamSet& p) -> double& { return p.geometry.lambda_t; });
    add("geometry", "lambda_u", Dim::ArealDensity, [](ParamSet& p) -> double& { return p.geometry.lambda_u; });
    add("geometry", "r_c", Dim::Length, [](ParamSet& p) -> double& { return p.geometry.r_c; });
    add("geometry", "h", Dim::Length, [](ParamSet& p) -> double& { return p.geometry.h; });

    add("energy", "B_max", Dim::Energy, [](ParamSet& p) -> double& { return p.energy.B_max; });
    add("energy", "B_max_ev", Dim::Energy, [](ParamSet& p) -> double& { return p.energy.B_max_ev; });
    add("energy", "P_cha", Dim::Power, [](ParamSet& p) -> double& { return p.energy.P_cha; });
    add("energy", "p_s", Dim::Power, [](ParamSet& p) -> double& { return p.energy.p_s; });
    add("energy", "p_m", Dim::Power, [](ParamSet& p) -> double& { return p.energy.p_m; });
    add("energy", "v", Dim::Speed, [](ParamSet& p) -> double& { return p.energy.v; });
    add("energy", "P_0", Dim::Power, [](ParamSet& p) -> double& { return p.energy.P_0; });
    add("energy", "P_i", Dim::Power, [](ParamSet& p) -> double& { return p.energy.P_i; });
    add("energy", "U_tip", Dim::Speed, [](ParamSet& p) -> double& { return p.energy.U_tip; });
    add("energy", "v_0", Dim::Speed, [](ParamSet& p) -> double& { return p.energy.v_0; });
    add("energy", "d_0", Dim::Plain, [](ParamSet& p) -> double& { return p.energy.d_0; });
    add("energy", "rho_air", Dim::AirDensity, [](ParamSet& p) -> double& { return p.energy.rho_air; });
    add("energy", "s_rotor", Dim::Plain, [](ParamSet& p) -> double& { return p.energy.s_rotor; });
    add("energy", "A_disc", Dim::Area, [](ParamSet& p) -> double& { return p.energy.A_disc; });
    add("energy", "mu_soc", Dim::Plain, [](ParamSet& p) -> double& { return p.energy.mu_soc; });
    add("energy", "sigma_soc", Dim::Plain, [](ParamSet& p) -> double& { return p.energy.sigma_soc; });
    add("energy", "T_ch_d_ev", Dim::Duration, [](ParamSet& p) -> double& { return p.energy.T_ch_d_ev; });
    add("energy", "T_ch_d_d", Dim::Duration, [](ParamSet& p) -> double& { return p.energy.T_ch_d_d; });

    add("station", "mu_e", Dim::Rate, [](ParamSet& p) -> double& { return p.station.mu_e; });

    add("channel", "rho_u", Dim::Power, [](ParamSet& p) -> double& { return p.channel.rho_u; });
    add("channel", "rho_t", Dim::Power, [](ParamSet& p) -> double& { return p.channel.rho_t; });
    add("channel", "alpha_l", Dim::Plain, [](ParamSet& p) -> double& { return p.channel.alpha_l; });
    add("channel", "alpha_n", Dim::Plain, [](ParamSet& p) -> double& { return p.channel.alpha_n; });
    add("channel", "alpha_t", Dim::Plain, [](ParamSet& p) -> double& { return p.channel.alpha_t; });
    add("channel", "eta_l", Dim::Ratio, [](ParamSet& p) -> double& { return p.channel.eta_l; });
    add("channel", "eta_n", Dim::Ratio, [](ParamSet& p) -> double& { return p.channel.eta_n; });
    add("channel", "c1", Dim::Plain, [](ParamSet& p) -> double& { return p.channel.c1; });
    add("channel", "c2", Dim::Plain, [](ParamSet& p) -> double& { return p.channel.c2; });
    add("channel", "gamma", Dim::Ratio, [](ParamSet& p) -> double& { return p.channel.gamma; });
    add("channel", "sigma_n2", Dim::Power, [](ParamSet& p) -> double& { return p.channel.sigma_n2; });
    add("channel", "a_fit", Dim::Plain, [](ParamSet& p) -> double& { return p.channel.a_fit; });
    add("channel", "b_fit", Dim::Plain, [](ParamSet& p) -> double& { return p.channel.b_fit; });

    add("economics", "c_vol", Dim::Price, [](ParamSet& p) -> double& { return p.economics.c_vol; });
    add("economics", "c_main", Dim::Annual, [](ParamSet& p) -> double& { return p.economics.c_main; });
    add("economics", "w_wait", Dim::Plain, [](ParamSet& p) -> double& { return p.economics.w_wait; });
    add("economics", "w_inf_ev", Dim::Plain, [](ParamSet& p) -> double& { return p.economics.w_inf_ev; });
    add("economics", "w_cov", Dim::Plain, [](ParamSet& p) -> double& { return p.economics.w_cov; });
    add("economics", "w_c", Dim::Plain, [](ParamSet& p) -> double& { return p.economics.w_c; });
    add("economics", "w_inf_d", Dim::Plain, [](ParamSet& p) -> double& { return p.economics.w_inf_d; });

    add("policy", "delta_lambda_c_d", Dim::ArealDensity, [](ParamSet& p) -> double& { return p.decision.delta_lambda_c_d; });
    return t;
  }();
  return table;
}

const std::vector<IntField>& int_fields() {
  static const std::vector<IntField> table = {
      {"station", "c_slots", [](ParamSet& p) -> int& { return p.station.c_slots; }},
      {"station", "m_per_slot", [](ParamSet& p) -> int& { return p.station.m_per_slot; }},
      {"channel", "m_l", [](ParamSet& p) -> int& { return p.channel.m_l; }},
      {"channel", "m_n", [](ParamSet& p) -> int& { return p.channel.m_n; }},
  };
  return table;
}

// Keys handled outside the numeric tables.
const std::set<std::string> special_keys = {
    "geometry.density_authority", "station.ev_interarrival", "station.serving_policy",
    "policy.association",         "policy.beta",
};

std::string format_double(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

double scalar_as_double(const YAML::Node& node, const std::string& where) {
  try {
    return node.as<double>();
  } catch (const YAML::Exception&) {
    throw ParamError(where, "expected a number, got '" + node.as<std::string>("?") + "'");
  }
}

int scalar_as_int(const YAML::Node& node, const std::string& where) {
  const double x = scalar_as_double(node, where);
  if (std::floor(x) != x) throw ParamError(where, "expected an integer");
  return static_cast<int>(x);
}

void apply_override(YAML::Node& root, const std::string& assignment) {
  const auto eq = assignment.find('=');
  const auto dot = assignment.find('.');
  if (eq == std::string::npos || dot == std::string::npos || dot > eq) {
    throw ParamError(assignment, "override must look like section.key=value");
  }
  const std::string section = assignment.substr(0, dot);
  const std::string key = assignment.substr(dot + 1, eq - dot - 1);
  const std::string value = assignment.substr(eq + 1);
  if (!root[section] || !root[section].IsMap()) root[section] = YAML::Node(YAML::NodeType::Map);
  YAML::Node sec = root[section];
  sec[key] = YAML::Load(value);
}

bool approx_rel(double a, double b, double rel) {
  return std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b));
}

}  // namespace

std::vector<UnitConversion> unit_table() {
  std::vector<UnitConversion> out;
  std::set<std::string_view> seen;
  for (Dim d : {Dim::LinearDensity, Dim::ArealDensity, Dim::Length, Dim::Area, Dim::Duration,
                Dim::Rate, Dim::Power, Dim::Energy, Dim::Speed, Dim::AirDensity, Dim::Price,
                Dim::Annual}) {
    for (const auto& u : units_for(d)) {
      if (seen.insert(u.suffix).second) out.push_back({u.suffix, u.factor});
    }
  }
  return out;
}

LoadResult load_params(std::string_view source, const std::vector<std::string>& overrides) {
  YAML::Node root;
  try {
    root = source.empty() ? YAML::Node(YAML::NodeType::Map) : YAML::Load(std::string(source));
  } catch (const YAML::Exception& e) {
    throw ParamError("<config>", std::string("parse error: ") + e.what());
  }
  if (root.IsNull()) root = YAML::Node(YAML::NodeType::Map);
  if (!root.IsMap()) throw ParamError("<config>", "top level must be a mapping of sections");
  for (const auto& o : overrides) apply_override(root, o);

  // Index of every accepted dotted key.
  struct Target {
    const Field* field = nullptr;
    const IntField* int_field = nullptr;
    double factor = 1.0;
    bool decibel = false;
  };
  std::map<std::string, Target> accepted;
  for (const auto& f : fields()) {
    for (const auto& u : units_for(f.dim)) {
      Target t;
      t.field = &f;
      t.factor = u.factor;
      t.decibel = (u.suffix == "dB");
      accepted[f.section + "." + key_for(f.base, u.suffix)] = t;
    }
  }
  for (const auto& f : int_fields()) {
    Target t;
    t.int_field = &f;
    accepted[f.section + "." + f.key] = t;
  }

  LoadResult result{default_params(), {}};
  ParamSet& p = result.params;
  std::set<std::string> given;  // canonical "section.base" of explicit fields
  std::optional<std::string> density_authority;
  std::optional<std::string> association;
  std::optional<double> beta;

  static const std::set<std::string> sections = {"geometry", "energy",    "station",
                                                 "channel",  "economics", "policy"};
  for (const auto& sec : root) {
    const auto section = sec.first.as<std::string>();
    if (!sections.count(section)) throw ParamError(section, "unknown section");
    if (!sec.second.IsMap()) throw ParamError(section, "section must be a mapping");
    for (const auto& kv : sec.second) {
      const auto key = kv.first.as<std::string>();
      const std::string dotted = section + "." + key;
      if (auto it = accepted.find(dotted); it != accepted.end()) {
        const Target& t = it->second;
        if (t.int_field) {
          t.int_field->ref(p) = scalar_as_int(kv.second, dotted);
          given.insert(dotted);
        } else {
          const double raw = scalar_as_double(kv.second, dotted);
          const double value = t.decibel ? units::from_db(raw) : raw * t.factor;
          const std::string canon = section + "." + t.field->base;
          if (given.count(canon)) throw ParamError(dotted, "given twice with different units");
          t.field->ref(p) = value;
          given.insert(canon);
        }
      } else if (dotted == "geometry.density_authority") {
        density_authority = kv.second.as<std::string>();
        if (*density_authority != "line" && *density_authority != "planar") {
          throw ParamError(dotted, "must be 'line' or 'planar'");
        }
      } else if (dotted == "station.ev_interarrival_min" || dotted == "station.ev_interarrival_h") {
        const double x = scalar_as_double(kv.second, dotted) *
                         (key.ends_with("_h") ? units::min_per_h : 1.0);
        if (!(x > 0)) throw ParamError(dotted, "interarrival time must be positive");
        if (given.count("station.mu_e")) throw ParamError(dotted, "conflicts with mu_e");
        p.station.mu_e = 1.0 / x;
        given.insert("station.mu_e");
      } else if (dotted == "station.serving_policy") {
        const auto v = kv.second.as<std::string>();
        if (v == "fifs") p.station.serving_policy = ServingPolicy::FIFS;
        else if (v == "ev_first") p.station.serving_policy = ServingPolicy::EVFirst;
        else throw ParamError(dotted, "must be 'fifs' or 'ev_first'");
      } else if (dotted == "policy.association") {
        association = kv.second.as<std::string>();
        if (*association != "biased" && *association != "thinning") {
          throw ParamError(dotted, "must be 'biased' or 'thinning'");
        }
      } else if (dotted == "policy.beta") {
        beta = scalar_as_double(kv.second, dotted);
      } else {
        throw ParamError(dotted, "unknown key");
      }
    }
  }

  // Association decision.
  {
    const bool thinning = association ? *association == "thinning"
                                      : std::holds_alternative<IndependentThinning>(p.decision.association);
    if (thinning) {
      p.decision.association = IndependentThinning{beta.value_or(0.5)};
    } else {
      p.decision.association = BiasedDistance{beta.value_or(1.0)};
    }
  }

  // Resolve line/point versus planar station densities.
  auto& g = p.geometry;
  const double pi = std::numbers::pi;
  bool line_given = given.count("geometry.lambda_l") > 0;
  auto resolve = [&](const char* kind, double& lambda_p, double& lambda_c) {
    const bool p_given = given.count(std::string("geometry.lambda_p_") + kind) > 0;
    const bool c_given = given.count(std::string("geometry.lambda_c_") + kind) > 0;
    line_given = line_given || p_given;
    const double from_line = pi * g.lambda_l * lambda_p;
    if (p_given && c_given) {
      if (approx_rel(lambda_c, from_line, 1e-12)) return;
      if (!density_authority) {
        throw ParamError(std::string("geometry.lambda_c_") + kind,
                         "inconsistent with pi*lambda_l*lambda_p; set geometry.density_authority "
                         "to 'line' or 'planar'");
      }
      if (*density_authority == "line") lambda_c = from_line;
      else lambda_p = lambda_c / (pi * g.lambda_l);
    } else if (c_given) {
      lambda_p = lambda_c / (pi * g.lambda_l);
    } else {
      lambda_c = from_line;
    }
  };
  resolve("ev", g.lambda_p_ev, g.lambda_c_ev);
  resolve("d", g.lambda_p_d, g.lambda_c_d);

  if (line_given && !density_authority) {
    // Tabulated planar pairing for the reference road network.
    constexpr double tab_ev = 0.25e-6, tab_d = 0.5e-6;
    if (!approx_rel(g.lambda_c_ev, tab_ev, 0.01) || !approx_rel(g.lambda_c_d, tab_d, 0.01)) {
      result.warnings.push_back(fmt::format(
          "planar densities derived from the line process (lambda_c_ev={:.4g}/km2, "
          "lambda_c_d={:.4g}/km2) differ from the tabulated pairing (0.25/km2, 0.5/km2); "
          "set geometry.density_authority to 'line' to accept them or 'planar' with explicit "
          "lambda_c values",
          g.lambda_c_ev / units::per_km2_to_per_m2, g.lambda_c_d / units::per_km2_to_per_m2));
    }
  }

  validate(p);
  return result;
}

LoadResult load_params_file(const std::string& path, const std::vector<std::string>& overrides) {
  std::ifstream in(path);
  if (!in) throw ParamError(path, "cannot open config file");
  std::stringstream ss;
  ss << in.rdbuf();
  return load_params(ss.str(), overrides);
}

std::string emit_params(const ParamSet& p) {
  ParamSet copy = p;
  std::string out;
  std::string current;
  for (const auto& f : fields()) {
    if (f.section != current) {
      current = f.section;
      out += current + ":\n";
      if (current == "policy") {
        const bool thin = std::holds_alternative<IndependentThinning>(p.decision.association);
        out += fmt::format("  association: {}\n", thin ? "thinning" : "biased");
        out += fmt::format(
            "  beta: {}\n",
            format_double(thin ? std::get<IndependentThinning>(p.decision.association).beta_o
                               : std::get<BiasedDistance>(p.decision.association).beta_d));
      }
      for (const auto& i : int_fields()) {
        if (i.section == current) out += fmt::format("  {}: {}\n", i.key, i.ref(copy));
      }
      if (current == "station") {
        out += fmt::format("  serving_policy: {}\n", to_string(p.station.serving_policy));
      }
    }
    const auto canonical = units_for(f.dim).front().suffix;
    out += fmt::format("  {}: {}\n", key_for(f.base, canonical), format_double(f.ref(copy)));
  }
  return out;
}

void validate(const ParamSet& p) {
  auto require = [](bool ok, const char* field, const char* what) {
    if (!ok) throw ParamError(field, what);
  };
  const auto& g = p.geometry;
  const double pi = std::numbers::pi;
  require(g.lambda_l > 0, "geometry.lambda_l", "must be > 0");
  require(g.lambda_p_ev > 0, "geometry.lambda_p_ev", "must be > 0");
  require(g.lambda_p_d > 0, "geometry.lambda_p_d", "must be > 0");
  require(g.lambda_c_ev > 0, "geometry.lambda_c_ev", "must be > 0");
  require(g.lambda_c_d > 0, "geometry.lambda_c_d", "must be > 0");
  require(g.lambda_t > 0, "geometry.lambda_t", "must be > 0");
  require(g.lambda_u > 0, "geometry.lambda_u", "must be > 0");
  require(approx_rel(g.lambda_c_ev, pi * g.lambda_l * g.lambda_p_ev, 1e-12), "geometry.lambda_c_ev",
          "lambda_c = pi*lambda_l*lambda_p violated");
  require(approx_rel(g.lambda_c_d, pi * g.lambda_l * g.lambda_p_d, 1e-12), "geometry.lambda_c_d",
          "lambda_c = pi*lambda_l*lambda_p violated");
  require(g.lambda_c_ev > g.lambda_c_d, "geometry.lambda_c_ev", "lambda_c_ev > lambda_c_d violated");
  require(g.r_c > 0, "geometry.r_c", "must be > 0");
  require(g.h > 0, "geometry.h", "must be > 0");

  const auto& e = p.energy;
  for (auto [x, name] : {std::pair{e.B_max, "energy.B_max"}, {e.B_max_ev, "energy.B_max_ev"},
                         {e.P_cha, "energy.P_cha"}, {e.p_s, "energy.p_s"}, {e.p_m, "energy.p_m"},
                         {e.v, "energy.v"}, {e.P_0, "energy.P_0"}, {e.P_i, "energy.P_i"},
                         {e.U_tip, "energy.U_tip"}, {e.v_0, "energy.v_0"}, {e.d_0, "energy.d_0"},
                         {e.rho_air, "energy.rho_air"}, {e.s_rotor, "energy.s_rotor"},
                         {e.A_disc, "energy.A_disc"}, {e.mu_soc, "energy.mu_soc"},
                         {e.sigma_soc, "energy.sigma_soc"}, {e.T_ch_d_ev, "energy.T_ch_d_ev"},
                         {e.T_ch_d_d, "energy.T_ch_d_d"}}) {
    require(x > 0, name, "must be > 0");
  }
  require(e.T_ch_d_ev > e.T_ch_d_d, "energy.T_ch_d_ev", "T_ch_d_ev > T_ch_d_d violated");

  require(p.station.c_slots >= 1, "station.c_slots", "must be >= 1");
  require(p.station.m_per_slot >= 1, "station.m_per_slot", "must be >= 1");
  require(p.station.mu_e >= 0, "station.mu_e", "must be >= 0");

  const auto& ch = p.channel;
  require(ch.m_l >= 1, "channel.m_l", "must be an integer >= 1");
  require(ch.m_n >= 1, "channel.m_n", "must be an integer >= 1");
  require(ch.alpha_l > 2, "channel.alpha_l", "must be > 2");
  require(ch.alpha_n > 2, "channel.alpha_n", "must be > 2");
  require(ch.alpha_t > 2, "channel.alpha_t", "must be > 2");
  require(ch.a_fit > 0, "channel.a_fit", "must be > 0");
  require(ch.b_fit > 0, "channel.b_fit", "must be > 0");
  require(ch.rho_u > 0, "channel.rho_u", "must be > 0");
  require(ch.rho_t > 0, "channel.rho_t", "must be > 0");
  require(ch.eta_l > 0, "channel.eta_l", "must be > 0");
  require(ch.eta_n > 0, "channel.eta_n", "must be > 0");
  require(ch.c1 > 0, "channel.c1", "must be > 0");
  require(ch.c2 > 0, "channel.c2", "must be > 0");
  require(ch.gamma > 0, "channel.gamma", "must be > 0");
  require(ch.sigma_n2 >= 0, "channel.sigma_n2", "must be >= 0");

  require(p.economics.c_vol >= 0, "economics.c_vol", "must be >= 0");
  require(p.economics.c_main >= 0, "economics.c_main", "must be >= 0");

  if (const auto* b = std::get_if<BiasedDistance>(&p.decision.association)) {
    require(b->beta_d > 0, "policy.beta", "beta_d must be > 0");
  } else {
    const double bo = std::get<IndependentThinning>(p.decision.association).beta_o;
    require(bo >= 0 && bo <= 1, "policy.beta", "beta_o must lie in [0,1]");
  }
  require(p.decision.delta_lambda_c_d >= 0, "policy.delta_lambda_c_d", "must be >= 0");
}

StabilityReport stability_report(const ParamSet& p) {
  const auto moments = charge_time_moments(p.energy);
  StabilityReport r{};
  r.offered_load = p.station.mu_e * moments.mean;
  r.printed_ev_term = p.station.mu_e * moments.mean * moments.mean;
  r.ev_queue_stable = r.offered_load < p.station.c_slots;
  r.ev_wait_formula_domain = r.printed_ev_term < 1.0;
  return r;
}

bool stability_check(const ParamSet& p) { return stability_report(p).stable(); }

}  // namespace chargeshare
