#pragma once

// Generated by tests/oracles/compute_oracles.py; do not edit by hand.

namespace oracle {
inline constexpr double FC_CDF_EV_100 = 0.015681187393463913;
inline constexpr double FC_CDF_D_100 = 0.00787856199818493;
inline constexpr double FC_CDF_EV_300 = 0.13215609607782208;
inline constexpr double FC_CDF_D_300 = 0.06859507655225294;
inline constexpr double FC_CDF_EV_500 = 0.3245217981441033;
inline constexpr double FC_CDF_D_500 = 0.178843082682954;
inline constexpr double FC_CDF_EV_1000 = 0.7889129212695564;
inline constexpr double FC_CDF_D_1000 = 0.5437291988175244;
inline constexpr double FC_PDF_EV_300 = 0.0008178862183128022;
inline constexpr double A_EV_BETA_0_5 = 0.33333333329198156;
inline constexpr double A_EV_BETA_1_0 = 0.6649520523888119;
inline constexpr double A_EV_BETA_2_0 = 0.8875602307394067;
inline constexpr double EV_T_MEAN = 22.896377094128805;
inline constexpr double EV_T_SECOND = 543.4095059342119;
inline constexpr double SOC_PDF_AT_E3 = 0.03322765988641133;
inline constexpr double TRAVEL_POWER_18_46 = 163.01603024353585;
inline constexpr double OPTIMAL_VELOCITY_GRID = 18.300000000000015;
inline constexpr double T_SER_BASE = 60.0338028169014;
inline constexpr double LARGE_N_WAIT_N16 = 190.6084930531914;
inline constexpr double UAV_PMF_HALF_0 = 0.03302329066859811;
inline constexpr double STATION_PMF_HALF_0 = 0.07046466330873201;
inline constexpr double UAV_PMF_HALF_1 = 0.07896110946264168;
inline constexpr double STATION_PMF_HALF_1 = 0.1310448042404686;
inline constexpr double UAV_PMF_HALF_2 = 0.11537887939546465;
inline constexpr double STATION_PMF_HALF_2 = 0.15666886798143193;
inline constexpr double UAV_PMF_HALF_3 = 0.13283080341312786;
inline constexpr double STATION_PMF_HALF_3 = 0.15261756533791604;
inline constexpr double UAV_PMF_HALF_MEAN = 5.10204081632653;
inline constexpr double LOS_OVERHEAD = 0.9999397159116898;
inline constexpr double ALZER_BETA2_M3 = 0.5503212081491045;
inline constexpr double LAPLACE_TBS_ONLY = 0.9624312259222066;
inline constexpr double LAPLACE_CLUSTER_PA06 = 0.9906120445988226;
inline constexpr double FEE_ENERGY_TERM = 1866.9312000000002;
}  // namespace oracle
