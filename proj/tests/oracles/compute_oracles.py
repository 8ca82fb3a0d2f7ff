"""Independent reference values for the unit tests.

Run once; the output is frozen in tests/oracle_values.hpp. Uses scipy and
mpmath with different variables/quadratures than the C++ library.
"""
import math

import mpmath as mp
import numpy as np
from scipy import integrate, stats

mp.mp.dps = 30

# Reference parameters (metres, minutes, watts, watt-hours).
lam_l = 24 / math.pi * 1e-3
lam_p_ev, lam_p_d = 2.1e-5, 1.05e-5
lam_c_ev, lam_c_d = math.pi * lam_l * lam_p_ev, math.pi * lam_l * lam_p_d
lam_u, lam_t = 4e-6, 1e-6
h = 100.0
B, p_s, p_m, v = 177.6, 177.5, 161.8, 18.46
mu_soc, sig_soc = 3.0, 0.6
T_full = 60.0 / 120.0 * 60.0  # min, 60 kWh at 120 kW
c1, c2 = 25.27, 0.2
rho_u, rho_t = 0.2, 10.0
alpha_l, alpha_n, alpha_t = 2.1, 4.0, 4.0
m_l, m_n = 3, 1
eta_l, eta_n = 1.0, 0.01
a_fit = b_fit = 3.5

out = {}


def ccdf(r, lp):
    # Lines at offset rho < r meet the disk in a chord of half length sqrt(r^2 - rho^2).
    if r == 0:
        return 1.0
    f = lambda rho: 1.0 - math.exp(-2 * lp * math.sqrt(max(r * r - rho * rho, 0.0)))
    val, _ = integrate.quad(f, 0.0, r, epsabs=0, epsrel=1e-13, limit=200)
    return math.exp(-2 * math.pi * lam_l * val)


def pdf(r, lp, eps=1e-2):
    return -(ccdf(r + eps, lp) - ccdf(r - eps, lp)) / (2 * eps)


for r in (100.0, 300.0, 500.0, 1000.0):
    out[f"FC_CDF_EV_{int(r)}"] = 1 - ccdf(r, lam_p_ev)
    out[f"FC_CDF_D_{int(r)}"] = 1 - ccdf(r, lam_p_d)
out["FC_PDF_EV_300"] = pdf(300.0, lam_p_ev)


def assoc_ev(beta):
    f = lambda r: ccdf(r / beta, lam_p_d) * pdf(r, lam_p_ev)
    val, _ = integrate.quad(f, 0.0, 6000.0, epsabs=1e-12, epsrel=1e-10, limit=400)
    return val


for beta in (0.5, 1.0, 2.0):
    out[f"A_EV_BETA_{str(beta).replace('.', '_')}"] = assoc_ev(beta)

# Charge time moments over the truncated lognormal SOC.
Z = stats.lognorm(s=sig_soc, scale=math.exp(mu_soc)).cdf(100.0)
dens = lambda e: stats.lognorm(s=sig_soc, scale=math.exp(mu_soc)).pdf(e) / Z
T = lambda e: T_full * (1 - e / 100.0)
m1, _ = integrate.quad(lambda e: T(e) * dens(e), 0, 100, epsabs=0, epsrel=1e-13, limit=400, points=[20.0])
m2, _ = integrate.quad(lambda e: T(e) ** 2 * dens(e), 0, 100, epsabs=0, epsrel=1e-13, limit=400, points=[20.0])
out["EV_T_MEAN"] = m1
out["EV_T_SECOND"] = m2
out["SOC_PDF_AT_E3"] = dens(math.exp(3.0))

# Rotary-wing power and the range-optimal speed (grid scan).
P0, Pi, Utip, v0, d0, rho, s, A = 79.8563, 88.6279, 120.0, 4.03, 0.6, 1.225, 0.05, 0.503
P = lambda vv: P0 * (1 + 3 * vv * vv / Utip**2) + Pi * v0 / vv + 0.5 * d0 * rho * s * A * vv**3
out["TRAVEL_POWER_18_46"] = P(18.46)
grid = np.arange(1.0, 60.0, 0.01)
out["OPTIMAL_VELOCITY_GRID"] = float(grid[np.argmin([P(g) / g for g in grid])])
out["T_SER_BASE"] = B / p_s * 60.0

# Large-N UAV wait at an EV station, c = m = 2, interarrival 20 min, N = 16.
c, m, mu_e, T_ch, N = 2, 2, 1 / 20, 30.0, 16
T_ser = B / p_s * 60.0
rho_e = mu_e * m1 / c
out["LARGE_N_WAIT_N16"] = (T_ch * (N / (m * c) - 1) + (T_ch + T_ser) / c * mu_e * m1 - T_ser) / (1 - rho_e)

# Cell-load PMF: negative binomial mixtures.
for A_, tag in ((0.5, "HALF"),):
    mu = lam_u * A_ / lam_c_ev
    nb_uav = stats.nbinom(a_fit + 1, b_fit / (b_fit + mu))
    nb_st = stats.nbinom(a_fit, b_fit / (b_fit + mu))
    for n in range(4):
        out[f"UAV_PMF_{tag}_{n}"] = nb_uav.pmf(n)
        out[f"STATION_PMF_{tag}_{n}"] = nb_st.pmf(n)
    out[f"UAV_PMF_{tag}_MEAN"] = nb_uav.mean()

# LoS probability straight overhead.
los = lambda d: 1 / (1 + c1 * math.exp(-c2 * (math.degrees(math.atan2(h, math.sqrt(max(d * d - h * h, 0)))) - c1)))
out["LOS_OVERHEAD"] = los(h)
out["ALZER_BETA2_M3"] = 6 ** (-1 / 3)

# Laplace transform of the interference with no available UAVs, TBS link:
# alpha = 4 gives 0.5 sqrt(k) (pi/2 - atan(r^2 / sqrt(k))), k = s rho_t.
s_t, r_t = 2.0e8, 400.0
k = s_t * rho_t
out["LAPLACE_TBS_ONLY"] = math.exp(-2 * math.pi * lam_t * 0.5 * math.sqrt(k) * (math.pi / 2 - math.atan(r_t**2 / math.sqrt(k))))


# Cluster link, P_a = 0.6: UAVs and TBSs interfere from zero ground distance.
def uav_term(sv, scale, alpha, mm, los_side):
    def f(z):
        d = math.sqrt(z * z + h * h)
        pl = los(d)
        x = sv * scale * d ** (-alpha)
        return (1 - (mm / (mm + x)) ** mm) * z * (pl if los_side else 1 - pl)
    tot = 0.0
    edges = [0.0] + list(np.geomspace(10.0, 1e7, 80))
    for a0, b0 in zip(edges[:-1], edges[1:]):
        tot += integrate.quad(f, a0, b0, epsabs=0, epsrel=1e-12, limit=200)[0]
    p_inf = 1 / (1 + c1 * math.exp(c2 * c1))
    p_far = p_inf if los_side else 1 - p_inf
    return tot + sv * scale * p_far * 1e7 ** (2 - alpha) / (alpha - 2)


s_c = 1.0e4
lam_a = 0.6 * lam_u
kk = s_c * rho_t
tbs0 = 0.5 * math.sqrt(kk) * math.pi / 2
expo = 2 * math.pi * lam_a * (uav_term(s_c, eta_n * rho_u, alpha_n, m_n, False) + uav_term(s_c, eta_l * rho_u, alpha_l, m_l, True))
expo += 2 * math.pi * lam_t * tbs0
out["LAPLACE_CLUSTER_PA06"] = math.exp(-expo)

# Fee fixture.
out["FEE_ENERGY_TERM"] = 525600 * (10 / 100) * 0.1776 * 0.2

print("#pragma once\n")
print("// Generated by tests/oracles/compute_oracles.py; do not edit by hand.\n")
print("namespace oracle {")
for key, val in out.items():
    print(f"inline constexpr double {key} = {float(val)!r};")
print("}  // namespace oracle")
