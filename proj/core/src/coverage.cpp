#include "chargeshare/coverage.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "chargeshare/availability.hpp"
#include "chargeshare/numerics.hpp"

namespace chargeshare {

std::string_view to_string(LinkClass link) {
  switch (link) {
    case LinkClass::ClusterLoS: return "cluster_los";
    case LinkClass::ClusterNLoS: return "cluster_nlos";
    case LinkClass::NearbyLoS: return "nearby_los";
    case LinkClass::NearbyNLoS: return "nearby_nlos";
    case LinkClass::TBS: return "tbs";
  }
  return "?";
}

std::string_view to_string(CoveragePath path) {
  return path == CoveragePath::Approx ? "approx" : "exact";
}

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kKnotRatio = 1.02;
constexpr double kKnotMax = 1e9;
constexpr double kFarField = 1e7;  // numeric interference integrals stop here

double elevation_los(double r, const ChannelParams& ch, double h) {
  const double ground = std::sqrt(std::max(0.0, r * r - h * h));
  const double deg = std::atan2(h, ground) * 180.0 / kPi;
  return 1.0 / (1.0 + ch.c1 * std::exp(-ch.c2 * (deg - ch.c1)));
}

double gamma_ccdf_term(double x, int m) {
  // 1 - (m / (m + x))^m
  return -std::expm1(-m * std::log1p(x / m));
}
}  // namespace

double los_probability(double r, const ChannelParams& ch, double h) {
  if (!(h > 0.0) || r < h) throw std::domain_error("LoS probability needs r >= h > 0");
  return elevation_los(r, ch, h);
}

double alzer_beta2(int m) { return std::pow(std::tgamma(m + 1.0), -1.0 / m); }

CoverageModel::CoverageModel(const ParamSet& p, double P_a) : p_(p), P_a_(P_a) {
  if (P_a < 0.0 || P_a > 1.0) throw std::domain_error("P_a must lie in [0,1]");
  lam_u_ = P_a * p.geometry.lambda_u;
  p_los_inf_ = 1.0 / (1.0 + p.channel.c1 * std::exp(p.channel.c2 * p.channel.c1));
  const double h = p.geometry.h;
  knots_.push_back(h);
  cum_.push_back(0.0);
  while (knots_.back() < kKnotMax) {
    const double a = knots_.back();
    const double b = a * kKnotRatio;
    const auto rule = gauss_legendre_panels(a, b, 1);
    cum_.push_back(cum_.back() + rule.apply([&](double r) { return r * elevation_los(r, p_.channel, h); }));
    knots_.push_back(b);
  }
}

double CoverageModel::p_los(double r) const { return los_probability(r, p_.channel, p_.geometry.h); }

double CoverageModel::shell_integral(bool los, double R) const {
  const double h = p_.geometry.h;
  if (R <= h) return 0.0;
  double q;
  if (R >= knots_.back()) {
    const double K = knots_.back();
    q = cum_.back() + p_los_inf_ * 0.5 * (R * R - K * K);
  } else {
    const auto k = static_cast<std::size_t>(std::upper_bound(knots_.begin(), knots_.end(), R) -
                                            knots_.begin()) - 1;
    const auto rule = gauss_legendre_panels(knots_[k], R, 1);
    q = cum_[k] + rule.apply([&](double r) { return r * elevation_los(r, p_.channel, h); });
  }
  return los ? q : 0.5 * (R * R - h * h) - q;
}

double CoverageModel::d_n(double r) const {
  const auto& c = p_.channel;
  return std::max(std::pow(c.eta_n / c.eta_l, 1.0 / c.alpha_n) * std::pow(r, c.alpha_l / c.alpha_n),
                  p_.geometry.h);
}
double CoverageModel::d_l(double r) const {
  const auto& c = p_.channel;
  return std::max(p_.geometry.h,
                  std::pow(c.eta_l / c.eta_n, 1.0 / c.alpha_l) * std::pow(r, c.alpha_n / c.alpha_l));
}
double CoverageModel::d_lt(double r) const {
  const auto& c = p_.channel;
  return std::pow(c.rho_t / (c.rho_u * c.eta_l), 1.0 / c.alpha_t) * std::pow(r, c.alpha_l / c.alpha_t);
}
double CoverageModel::d_nt(double r) const {
  const auto& c = p_.channel;
  return std::pow(c.rho_t / (c.rho_u * c.eta_n), 1.0 / c.alpha_t) * std::pow(r, c.alpha_n / c.alpha_t);
}
double CoverageModel::d_tl(double r) const {
  const auto& c = p_.channel;
  return std::max(p_.geometry.h,
                  std::pow(c.rho_u * c.eta_l / c.rho_t, 1.0 / c.alpha_l) * std::pow(r, c.alpha_t / c.alpha_l));
}
double CoverageModel::d_tn(double r) const {
  const auto& c = p_.channel;
  return std::max(p_.geometry.h,
                  std::pow(c.rho_u * c.eta_n / c.rho_t, 1.0 / c.alpha_n) * std::pow(r, c.alpha_t / c.alpha_n));
}

double CoverageModel::distance_pdf(LinkClass link, double r) const {
  const double h = p_.geometry.h;
  const double rc = p_.geometry.r_c;
  switch (link) {
    case LinkClass::ClusterLoS:
    case LinkClass::ClusterNLoS:
      if (r < h || r > std::sqrt(rc * rc + h * h)) return 0.0;
      return 2.0 * r / (rc * rc);
    case LinkClass::NearbyLoS:
    case LinkClass::NearbyNLoS: {
      if (r < h || lam_u_ == 0.0) return 0.0;
      const bool los = link == LinkClass::NearbyLoS;
      const double pr = los ? p_los(r) : p_nlos(r);
      return 2.0 * kPi * lam_u_ * pr * r * std::exp(-2.0 * kPi * lam_u_ * shell_integral(los, r));
    }
    case LinkClass::TBS: {
      const double lt = p_.geometry.lambda_t;
      if (r < 0.0) return 0.0;
      return 2.0 * kPi * r * lt * std::exp(-kPi * lt * r * r);
    }
  }
  return 0.0;
}

double CoverageModel::distance_cdf(LinkClass link, double r) const {
  const double h = p_.geometry.h;
  const double rc = p_.geometry.r_c;
  switch (link) {
    case LinkClass::ClusterLoS:
    case LinkClass::ClusterNLoS:
      return std::clamp((r * r - h * h) / (rc * rc), 0.0, 1.0);
    case LinkClass::NearbyLoS:
    case LinkClass::NearbyNLoS:
      return -std::expm1(-2.0 * kPi * lam_u_ * shell_integral(link == LinkClass::NearbyLoS, r));
    case LinkClass::TBS:
      return r <= 0.0 ? 0.0 : -std::expm1(-kPi * p_.geometry.lambda_t * r * r);
  }
  return 0.0;
}

double CoverageModel::user_assoc_prob(LinkClass link, double r) const {
  const double lt = p_.geometry.lambda_t;
  const double k = 2.0 * kPi * lam_u_;
  switch (link) {
    case LinkClass::ClusterLoS:
    case LinkClass::ClusterNLoS:
      return 1.0;
    case LinkClass::NearbyLoS: {
      const double dt = d_lt(r);
      return std::exp(-k * shell_integral(false, d_n(r)) - kPi * lt * dt * dt);
    }
    case LinkClass::NearbyNLoS: {
      const double dt = d_nt(r);
      return std::exp(-k * shell_integral(true, d_l(r)) - kPi * lt * dt * dt);
    }
    case LinkClass::TBS:
      return std::exp(-k * (shell_integral(true, d_tl(r)) + shell_integral(false, d_tn(r))));
  }
  return 0.0;
}

// int_lower^inf [1 - (m/(m + s*scale*(z^2+h^2)^(-alpha/2)))^m] z P(sqrt(z^2+h^2)) dz
double CoverageModel::integral_term(double s, double lower, double scale, double alpha, int m,
                                    bool los) const {
  if (s == 0.0) return 0.0;
  const double h = p_.geometry.h;
  const double p_inf = los ? p_los_inf_ : 1.0 - p_los_inf_;
  const double x0 = s * scale;
  if (lower >= kFarField) return x0 * p_inf * std::pow(lower, 2.0 - alpha) / (alpha - 2.0);
  const auto rule = gauss_legendre_geometric(lower, kFarField, 0.25 * std::max(h, lower));
  double v = rule.apply([&](double z) {
    const double d2 = z * z + h * h;
    const double pl = elevation_los(std::sqrt(d2), p_.channel, h);
    return gamma_ccdf_term(x0 * std::pow(d2, -0.5 * alpha), m) * z * (los ? pl : 1.0 - pl);
  });
  return v + x0 * p_inf * std::pow(kFarField, 2.0 - alpha) / (alpha - 2.0);
}

// int_lower^inf s rho z^-a / (1 + s rho z^-a) z dz
double CoverageModel::tbs_term(double s, double lower) const {
  if (s == 0.0) return 0.0;
  const double a = p_.channel.alpha_t;
  const double x0 = s * p_.channel.rho_t;
  if (lower >= kFarField) return x0 * std::pow(lower, 2.0 - a) / (a - 2.0);
  const double first = 0.25 * std::max(lower, std::pow(x0, 1.0 / a));
  const auto rule = gauss_legendre_geometric(lower, kFarField, std::max(first, 1e-3));
  const double v = rule.apply([&](double z) {
    const double x = x0 * std::pow(z, -a);
    return x / (1.0 + x) * z;
  });
  return v + x0 * std::pow(kFarField, 2.0 - a) / (a - 2.0);
}

double CoverageModel::laplace_interference(double s, double r, LinkClass link) const {
  if (s < 0.0) throw std::domain_error("Laplace argument must be >= 0");
  if (s == 0.0) return 1.0;
  const double h = p_.geometry.h;
  const auto& c = p_.channel;
  auto ground = [h](double d) { return std::sqrt(std::max(0.0, d * d - h * h)); };
  double a = 0.0, b = 0.0, t = 0.0;  // exclusion radii for NLoS, LoS, TBS interferers
  switch (link) {
    case LinkClass::ClusterLoS:
    case LinkClass::ClusterNLoS:
      break;
    case LinkClass::NearbyLoS:
      a = ground(d_n(r));
      b = ground(r);
      t = d_lt(r);
      break;
    case LinkClass::NearbyNLoS:
      a = ground(r);
      b = ground(d_l(r));
      t = d_nt(r);
      break;
    case LinkClass::TBS:
      a = ground(d_tn(r));
      b = ground(d_tl(r));
      t = r;
      break;
  }
  double exponent = 0.0;
  if (lam_u_ > 0.0) {
    exponent += 2.0 * kPi * lam_u_ *
                (integral_term(s, a, c.eta_n * c.rho_u, c.alpha_n, c.m_n, false) +
                 integral_term(s, b, c.eta_l * c.rho_u, c.alpha_l, c.m_l, true));
  }
  if (p_.geometry.lambda_t > 0.0) exponent += 2.0 * kPi * p_.geometry.lambda_t * tbs_term(s, t);
  return std::exp(-exponent);
}

double CoverageModel::laplace_total(double s, double r, LinkClass link) const {
  return std::exp(-s * p_.channel.sigma_n2) * laplace_interference(s, r, link);
}

double CoverageModel::conditional_coverage(LinkClass link, double r, CoveragePath path,
                                           double* disagreement) const {
  const auto& c = p_.channel;
  if (link == LinkClass::TBS) {
    return laplace_total(c.gamma * std::pow(r, c.alpha_t) / c.rho_t, r, link);
  }
  const bool los = link == LinkClass::ClusterLoS || link == LinkClass::NearbyLoS;
  const int m = los ? c.m_l : c.m_n;
  const double eta = los ? c.eta_l : c.eta_n;
  const double alpha = los ? c.alpha_l : c.alpha_n;
  const double g = c.gamma * std::pow(r, alpha) / (eta * c.rho_u);
  auto L = [&](double s) { return laplace_total(s, r, link); };

  if (path == CoveragePath::Approx || m == 1) {
    const double b2 = alzer_beta2(m);
    double sum = 0.0;
    double binom = 1.0;
    for (int k = 1; k <= m; ++k) {
      binom = binom * (m - k + 1) / k;
      sum += binom * ((k % 2) ? 1.0 : -1.0) * L(k * b2 * m * g);
    }
    return std::clamp(sum, 0.0, 1.0);
  }
  if (m > 3) throw std::domain_error("exact coverage path supports m <= 3");
  const double s = m * g;
  double sum = L(s);
  double fact = 1.0;
  double pw = 1.0;
  for (int k = 1; k < m; ++k) {
    fact *= k;
    pw *= -s;
    const auto d = richardson_derivative(L, s, 0.2 * s, k);
    const double term = pw / fact * d.value;
    // Disagreement in probability units rather than relative to L^(k).
    if (disagreement) *disagreement = std::max(*disagreement, d.disagreement * std::abs(term));
    sum += term;
  }
  return std::clamp(sum, 0.0, 1.0);
}

double CoverageModel::outer(LinkClass link, CoveragePath path, double* disagreement) const {
  const double h = p_.geometry.h;
  const double rc = p_.geometry.r_c;
  switch (link) {
    case LinkClass::ClusterLoS:
    case LinkClass::ClusterNLoS: {
      const bool los = link == LinkClass::ClusterLoS;
      auto f = [&](double r) {
        const double pr = los ? p_los(r) : p_nlos(r);
        return conditional_coverage(link, r, path, disagreement) * pr * 2.0 * r / (rc * rc);
      };
      return integrate(f, h, std::sqrt(h * h + rc * rc), 1e-8, 1e-13);
    }
    case LinkClass::NearbyLoS:
    case LinkClass::NearbyNLoS: {
      if (lam_u_ == 0.0) return 0.0;
      auto f = [&](double r) {
        const double pdf = distance_pdf(link, r);
        if (pdf == 0.0) return 0.0;
        const double A = user_assoc_prob(link, r);
        if (A == 0.0) return 0.0;
        return A * pdf * conditional_coverage(link, r, path, disagreement);
      };
      return integrate_to_infinity(f, h, h, 20.0 * h, 1e-10, 1e-8, 1e-12);
    }
    case LinkClass::TBS: {
      const double lt = p_.geometry.lambda_t;
      if (lt == 0.0) return 0.0;
      auto f = [&](double r) {
        const double pdf = distance_pdf(link, r);
        if (pdf == 0.0) return 0.0;
        return user_assoc_prob(link, r) * pdf * conditional_coverage(link, r, path, disagreement);
      };
      const double scale = 1.0 / std::sqrt(lt);
      return integrate_to_infinity(f, 0.0, 0.25 * scale, 4.0 * scale, 1e-10, 1e-8, 1e-12);
    }
  }
  return 0.0;
}

double CoverageModel::fallback_association_mass() const {
  const double h = p_.geometry.h;
  double total = 0.0;
  if (lam_u_ > 0.0) {
    for (auto link : {LinkClass::NearbyLoS, LinkClass::NearbyNLoS}) {
      total += integrate_to_infinity(
          [&](double r) {
            const double pdf = distance_pdf(link, r);
            return pdf == 0.0 ? 0.0 : pdf * user_assoc_prob(link, r);
          },
          h, h, 20.0 * h, 1e-12, 1e-9, 1e-13);
    }
  }
  const double lt = p_.geometry.lambda_t;
  if (lt > 0.0) {
    const double scale = 1.0 / std::sqrt(lt);
    total += integrate_to_infinity(
        [&](double r) {
          const double pdf = distance_pdf(LinkClass::TBS, r);
          return pdf == 0.0 ? 0.0 : pdf * user_assoc_prob(LinkClass::TBS, r);
        },
        0.0, 0.25 * scale, 4.0 * scale, 1e-12, 1e-9, 1e-13);
  }
  return total;
}

CoverageBreakdown CoverageModel::breakdown(CoveragePath path) const {
  CoverageBreakdown b;
  b.P_a = P_a_;
  b.path = path;
  double dis = 0.0;
  double* d = path == CoveragePath::Exact ? &dis : nullptr;
  if (P_a_ > 0.0) {
    b.uo_l = outer(LinkClass::ClusterLoS, path, d);
    b.uo_n = outer(LinkClass::ClusterNLoS, path, d);
  }
  // Fallback components are reported even when P_a = 1.
  b.hat_l = outer(LinkClass::NearbyLoS, path, d);
  b.hat_n = outer(LinkClass::NearbyNLoS, path, d);
  b.t = outer(LinkClass::TBS, path, d);
  b.derivative_disagreement = dis;
  b.total = std::clamp(P_a_ * b.cluster() + (1.0 - P_a_) * b.fallback(), 0.0, 1.0);
  return b;
}

CoverageBreakdown total_coverage(const ParamSet& p, const AssociationPolicy& policy,
                                 const WaitTable& waits, CoveragePath path) {
  const auto a = availability(policy, p, waits);
  return CoverageModel(p, a.P_a).breakdown(path);
}

CoverageBreakdown upper_bound_coverage(const ParamSet& p, CoveragePath path) {
  return CoverageModel(p, 1.0).breakdown(path);
}

}  // namespace chargeshare
