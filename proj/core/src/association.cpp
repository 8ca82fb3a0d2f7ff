#include "chargeshare/association.hpp"

#include <cmath>
#include <stdexcept>

#include "chargeshare/numerics.hpp"
#include "chargeshare/pointprocess.hpp"

namespace chargeshare {

std::pair<double, double> assoc_prob_conditional(double r, double beta_d, const GeometryParams& g) {
  if (r < 0.0 || !(beta_d > 0.0)) throw std::domain_error("need r >= 0 and beta_d > 0");
  return {first_contact_ccdf(r / beta_d, g.lambda_l, g.lambda_p_d),
          first_contact_ccdf(beta_d * r, g.lambda_l, g.lambda_p_ev)};
}

double association_truncation(const GeometryParams& g, double eps) {
  return std::max(first_contact_quantile_tail(eps, g.lambda_l, g.lambda_p_ev),
                  first_contact_quantile_tail(eps, g.lambda_l, g.lambda_p_d));
}

AssociationSplit assoc_prob(double beta_d, const GeometryParams& g) {
  if (beta_d < 0.0) throw std::domain_error("beta_d must be >= 0");
  if (beta_d == 0.0) return {0.0, 1.0};
  const double r_ev = first_contact_quantile_tail(1e-10, g.lambda_l, g.lambda_p_ev);
  const double r_d = first_contact_quantile_tail(1e-10, g.lambda_l, g.lambda_p_d);
  const double hi_ev = std::min(r_ev, beta_d * r_d);
  const double hi_d = std::min(r_d, r_ev / beta_d);
  auto f_ev = [&](double r) {
    return first_contact_ccdf(r / beta_d, g.lambda_l, g.lambda_p_d) *
           first_contact_pdf(r, g.lambda_l, g.lambda_p_ev);
  };
  auto f_d = [&](double r) {
    return first_contact_ccdf(r * beta_d, g.lambda_l, g.lambda_p_ev) *
           first_contact_pdf(r, g.lambda_l, g.lambda_p_d);
  };
  const double a_ev = integrate_pieces(f_ev, {0.0, 0.25 * hi_ev, hi_ev}, 1e-11, 1e-15);
  const double a_d = integrate_pieces(f_d, {0.0, 0.25 * hi_d, hi_d}, 1e-11, 1e-15);
  return {a_ev, a_d};
}

double cell_area_pdf(double area, double lambda_c, double A, GammaFit fit) {
  if (area <= 0.0) return 0.0;
  const double l = lambda_c / A;
  return std::exp(fit.a * std::log(fit.b) - log_gamma(fit.a) + std::log(l) +
                  (fit.a - 1.0) * std::log(l * area) - fit.b * l * area);
}

double biased_cell_pdf(double area, double lambda_c, double A, GammaFit fit) {
  if (area <= 0.0) return 0.0;
  const double l = lambda_c / A;
  return std::exp((fit.a + 1.0) * std::log(fit.b) - log_gamma(fit.a + 1.0) + std::log(l) +
                  fit.a * std::log(l * area) - fit.b * l * area);
}

double CellLoadPmf::mean() const {
  double m = 0.0;
  for (std::size_t n = 0; n < p.size(); ++n) m += n * p[n];
  return m;
}

namespace {
// Negative binomial: Gamma(shape) mixture of Poisson(lambda_u * C) with
// rate b * lambda_c / A.
CellLoadPmf negative_binomial(double shape, double lambda_c, double A, double lambda_u,
                              GammaFit fit, double tail) {
  CellLoadPmf out;
  if (lambda_u <= 0.0 || A <= 0.0) {
    out.p = {1.0};
    return out;
  }
  const double rate = fit.b * lambda_c / A;
  const double log_q = std::log(lambda_u / (rate + lambda_u));
  const double log_p = std::log(rate / (rate + lambda_u));
  const double lg_shape = log_gamma(shape);
  double mass = 0.0;
  constexpr int n_max = 2000;
  for (int n = 0; n <= n_max; ++n) {
    const double lp = log_gamma(shape + n) - lg_shape - log_gamma(n + 1.0) + shape * log_p + n * log_q;
    const double pn = std::exp(lp);
    out.p.push_back(pn);
    mass += pn;
    if (1.0 - mass < tail && n > shape * std::exp(log_q - log_p)) break;
  }
  out.tail_mass = std::max(0.0, 1.0 - mass);
  return out;
}
}  // namespace

CellLoadPmf uav_count_pmf(double lambda_c, double A, double lambda_u, GammaFit fit, double tail) {
  return negative_binomial(fit.a + 1.0, lambda_c, A, lambda_u, fit, tail);
}

CellLoadPmf station_load_pmf(double lambda_c, double A, double lambda_u, GammaFit fit,
                             double tail) {
  return negative_binomial(fit.a, lambda_c, A, lambda_u, fit, tail);
}

double conditional_distance_pdf(double y, double beta_d, StationKind kind, const GeometryParams& g,
                                const AssociationSplit& split) {
  if (y < 0.0) throw std::domain_error("y must be >= 0");
  if (kind == StationKind::EV) {
    return first_contact_ccdf(y / beta_d, g.lambda_l, g.lambda_p_d) *
           first_contact_pdf(y, g.lambda_l, g.lambda_p_ev) / split.A_ev;
  }
  return first_contact_ccdf(y * beta_d, g.lambda_l, g.lambda_p_ev) *
         first_contact_pdf(y, g.lambda_l, g.lambda_p_d) / split.A_d;
}

std::pair<double, double> thinning_split(double beta_o, double lambda_u) {
  if (beta_o < 0.0 || beta_o > 1.0) throw std::domain_error("beta_o must lie in [0,1]");
  return {beta_o * lambda_u, lambda_u - beta_o * lambda_u};
}

}  // namespace chargeshare
