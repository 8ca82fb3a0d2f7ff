#pragma once

#include <utility>
#include <vector>

#include "chargeshare/params.hpp"

namespace chargeshare {

struct AssociationSplit {
  double A_ev;
  double A_d;
};

/// (A_ev|r, A_d|r); at r = 0 these are limits of a null conditioning event.
std::pair<double, double> assoc_prob_conditional(double r, double beta_d, const GeometryParams& g);

/// Unconditional split under biased-distance association. beta_d = 0 is
/// accepted as the no-sharing limit (A_ev = 0).
AssociationSplit assoc_prob(double beta_d, const GeometryParams& g);

/// Radius beyond which both first-contact CCDFs are below eps.
double association_truncation(const GeometryParams& g, double eps = 1e-8);

struct GammaFit {
  double a = 3.5;
  double b = 3.5;
};

/// Gamma approximation of the association-cell area (m^2) with effective
/// density lambda_c / A.
double cell_area_pdf(double area, double lambda_c, double A, GammaFit fit);
/// Size-biased version, normalised: b^(a+1)/Gamma(a+1) l^(a+1) c^a e^(-b l c).
double biased_cell_pdf(double area, double lambda_c, double A, GammaFit fit);

struct CellLoadPmf {
  std::vector<double> p;  // p[n] = P(n other UAVs)
  double tail_mass = 0.0;

  double mean() const;
  double operator[](std::size_t n) const { return n < p.size() ? p[n] : 0.0; }
};

/// Number of other UAVs in the cell of a typical UAV (negative binomial,
/// shape a + 1). Tail below 1e-6 and n_max capped at 2000.
CellLoadPmf uav_count_pmf(double lambda_c, double A, double lambda_u, GammaFit fit,
                          double tail = 1e-9);
/// Number of UAVs in the cell of a typical station (shape a).
CellLoadPmf station_load_pmf(double lambda_c, double A, double lambda_u, GammaFit fit,
                             double tail = 1e-9);

/// Serving distance pdf conditioned on association with `kind`.
double conditional_distance_pdf(double y, double beta_d, StationKind kind, const GeometryParams& g,
                                const AssociationSplit& split);

/// (beta_o lambda_u, (1 - beta_o) lambda_u)
std::pair<double, double> thinning_split(double beta_o, double lambda_u);

}  // namespace chargeshare
