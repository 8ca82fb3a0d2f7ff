#pragma once

#include <string_view>
#include <vector>

#include "chargeshare/params.hpp"

namespace chargeshare {

class WaitTable;

enum class LinkClass { ClusterLoS, ClusterNLoS, NearbyLoS, NearbyNLoS, TBS };
std::string_view to_string(LinkClass link);

enum class CoveragePath { Approx, Exact };
std::string_view to_string(CoveragePath path);

/// LoS probability at 3-D distance r >= h.
double los_probability(double r, const ChannelParams& ch, double h);

struct CoverageBreakdown {
  double P_a = 0.0;
  double uo_l = 0.0;   // cluster UAV, LoS
  double uo_n = 0.0;   // cluster UAV, NLoS
  double hat_l = 0.0;  // nearby available UAV, LoS
  double hat_n = 0.0;  // nearby available UAV, NLoS
  double t = 0.0;      // nearest TBS
  double total = 0.0;
  CoveragePath path = CoveragePath::Approx;
  double derivative_disagreement = 0.0;  // exact path only, absolute

  double cluster() const { return uo_l + uo_n; }
  double fallback() const { return hat_l + hat_n + t; }
};

/// Downlink model for one availability level. Available UAVs form a PPP of
/// density P_a * lambda_u; the cluster UAV is excluded from interference
/// when it is unavailable.
class CoverageModel {
 public:
  CoverageModel(const ParamSet& p, double P_a);

  double P_a() const { return P_a_; }
  double lambda_available() const { return lam_u_; }

  double p_los(double r) const;
  double p_nlos(double r) const { return 1.0 - p_los(r); }

  /// int_h^R r P(r) dr for LoS (los = true) or NLoS.
  double shell_integral(bool los, double R) const;

  /// Boundary radii of the strongest-average-power rule.
  double d_n(double r) const;
  double d_l(double r) const;
  double d_lt(double r) const;
  double d_nt(double r) const;
  double d_tl(double r) const;
  double d_tn(double r) const;

  /// Distance pdfs: cluster UAV (uniform user in the disk), nearest
  /// available LoS/NLoS UAV, nearest TBS.
  double distance_pdf(LinkClass link, double r) const;
  double distance_cdf(LinkClass link, double r) const;
  /// Probability that a serving candidate of class `link` at r wins the
  /// association (cluster links: 1).
  double user_assoc_prob(LinkClass link, double r) const;

  /// Laplace transform of the interference for serving class `link` at r.
  double laplace_interference(double s, double r, LinkClass link) const;
  /// exp(-s sigma^2) L_I(s, r).
  double laplace_total(double s, double r, LinkClass link) const;

  /// P(SINR >= gamma | r, link).
  double conditional_coverage(LinkClass link, double r, CoveragePath path,
                              double* disagreement = nullptr) const;

  CoverageBreakdown breakdown(CoveragePath path = CoveragePath::Approx) const;

  /// Sum over the fallback classes of int A(r) f(r) dr.
  double fallback_association_mass() const;

 private:
  double integral_term(double s, double lower, double scale, double alpha, int m, bool los) const;
  double tbs_term(double s, double lower) const;
  double outer(LinkClass link, CoveragePath path, double* disagreement) const;

  ParamSet p_;
  double P_a_;
  double lam_u_;
  double p_los_inf_;
  std::vector<double> knots_;  // log-spaced radii from h
  std::vector<double> cum_;    // int_h^knot r P_l(r) dr
};

double alzer_beta2(int m);

/// Total coverage with P_a from the availability module.
CoverageBreakdown total_coverage(const ParamSet& p, const AssociationPolicy& policy,
                                 const WaitTable& waits, CoveragePath path = CoveragePath::Approx);
/// No waiting, charging or travelling: P_a = 1.
CoverageBreakdown upper_bound_coverage(const ParamSet& p, CoveragePath path = CoveragePath::Approx);

}  // namespace chargeshare
