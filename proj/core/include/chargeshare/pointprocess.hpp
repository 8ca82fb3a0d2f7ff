#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "chargeshare/params.hpp"

namespace chargeshare {

struct Window {
  double half_width;  // m, square [-w, w]^2
  double guard;       // m

  bool contains(double x, double y) const {
    return x >= -half_width && x <= half_width && y >= -half_width && y <= half_width;
  }
  bool interior(double x, double y) const {
    const double w = half_width - guard;
    return x >= -w && x <= w && y >= -w && y <= w;
  }
};

struct Point {
  double x;
  double y;
};

struct PointSet {
  std::vector<Point> points;
  double density;  // per m^2
};

/// Line {(x, y) : x cos(theta) + y sin(theta) = rho}.
struct Line {
  double theta;
  double rho;

  Point at(double s) const;  // s is the abscissa along the line from the foot point
};

struct PlcpRealization {
  std::vector<Line> lines;
  std::vector<std::vector<double>> stations;  // abscissae per line
  StationKind kind;

  std::vector<Point> station_points() const;
  std::size_t station_count() const;
};

PointSet sample_ppp(double density, const Window& w, std::uint64_t seed);

/// Poisson line process of offset intensity lambda_l (per m per radian),
/// with 1-D Poisson(lambda_p) stations on each in-window chord.
PlcpRealization sample_plcp(double lambda_l, double lambda_p, const Window& w, std::uint64_t seed,
                            StationKind kind = StationKind::EV);

/// Nearest-station distance law of a PLCP seen from a typical location.
double first_contact_cdf(double r, double lambda_l, double lambda_p);
double first_contact_ccdf(double r, double lambda_l, double lambda_p);
double first_contact_pdf(double r, double lambda_l, double lambda_p);
/// Smallest r with ccdf(r) <= eps.
double first_contact_quantile_tail(double eps, double lambda_l, double lambda_p);
double first_contact_mean(double lambda_l, double lambda_p);

/// Debug dump: one table of lines and one of station coordinates.
void write_realization_csv(const PlcpRealization& r, std::ostream& lines_out,
                           std::ostream& stations_out);

}  // namespace chargeshare
