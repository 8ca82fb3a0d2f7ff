#include "chargeshare/pointprocess.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <random>
#include <stdexcept>

#include <fmt/format.h>

#include "chargeshare/numerics.hpp"

namespace chargeshare {

Point Line::at(double s) const {
  const double c = std::cos(theta);
  const double sn = std::sin(theta);
  return {rho * c - s * sn, rho * sn + s * c};
}

std::vector<Point> PlcpRealization::station_points() const {
  std::vector<Point> out;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (double s : stations[i]) out.push_back(lines[i].at(s));
  }
  return out;
}

std::size_t PlcpRealization::station_count() const {
  std::size_t n = 0;
  for (const auto& s : stations) n += s.size();
  return n;
}

PointSet sample_ppp(double density, const Window& w, std::uint64_t seed) {
  if (density < 0.0) throw std::invalid_argument("density must be >= 0");
  PointSet out{{}, density};
  if (density == 0.0) return out;
  std::mt19937_64 rng(seed);
  const double side = 2.0 * w.half_width;
  std::poisson_distribution<long> count(density * side * side);
  std::uniform_real_distribution<double> coord(-w.half_width, w.half_width);
  const long n = count(rng);
  out.points.reserve(n);
  for (long i = 0; i < n; ++i) {
    const double x = coord(rng);
    const double y = coord(rng);
    out.points.push_back({x, y});
  }
  return out;
}

namespace {
// Parameter range of the line inside the square window, Liang-Barsky style.
bool clip(const Line& l, double w, double& s0, double& s1) {
  const double c = std::cos(l.theta);
  const double sn = std::sin(l.theta);
  const double px = l.rho * c, py = l.rho * sn;
  const double dx = -sn, dy = c;
  s0 = -1e300;
  s1 = 1e300;
  auto edge = [&](double p0, double d) {
    if (std::abs(d) < 1e-15) return std::abs(p0) <= w;
    double a = (-w - p0) / d, b = (w - p0) / d;
    if (a > b) std::swap(a, b);
    s0 = std::max(s0, a);
    s1 = std::min(s1, b);
    return true;
  };
  if (!edge(px, dx) || !edge(py, dy)) return false;
  return s1 > s0;
}
}  // namespace

PlcpRealization sample_plcp(double lambda_l, double lambda_p, const Window& w, std::uint64_t seed,
                            StationKind kind) {
  if (lambda_l < 0.0 || lambda_p < 0.0) throw std::invalid_argument("densities must be >= 0");
  PlcpRealization out{{}, {}, kind};
  std::mt19937_64 rng(seed);
  const double rmax = w.half_width * std::numbers::sqrt2;
  std::poisson_distribution<long> n_lines(lambda_l * std::numbers::pi * 2.0 * rmax);
  std::uniform_real_distribution<double> angle(0.0, std::numbers::pi);
  std::uniform_real_distribution<double> offset(-rmax, rmax);
  const long n = n_lines(rng);
  for (long i = 0; i < n; ++i) {
    Line l{angle(rng), offset(rng)};
    double s0, s1;
    if (!clip(l, w.half_width, s0, s1)) continue;
    std::vector<double> pts;
    if (lambda_p > 0.0) {
      std::poisson_distribution<long> k(lambda_p * (s1 - s0));
      std::uniform_real_distribution<double> pos(s0, s1);
      const long m = k(rng);
      pts.reserve(m);
      for (long j = 0; j < m; ++j) pts.push_back(pos(rng));
      std::sort(pts.begin(), pts.end());
    }
    out.lines.push_back(l);
    out.stations.push_back(std::move(pts));
  }
  return out;
}

namespace {
// With rho = r sin(u): int_0^r 1 - exp(-2 lp sqrt(r^2 - rho^2)) d rho.
double chord_void(double r, double lp) {
  const double k = 2.0 * lp * r;
  return r * integrate([k](double u) { return -std::expm1(-k * std::cos(u)) * std::cos(u); }, 0.0,
                       std::numbers::pi / 2, 1e-13, 1e-300);
}
// int_0^r 2 lp r / sqrt(r^2 - rho^2) exp(-2 lp sqrt(r^2 - rho^2)) d rho.
double chord_density(double r, double lp) {
  const double k = 2.0 * lp * r;
  return k * integrate([k](double u) { return std::exp(-k * std::cos(u)); }, 0.0,
                       std::numbers::pi / 2, 1e-13, 1e-300);
}
void check(double r, double lambda_l, double lambda_p) {
  if (r < 0.0) throw std::domain_error("r must be >= 0");
  if (lambda_l < 0.0 || lambda_p < 0.0) throw std::domain_error("densities must be >= 0");
}
}  // namespace

double first_contact_ccdf(double r, double lambda_l, double lambda_p) {
  check(r, lambda_l, lambda_p);
  if (r == 0.0) return 1.0;
  return std::exp(-2.0 * std::numbers::pi * lambda_l * chord_void(r, lambda_p));
}

double first_contact_cdf(double r, double lambda_l, double lambda_p) {
  check(r, lambda_l, lambda_p);
  if (r == 0.0) return 0.0;
  return -std::expm1(-2.0 * std::numbers::pi * lambda_l * chord_void(r, lambda_p));
}

double first_contact_pdf(double r, double lambda_l, double lambda_p) {
  check(r, lambda_l, lambda_p);
  if (r == 0.0) return 0.0;
  const double two_pi_l = 2.0 * std::numbers::pi * lambda_l;
  return two_pi_l * chord_density(r, lambda_p) * std::exp(-two_pi_l * chord_void(r, lambda_p));
}

double first_contact_quantile_tail(double eps, double lambda_l, double lambda_p) {
  if (lambda_l <= 0.0 || lambda_p <= 0.0) throw std::domain_error("densities must be > 0");
  double hi = 1.0 / std::sqrt(std::numbers::pi * lambda_l * lambda_p);
  while (first_contact_ccdf(hi, lambda_l, lambda_p) > eps) hi *= 2.0;
  double lo = 0.0;
  for (int i = 0; i < 60 && hi - lo > 1e-6 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    (first_contact_ccdf(mid, lambda_l, lambda_p) > eps ? lo : hi) = mid;
  }
  return hi;
}

double first_contact_mean(double lambda_l, double lambda_p) {
  const double rmax = first_contact_quantile_tail(1e-14, lambda_l, lambda_p);
  return integrate([&](double r) { return first_contact_ccdf(r, lambda_l, lambda_p); }, 0.0, rmax,
                   1e-10);
}

void write_realization_csv(const PlcpRealization& r, std::ostream& lines_out,
                           std::ostream& stations_out) {
  lines_out << "line,theta_rad,rho_m\n";
  stations_out << "line,kind,abscissa_m,x_m,y_m\n";
  for (std::size_t i = 0; i < r.lines.size(); ++i) {
    lines_out << fmt::format("{},{},{}\n", i, r.lines[i].theta, r.lines[i].rho);
    for (double s : r.stations[i]) {
      const Point p = r.lines[i].at(s);
      stations_out << fmt::format("{},{},{},{},{}\n", i, to_string(r.kind), s, p.x, p.y);
    }
  }
}

}  // namespace chargeshare
