#include "chargeshare/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <boost/math/distributions/students_t.hpp>
#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <fmt/format.h>

namespace chargeshare {

namespace bq = boost::math::quadrature;

double integrate(const Integrand& f, double a, double b, double rel_tol, double abs_tol,
                 unsigned max_depth) {
  if (a == b) return 0.0;
  double err = 0.0;
  double l1 = 0.0;
  const double value = bq::gauss_kronrod<double, 15>::integrate(f, a, b, max_depth, rel_tol, &err, &l1);
  if (!std::isfinite(value)) {
    throw QuadratureError(fmt::format("non-finite integral on [{}, {}]", a, b), value, err);
  }
  const double allowed = std::max(abs_tol, 10.0 * rel_tol * l1);
  if (err > allowed && err > 1e3 * std::numeric_limits<double>::epsilon() * l1) {
    throw QuadratureError(
        fmt::format("quadrature did not converge on [{}, {}]: estimate {} error {}", a, b, value, err),
        value, err);
  }
  return value;
}

double integrate_pieces(const Integrand& f, std::vector<double> points, double rel_tol,
                        double abs_tol) {
  std::sort(points.begin(), points.end());
  double total = 0.0;
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (points[i] > points[i - 1]) total += integrate(f, points[i - 1], points[i], rel_tol, abs_tol);
  }
  return total;
}

double integrate_to_infinity(const Integrand& f, double a, double first_width, double min_extent,
                             double rel_stop, double rel_tol, double abs_tol) {
  double total = 0.0;
  double lo = a;
  double w = first_width;
  int quiet = 0;
  for (int panel = 0; panel < 200; ++panel) {
    const double part = integrate(f, lo, lo + w, rel_tol, abs_tol);
    total += part;
    lo += w;
    w *= 2.0;
    if (std::abs(part) <= rel_stop * std::abs(total) && lo >= min_extent) {
      if (++quiet >= 2) return total;
    } else {
      quiet = 0;
    }
    if (total == 0.0 && part == 0.0 && lo >= min_extent && panel > 40) return 0.0;
  }
  throw QuadratureError("semi-infinite integral did not settle", total, std::abs(total));
}

namespace {
void append_panel(QuadratureRule& rule, double lo, double hi) {
  using rule16 = bq::gauss<double, 16>;
  const auto& x = rule16::abscissa();
  const auto& w = rule16::weights();
  const double mid = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0.0) {
      rule.nodes.push_back(mid);
      rule.weights.push_back(half * w[i]);
      continue;
    }
    rule.nodes.push_back(mid - half * x[i]);
    rule.weights.push_back(half * w[i]);
    rule.nodes.push_back(mid + half * x[i]);
    rule.weights.push_back(half * w[i]);
  }
}
}  // namespace

QuadratureRule gauss_legendre_panels(double a, double b, int panels) {
  QuadratureRule rule;
  const double w = (b - a) / panels;
  for (int i = 0; i < panels; ++i) append_panel(rule, a + i * w, a + (i + 1) * w);
  return rule;
}

QuadratureRule gauss_legendre_geometric(double a, double b, double first_width) {
  QuadratureRule rule;
  double lo = a;
  double w = first_width;
  while (lo < b) {
    const double hi = std::min(b, lo + w);
    append_panel(rule, lo, hi);
    lo = hi;
    w *= 2.0;
  }
  return rule;
}

Extremum golden_section_max(const std::function<double(double)>& f, double a, double b,
                            double x_tol) {
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = b - invphi * (b - a);
  double x2 = a + invphi * (b - a);
  double f1 = f(x1);
  double f2 = f(x2);
  while (b - a > x_tol) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + invphi * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - invphi * (b - a);
      f1 = f(x1);
    }
  }
  return f1 > f2 ? Extremum{x1, f1} : Extremum{x2, f2};
}

Derivative richardson_derivative(const std::function<double(double)>& f, double x, double h,
                                 int order) {
  auto central = [&](double step) {
    if (order == 1) return (f(x + step) - f(x - step)) / (2.0 * step);
    return (f(x + step) - 2.0 * f(x) + f(x - step)) / (step * step);
  };
  const double d1 = central(h);
  const double d2 = central(h / 2.0);
  const double d4 = central(h / 4.0);
  const double r1 = (4.0 * d2 - d1) / 3.0;
  const double r2 = (4.0 * d4 - d2) / 3.0;
  const double value = (16.0 * r2 - r1) / 15.0;
  const double scale = std::max(std::abs(value), 1e-300);
  return {value, std::abs(r2 - r1) / scale};
}

double log_gamma(double x) { return boost::math::lgamma(x); }

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t child_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t s = master;
  const std::uint64_t base = splitmix64(s);
  std::uint64_t t = base ^ (index * 0xd1b54a32d192ed03ULL);
  splitmix64(t);
  return splitmix64(t);
}

MeanCI batch_mean_ci(const std::vector<double>& v) {
  MeanCI out;
  out.batches = static_cast<int>(v.size());
  if (v.empty()) return out;
  out.mean = std::accumulate(v.begin(), v.end(), 0.0) / v.size();
  if (v.size() < 2) return out;
  double ss = 0.0;
  for (double x : v) ss += (x - out.mean) * (x - out.mean);
  const double sd = std::sqrt(ss / (v.size() - 1));
  boost::math::students_t dist(static_cast<double>(v.size() - 1));
  out.half_width = boost::math::quantile(boost::math::complement(dist, 0.025)) * sd /
                   std::sqrt(static_cast<double>(v.size()));
  return out;
}

unsigned default_jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

}  // namespace chargeshare
