#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace chargeshare {

class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, double estimate, double error)
      : std::runtime_error(what), estimate_(estimate), error_(error) {}
  double estimate() const noexcept { return estimate_; }
  double error() const noexcept { return error_; }

 private:
  double estimate_;
  double error_;
};

using Integrand = std::function<double(double)>;

/// Adaptive Gauss-Kronrod (15-point) on a finite interval. Throws
/// QuadratureError when the error estimate stays above
/// max(abs_tol, rel_tol * |I|).
double integrate(const Integrand& f, double a, double b, double rel_tol = 1e-10,
                 double abs_tol = 1e-14, unsigned max_depth = 18);

/// Same as integrate() but splits [a,b] at the given interior points first.
double integrate_pieces(const Integrand& f, std::vector<double> points, double rel_tol = 1e-10,
                        double abs_tol = 1e-14);

/// Integral over [a, inf) on geometrically growing panels. Stops once a
/// panel contributes less than `rel_stop` of the running total and the
/// panel start exceeds `min_extent`.
double integrate_to_infinity(const Integrand& f, double a, double first_width,
                             double min_extent = 0.0, double rel_stop = 1e-13,
                             double rel_tol = 1e-10, double abs_tol = 1e-16);

/// Fixed composite Gauss-Legendre rule (16 nodes per panel).
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  template <class F>
  double apply(F&& f) const {
    double s = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) s += weights[i] * f(nodes[i]);
    return s;
  }
};

QuadratureRule gauss_legendre_panels(double a, double b, int panels);
/// Panels [a, a+w], [a+w, a+3w], ... doubling in width until `b`.
QuadratureRule gauss_legendre_geometric(double a, double b, double first_width);

/// Golden-section maximisation on [a,b].
struct Extremum {
  double x;
  double value;
};
Extremum golden_section_max(const std::function<double(double)>& f, double a, double b,
                            double x_tol = 1e-6);

/// Richardson-extrapolated central differences. order in {1, 2}.
struct Derivative {
  double value;
  double disagreement;  // |D(h) - D(h/2)| relative to the result scale
};
Derivative richardson_derivative(const std::function<double(double)>& f, double x, double h,
                                 int order);

double log_gamma(double x);

/// Seed splitting: child seeds are a pure function of (master, index).
std::uint64_t splitmix64(std::uint64_t& state);
std::uint64_t child_seed(std::uint64_t master, std::uint64_t index);

struct MeanCI {
  double mean = 0.0;
  double half_width = 0.0;  // 95% confidence half width
  int batches = 0;
};

/// Mean and Student-t 95% half width across independent batch values.
MeanCI batch_mean_ci(const std::vector<double>& batch_values);

/// Evaluates fn(i) for i in [0, n) on up to `jobs` threads. Results are
/// stored by index so the output never depends on completion order.
template <class T, class F>
std::vector<T> parallel_map(std::size_t n, unsigned jobs, F&& fn) {
  std::vector<T> out(n);
  if (jobs <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(jobs, n));
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < n; i += workers) out[i] = fn(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

unsigned default_jobs();

}  // namespace chargeshare
