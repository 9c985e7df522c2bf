#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

namespace tubecert {

/// Adaptive Gauss-Legendre quadrature of f over [a, b].
/// Splits intervals until the 10-point rule agrees with its bisection
/// within tol (absolute).
double adaptive_gauss(const std::function<double(double)>& f, double a,
                      double b, double tol);

/// Golden-section maximization of f on [lo, hi].
/// Returns (argmax, max). Tracks the best point ever evaluated, so the
/// result is valid also when f is only piecewise smooth.
std::pair<double, double> golden_max(const std::function<double(double)>& f,
                                     double lo, double hi, int iters = 80);

/// Bisection for a root of f on [lo, hi], assuming f(lo) <= 0 <= f(hi).
/// Stops when the bracket width is below rtol * max(|lo|, |hi|).
/// Returns the final bracket (lo, hi).
std::pair<double, double> bisect_root(const std::function<double(double)>& f,
                                      double lo, double hi, double rtol,
                                      int max_iter = 200);

uint64_t splitmix64(uint64_t& state);

/// Deterministic, platform-independent stream of doubles in [0, 1).
class RandomStream {
 public:
  explicit RandomStream(uint64_t seed) : state_(seed ^ 0x9e3779b97f4a7c15ull) {
    // warm up so that small seeds decorrelate
    splitmix64(state_);
    splitmix64(state_);
  }
  double uniform() {
    return static_cast<double>(splitmix64(state_) >> 11) * 0x1.0p-53;
  }
  double uniform(double a, double b) { return a + (b - a) * uniform(); }

 private:
  uint64_t state_;
};

std::vector<double> linspace(double a, double b, int n);
std::vector<double> logspace(double a, double b, int n);  // a, b > 0

}  // namespace tubecert
