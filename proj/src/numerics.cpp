#include "tubecert/numerics.hpp"

#include <cmath>
#include <stdexcept>

namespace tubecert {

namespace {

// 10-point Gauss-Legendre nodes (positive half) and weights on [-1, 1].
constexpr double kGx[5] = {0.14887433898163121, 0.43339539412924719,
                           0.67940956829902441, 0.86506336668898451,
                           0.97390652851717172};
constexpr double kGw[5] = {0.29552422471475287, 0.26926671930999635,
                           0.21908636251598204, 0.14945134915058059,
                           0.066671344308688138};

double gauss10(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double sum = 0.0;
  for (int i = 0; i < 5; ++i) {
    sum += kGw[i] * (f(c - h * kGx[i]) + f(c + h * kGx[i]));
  }
  return h * sum;
}

double adaptive_gauss_rec(const std::function<double(double)>& f, double a,
                          double b, double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double left = gauss10(f, a, m);
  const double right = gauss10(f, m, b);
  const double delta = left + right - whole;
  if (std::abs(delta) <= tol || depth >= 48) {
    return left + right;
  }
  return adaptive_gauss_rec(f, a, m, left, 0.5 * tol, depth + 1) +
         adaptive_gauss_rec(f, m, b, right, 0.5 * tol, depth + 1);
}

}  // namespace

double adaptive_gauss(const std::function<double(double)>& f, double a,
                      double b, double tol) {
  if (a == b) return 0.0;
  return adaptive_gauss_rec(f, a, b, gauss10(f, a, b), tol, 0);
}

std::pair<double, double> golden_max(const std::function<double(double)>& f,
                                     double lo, double hi, int iters) {
  if (hi < lo) std::swap(lo, hi);
  const double invphi = 0.6180339887498949;
  double x1 = hi - invphi * (hi - lo);
  double x2 = lo + invphi * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  double best_x = f1 >= f2 ? x1 : x2;
  double best_f = f1 >= f2 ? f1 : f2;
  for (int i = 0; i < iters && hi - lo > 1e-15 * (1.0 + std::abs(lo)); ++i) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + invphi * (hi - lo);
      f2 = f(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - invphi * (hi - lo);
      f1 = f(x1);
    }
    if (f1 > best_f) {
      best_f = f1;
      best_x = x1;
    }
    if (f2 > best_f) {
      best_f = f2;
      best_x = x2;
    }
  }
  return {best_x, best_f};
}

std::pair<double, double> bisect_root(const std::function<double(double)>& f,
                                      double lo, double hi, double rtol,
                                      int max_iter) {
  double flo = f(lo);
  double fhi = f(hi);
  if (flo > 0.0 || fhi < 0.0) {
    throw std::invalid_argument("bisect_root: bracket does not straddle zero");
  }
  for (int i = 0; i < max_iter; ++i) {
    if (hi - lo <= rtol * std::max(std::abs(lo), std::abs(hi))) break;
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (fm <= 0.0) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
      fhi = fm;
    }
  }
  return {lo, hi};
}

uint64_t splitmix64(uint64_t& state) {
  uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::vector<double> linspace(double a, double b, int n) {
  if (n < 1) throw std::invalid_argument("linspace: n must be >= 1");
  std::vector<double> out(static_cast<size_t>(n));
  if (n == 1) {
    out[0] = a;
    return out;
  }
  for (int i = 0; i < n; ++i) {
    out[static_cast<size_t>(i)] = a + (b - a) * i / (n - 1);
  }
  out.back() = b;
  return out;
}

std::vector<double> logspace(double a, double b, int n) {
  if (a <= 0.0 || b <= 0.0) {
    throw std::invalid_argument("logspace: endpoints must be positive");
  }
  std::vector<double> out = linspace(std::log(a), std::log(b), n);
  for (double& x : out) x = std::exp(x);
  if (!out.empty()) out.back() = b;
  return out;
}

}  // namespace tubecert
