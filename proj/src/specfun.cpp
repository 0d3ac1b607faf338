#include "cwidth/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cwidth {

double log_gamma(double x) {
  if (!(x > 0.0)) {
    throw std::invalid_argument("log_gamma: argument must be positive");
  }
  // Lanczos coefficients for g = 671/128 (Press et al., gammln form).
  static constexpr double cof[14] = {
      57.1562356658629235,     -59.5979603554754912,
      14.1360979747417471,     -0.491913816097620199,
      0.339946499848118887e-4, 0.465236289270485756e-4,
      -0.983744753048795646e-4, 0.158088703224912494e-3,
      -0.210264441724104883e-3, 0.217439618115212643e-3,
      -0.164318106536763890e-3, 0.844182239838527433e-4,
      -0.261908384015814087e-4, 0.368991826595316234e-5};
  double y = x;
  double tmp = x + 671.0 / 128.0;
  tmp = (x + 0.5) * std::log(tmp) - tmp;
  double ser = 0.999999999999997092;
  for (double c : cof) {
    ser += c / ++y;
  }
  return tmp + std::log(2.5066282746310005 * ser / x);
}

double log_unit_ball_volume(int n) {
  if (n < 1) {
    throw std::invalid_argument("log_unit_ball_volume: dimension must be >= 1");
  }
  const double half_n = 0.5 * static_cast<double>(n);
  return half_n * std::log(std::numbers::pi) - log_gamma(half_n + 1.0);
}

double log_sphere_surface(int n) {
  return std::log(static_cast<double>(n)) + log_unit_ball_volume(n);
}

double log_binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) {
    throw std::invalid_argument("log_binomial: need 0 <= k <= n");
  }
  // Evaluate with k <= n-k so that (n,k) and (n,n-k) share one expression.
  const int kk = std::min(k, n - k);
  return log_gamma(n + 1.0) - log_gamma(kk + 1.0) - log_gamma(n - kk + 1.0);
}

DimensionalConstants dimensional_constants(int n) {
  const double log_Omega = log_unit_ball_volume(n);
  return {n, std::log(static_cast<double>(n)) + log_Omega, log_Omega};
}

double log_add_exp(double a, double b) {
  if (std::isinf(a) && a < 0) return b;
  if (std::isinf(b) && b < 0) return a;
  const double m = std::max(a, b);
  return m + std::log1p(std::exp(std::min(a, b) - m));
}

double log_diff_exp(double a, double b) {
  if (b > a) {
    throw std::invalid_argument("log_diff_exp: requires a >= b");
  }
  if (std::isinf(b) && b < 0) return a;
  if (a == b) return -std::numeric_limits<double>::infinity();
  return a + std::log1p(-std::exp(b - a));
}

double log_sum_exp(std::span<const double> terms) {
  LogSumAccumulator acc;
  for (double t : terms) acc.add(t);
  return acc.value();
}

void LogSumAccumulator::add(double log_term) {
  ++count_;
  if (std::isinf(log_term) && log_term < 0) return;
  if (log_term <= max_) {
    sum_ += std::exp(log_term - max_);
  } else {
    sum_ = std::isinf(max_) ? 1.0 : sum_ * std::exp(max_ - log_term) + 1.0;
    max_ = log_term;
  }
}

double LogSumAccumulator::value() const {
  if (std::isinf(max_)) return max_;
  return max_ + std::log(sum_);
}

}  // namespace cwidth
