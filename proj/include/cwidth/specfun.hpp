#pragma once

#include <limits>
#include <span>

namespace cwidth {

/// ln Gamma(x) for x > 0, Lanczos series (g = 671/128, 14 terms).
/// Relative accuracy is ~1e-15 on [0.5, inf); no lookup into libm tables.
double log_gamma(double x);

/// ln of the unit-ball volume Omega_n = pi^{n/2} / Gamma(n/2 + 1).
/// Valid for n >= 1; stays finite for n up to 1e6.
double log_unit_ball_volume(int n);

/// ln of the sphere surface area omega_n = n * Omega_n.
double log_sphere_surface(int n);

/// ln C(n, k) via log-gamma. Exactly symmetric in k <-> n-k by construction.
double log_binomial(int n, int k);

/// Per-dimension constants bundled for consumers that need both.
struct DimensionalConstants {
  int n = 0;
  double log_omega_n = 0.0;  // ln(surface area of S^{n-1})
  double log_Omega_n = 0.0;  // ln(volume of B^n)
};

DimensionalConstants dimensional_constants(int n);

/// log(exp(a) + exp(b)) without overflow; handles -inf operands.
double log_add_exp(double a, double b);

/// log(exp(a) - exp(b)) for a >= b; returns -inf when a == b.
double log_diff_exp(double a, double b);

/// Max-shifted log(sum(exp(t))) over a term list.
double log_sum_exp(std::span<const double> terms);

/// Streaming max-shifted accumulator for sums of exp(log-terms).
/// Rescales on a new running maximum, so the shift tracks the largest term.
class LogSumAccumulator {
 public:
  void add(double log_term);
  /// log of the accumulated sum; -inf when empty or all terms were -inf.
  double value() const;
  long long count() const { return count_; }

 private:
  double max_ = -std::numeric_limits<double>::infinity();
  double sum_ = 0.0;  // sum of exp(term - max_)
  long long count_ = 0;
};

}  // namespace cwidth
