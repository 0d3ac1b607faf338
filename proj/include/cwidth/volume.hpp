#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <optional>
#include <vector>

#include "cwidth/body.hpp"
#include "cwidth/rng.hpp"
#include "cwidth/specfun.hpp"

namespace cwidth {

/// ln of the disk-segment moment integral over A of a^{k-1} b^{n-k-1} da db.
struct MomentIntegral {
  int k = 0;
  int n = 0;
  double log_value = 0.0;
  double est_abs_error = 0.0;  // quadrature error estimate on the log value
};

MomentIntegral moment_integral(int k, int n, double rel_tol = 1e-10,
                               int panel_budget = 10000);

enum class VolumeMethod { quadrature, mc_rejection, mc_radial };

struct VolumeResult {
  int n = 0;
  double log_volume = 0.0;
  double effective_radius = 0.0;  // exp((log_volume - ln Omega_n) / n)
  VolumeMethod method = VolumeMethod::quadrature;
  std::optional<double> log_ci_low;   // 95% CI bounds on the log volume
  std::optional<double> log_ci_high;
  std::optional<long long> samples;
  std::optional<std::uint64_t> seed;
};

/// Orthant-decomposition volume: ln Vol(M) assembled in log space from the
/// two pure-orthant terms and the k-sum of moment integrals.
VolumeResult exact_volume(int n, double rel_tol = 1e-10);

/// Rejection Monte Carlo in sqrt2 * B^n. Statistically useless past n ~ 25:
/// the acceptance rate decays like (r_n / sqrt2)^n.
VolumeResult mc_volume(int n, long long samples, std::uint64_t seed);

/// Radial Monte Carlo: Vol = Omega_n * E[rho(U)^n] over uniform unit U,
/// accumulated in log space. Works at every dimension.
VolumeResult mc_volume_radial(int n, long long samples, std::uint64_t seed);

/// Radial estimator with a caller-supplied direction sampler (unit vectors);
/// the public mc_volume_radial uses normalized Gaussian directions.
template <typename DirectionSampler>
VolumeResult mc_volume_radial_with(int n, long long samples, std::uint64_t seed,
                                   DirectionSampler&& next_direction);

struct RadiusRow {
  int n = 0;
  double r_exact = 0.0;          // quadrature
  double r_lower_schramm = 0.0;  // sqrt(3 + 2/(n+1)) - 1
  double r_upper_eq4 = 0.0;      // (n+1)^{1/n} * s / 2
};

struct RadiusTable {
  std::vector<RadiusRow> rows;
  std::optional<int> first_n_below_0p9;  // smallest computed n with r_n < 0.9
};

RadiusTable radius_table(int n_from, int n_to, int step = 1, double rel_tol = 1e-10);

// --- implementation of the templated radial estimator ---

namespace detail {

VolumeResult radial_result_from_log_moments(int n, long long samples,
                                            std::uint64_t seed, double shift,
                                            double sum1, double sum2);

}  // namespace detail

template <typename DirectionSampler>
VolumeResult mc_volume_radial_with(int n, long long samples, std::uint64_t seed,
                                   DirectionSampler&& next_direction) {
  if (n < 2) throw std::invalid_argument("mc_volume_radial: dimension must be >= 2");
  if (samples < 1) throw std::invalid_argument("mc_volume_radial: need at least one sample");
  const BodySpec spec(n);
  // Streaming max-shifted moments of rho^n: sum1 = sum exp(y - shift),
  // sum2 = sum exp(2(y - shift)) with y = n * ln rho.
  double shift = -std::numeric_limits<double>::infinity();
  double sum1 = 0.0, sum2 = 0.0;
  for (long long i = 0; i < samples; ++i) {
    const Eigen::VectorXd u = next_direction();
    const double y = n * std::log(radial_extent(spec, u));
    if (y <= shift) {
      const double e = std::exp(y - shift);
      sum1 += e;
      sum2 += e * e;
    } else {
      const double r = std::isinf(shift) ? 0.0 : std::exp(shift - y);
      sum1 = sum1 * r + 1.0;
      sum2 = sum2 * r * r + 1.0;
      shift = y;
    }
  }
  return detail::radial_result_from_log_moments(n, samples, seed, shift, sum1, sum2);
}

}  // namespace cwidth
