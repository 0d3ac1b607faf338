#include "cwidth/volume.hpp"

#include <cmath>
#include <numbers>

#include "cwidth/bounds.hpp"
#include "cwidth/quadrature.hpp"

namespace cwidth {

namespace {

constexpr double kZ95 = 1.959963984540054;  // 97.5% normal quantile

Eigen::VectorXd gaussian_vector(int n, std::mt19937_64& eng,
                                std::normal_distribution<double>& gauss) {
  Eigen::VectorXd g(n);
  for (int i = 0; i < n; ++i) g[i] = gauss(eng);
  return g;
}

}  // namespace

MomentIntegral moment_integral(int k, int n, double rel_tol, int panel_budget) {
  if (k < 1 || k > n - 1) {
    throw std::invalid_argument("moment_integral: need 1 <= k <= n-1");
  }
  const double B = 2.0 - std::numbers::sqrt2;
  // 1D reduction (1/k) * int_0^B (4-(b+sqrt2)^2)^{k/2} b^{n-k-1} db, integrated
  // in the variable u = sqrt(B - b): with 4-(b+sqrt2)^2 = u^2 (4-u^2) the
  // integrand becomes 2 u^{k+1} (4-u^2)^{k/2} (B-u^2)^{n-k-1}, analytic on
  // [0, sqrt(B)].
  const int b_exp = n - k - 1;
  auto log_f = [k, b_exp, B](double u) {
    const double u2 = u * u;
    double lf = std::numbers::ln2 + (k + 1) * std::log(u) + 0.5 * k * std::log(4.0 - u2);
    if (b_exp > 0) {
      const double d = B - u2;
      lf += b_exp * std::log(d > 0.0 ? d : 0.0);
    }
    return lf;
  };
  const LogIntegral q =
      adaptive_log_integrate(log_f, 0.0, std::sqrt(B), rel_tol, panel_budget);
  return {k, n, q.log_value - std::log(static_cast<double>(k)), q.est_rel_error};
}

VolumeResult exact_volume(int n, double rel_tol) {
  if (n < 2) throw std::invalid_argument("exact_volume: dimension must be >= 2");
  const double log_Omega_n = log_unit_ball_volume(n);
  LogSumAccumulator acc;
  // Pure orthants: M meets the (n,0) orthant in sqrt2 B^n and the (0,n)
  // orthant in (2-sqrt2) B^n.
  acc.add(n * (0.5 * std::numbers::ln2));
  acc.add(n * std::log(2.0 - std::numbers::sqrt2));
  for (int k = 1; k <= n - 1; ++k) {
    const MomentIntegral mi = moment_integral(k, n, rel_tol);
    acc.add(std::log(static_cast<double>(k)) + std::log(static_cast<double>(n - k)) +
            log_binomial(n, k) + log_unit_ball_volume(k) + log_unit_ball_volume(n - k) -
            log_Omega_n + mi.log_value);
  }
  const double log_volume = log_Omega_n - n * std::numbers::ln2 + acc.value();
  VolumeResult res;
  res.n = n;
  res.log_volume = log_volume;
  res.effective_radius = std::exp((log_volume - log_Omega_n) / n);
  res.method = VolumeMethod::quadrature;
  return res;
}

VolumeResult mc_volume(int n, long long samples, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("mc_volume: dimension must be >= 2");
  if (samples < 1) throw std::invalid_argument("mc_volume: need at least one sample");
  const BodySpec spec(n);
  std::mt19937_64 eng = make_engine(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> unif(0.0, 1.0);

  long long hits = 0;
  for (long long i = 0; i < samples; ++i) {
    Eigen::VectorXd g = gaussian_vector(n, eng, gauss);
    const double norm = g.norm();
    if (norm == 0.0) continue;  // measure-zero; counts as a miss
    // Uniform in sqrt2 * B^n: radius factor U^{1/n} taken in log space.
    const double radius =
        std::numbers::sqrt2 * std::exp(std::log(unif(eng)) / n);
    g *= radius / norm;
    if (contains(spec, g)) ++hits;
  }
  if (hits == 0) {
    throw std::runtime_error("mc_volume: zero hits, confidence interval degenerate");
  }
  const double p = static_cast<double>(hits) / static_cast<double>(samples);
  const double log_ball = n * (0.5 * std::numbers::ln2) + log_unit_ball_volume(n);
  const double se = std::sqrt(p * (1.0 - p) / static_cast<double>(samples));

  VolumeResult res;
  res.n = n;
  res.log_volume = std::log(p) + log_ball;
  res.effective_radius = std::numbers::sqrt2 * std::exp(std::log(p) / n);
  res.method = VolumeMethod::mc_rejection;
  const double lo = p - kZ95 * se;
  res.log_ci_low = lo > 0.0 ? std::log(lo) + log_ball
                            : -std::numeric_limits<double>::infinity();
  res.log_ci_high = std::log(p + kZ95 * se) + log_ball;
  res.samples = samples;
  res.seed = seed;
  return res;
}

namespace detail {

VolumeResult radial_result_from_log_moments(int n, long long samples,
                                            std::uint64_t seed, double shift,
                                            double sum1, double sum2) {
  const double N = static_cast<double>(samples);
  const double mean = sum1 / N;  // of exp(y - shift)
  const double log_mean = shift + std::log(mean);
  const double log_Omega_n = log_unit_ball_volume(n);

  VolumeResult res;
  res.n = n;
  res.log_volume = log_Omega_n + log_mean;
  res.effective_radius = std::exp(log_mean / n);
  res.method = VolumeMethod::mc_radial;
  res.samples = samples;
  res.seed = seed;
  if (samples > 1) {
    // CLT interval on the shifted-linear mean; delta is its relative half-width.
    double var = (sum2 / N - mean * mean) * (N / (N - 1.0));
    var = var > 0.0 ? var : 0.0;
    const double delta = kZ95 * std::sqrt(var / N) / mean;
    res.log_ci_low = delta < 1.0 ? res.log_volume + std::log1p(-delta)
                                 : -std::numeric_limits<double>::infinity();
    res.log_ci_high = res.log_volume + std::log1p(delta);
  }
  return res;
}

}  // namespace detail

VolumeResult mc_volume_radial(int n, long long samples, std::uint64_t seed) {
  std::mt19937_64 eng = make_engine(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  auto next_direction = [&]() {
    Eigen::VectorXd g = gaussian_vector(n, eng, gauss);
    double norm = g.norm();
    while (norm == 0.0) {
      g = gaussian_vector(n, eng, gauss);
      norm = g.norm();
    }
    return Eigen::VectorXd(g / norm);
  };
  return mc_volume_radial_with(n, samples, seed, next_direction);
}

RadiusTable radius_table(int n_from, int n_to, int step, double rel_tol) {
  if (n_from < 2 || n_to < n_from) {
    throw std::invalid_argument("radius_table: need 2 <= n_from <= n_to");
  }
  if (step < 1) throw std::invalid_argument("radius_table: step must be >= 1");
  const double s = minimize_s().s;
  RadiusTable table;
  for (int n = n_from; n <= n_to; n += step) {
    RadiusRow row;
    row.n = n;
    row.r_exact = exact_volume(n, rel_tol).effective_radius;
    row.r_lower_schramm = schramm_lower_bound(n);
    row.r_upper_eq4 = 0.5 * std::pow(n + 1.0, 1.0 / n) * s;
    if (!table.first_n_below_0p9 && row.r_exact < 0.9) {
      table.first_n_below_0p9 = n;
    }
    table.rows.push_back(row);
  }
  return table;
}

}  // namespace cwidth
